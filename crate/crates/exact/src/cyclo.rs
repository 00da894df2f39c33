//! Cyclotomic quotient fields `Q[t] / Phi_d(t)` and matrices over them.
//!
//! The field acts as the arithmetic context: elements are bare coefficient
//! vectors of length `deg Phi_d` and every operation goes through a
//! [`CycloField`]. Inverses come from the extended Euclidean algorithm
//! modulo `Phi_d`, which is irreducible, so every nonzero element is a unit.

use num_traits::{One, Zero};

use crate::poly::{cyclotomic_polynomial, QPolynomial};
use crate::rational::Rat;
use crate::{ExactError, Result};

/// The cyclotomic field of conductor `d`, presented as `Q[t]/Phi_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloField {
    conductor: usize,
    modulus: QPolynomial,
}

/// An element of a cyclotomic field: the residue class of a polynomial in
/// the field generator, stored as exactly `deg Phi_d` rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem {
    coeffs: Vec<Rat>,
}

impl CycloElem {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl CycloField {
    /// Build the field of conductor `d >= 1`.
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(ExactError::Domain("cyclotomic conductor must be >= 1".into()));
        }
        Ok(CycloField {
            conductor: d,
            modulus: cyclotomic_polynomial(d)?,
        })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn modulus(&self) -> &QPolynomial {
        &self.modulus
    }

    /// Degree of the field extension, `deg Phi_d = phi(d)`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem {
            coeffs: vec![Rat::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycloElem {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, c: Rat) -> CycloElem {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// The class of the generator `t` (a primitive d-th root of unity).
    pub fn generator(&self) -> CycloElem {
        self.reduce(&QPolynomial::monomial(Rat::one(), 1))
    }

    /// Reduce an arbitrary polynomial into the field.
    pub fn reduce(&self, p: &QPolynomial) -> CycloElem {
        let (_, r) = p.divmod(&self.modulus).expect("modulus is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), Rat::zero());
        CycloElem { coeffs }
    }

    fn check(&self, e: &CycloElem) -> Result<()> {
        if e.coeffs.len() != self.degree() {
            return Err(ExactError::FieldMismatch(format!(
                "element has {} coefficients, field of conductor {} needs {}",
                e.coeffs.len(),
                self.conductor,
                self.degree()
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(CycloElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> Result<CycloElem> {
        self.check(a)?;
        self.check(b)?;
        let pa = QPolynomial::new(a.coeffs.clone());
        let pb = QPolynomial::new(b.coeffs.clone());
        Ok(self.reduce(&pa.mul(&pb)))
    }

    pub fn scale(&self, a: &CycloElem, c: &Rat) -> CycloElem {
        CycloElem {
            coeffs: a.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: &CycloElem) -> Result<CycloElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(ExactError::Domain("inverse of zero field element".into()));
        }
        let pa = QPolynomial::new(a.coeffs.clone());
        let (g, s, _) = QPolynomial::ext_gcd(&pa, &self.modulus)?;
        if g.degree() != Some(0) {
            // Phi_d is irreducible over Q, so this cannot happen
            return Err(ExactError::Domain("element not invertible".into()));
        }
        Ok(self.reduce(&s))
    }

    /// `a^e` for a signed exponent (negative exponents use the inverse).
    pub fn pow(&self, a: &CycloElem, e: i64) -> Result<CycloElem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq)?;
            }
            sq = self.mul(&sq, &sq)?;
            exp >>= 1;
        }
        Ok(acc)
    }
}

/// A dense matrix over one cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    field: CycloField,
    rows: usize,
    cols: usize,
    entries: Vec<CycloElem>,
}

impl CycloMatrix {
    /// Build from entries; every entry must belong to `field`, otherwise a
    /// field-mismatch error is raised.
    pub fn new(field: CycloField, rows: usize, cols: usize, entries: Vec<CycloElem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(ExactError::Shape(format!(
                "{}x{} cyclotomic matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            field.check(e)?;
        }
        Ok(CycloMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: CycloField, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        CycloMatrix {
            entries: vec![z; rows * cols],
            field,
            rows,
            cols,
        }
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &CycloElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloElem) -> Result<()> {
        self.field.check(&v)?;
        self.entries[r * self.cols + c] = v;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Rank together with a right kernel basis, by Gauss-Jordan elimination
    /// with extended-Euclid inverses in the field.
    pub fn rank_and_kernel(&self) -> Result<(usize, Vec<Vec<CycloElem>>)> {
        let f = &self.field;
        let mut rows: Vec<Vec<CycloElem>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for pc in 0..self.cols {
            let Some(hit) = (rank..rows.len()).find(|&r| !rows[r][pc].is_zero()) else {
                continue;
            };
            rows.swap(rank, hit);
            let inv = f.inv(&rows[rank][pc])?;
            for c in pc..self.cols {
                rows[rank][c] = f.mul(&rows[rank][c], &inv)?;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][pc].is_zero() {
                    let factor = rows[r][pc].clone();
                    for c in pc..self.cols {
                        let delta = f.mul(&factor, &rows[rank][c])?;
                        rows[r][c] = f.sub(&rows[r][c], &delta)?;
                    }
                }
            }
            pivots.push(pc);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        let mut kernel = Vec::new();
        for fcol in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[fcol] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                // RREF: pivot entry is 1, so v[pc] = -row[i][fcol]
                v[pc] = f.neg(&rows[i][fcol]);
            }
            kernel.push(v);
        }
        Ok((rank, kernel))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rank_and_kernel()?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn field_of_conductor_one_is_q() {
        let f = CycloField::new(1).unwrap();
        assert_eq!(f.degree(), 1);
        // generator reduces to 1
        assert_eq!(f.generator(), f.one());
    }

    #[test]
    fn generator_satisfies_modulus() {
        for d in [1usize, 2, 3, 4, 5, 6, 8, 12] {
            let f = CycloField::new(d).unwrap();
            let g = f.generator();
            // evaluate Phi_d at the generator inside the field
            let mut acc = f.zero();
            for c in f.modulus().coeffs().iter().rev() {
                acc = f.mul(&acc, &g).unwrap();
                acc = f.add(&acc, &f.from_rat(c.clone())).unwrap();
            }
            assert!(acc.is_zero(), "Phi_{d} at its own root");
        }
    }

    #[test]
    fn generator_has_multiplicative_order_d() {
        for d in [1usize, 2, 3, 4, 6, 5, 10, 12] {
            let f = CycloField::new(d).unwrap();
            let g = f.generator();
            assert_eq!(f.pow(&g, d as i64).unwrap(), f.one());
            for e in 1..d {
                assert_ne!(f.pow(&g, e as i64).unwrap(), f.one(), "d={d} e={e}");
            }
        }
    }

    #[test]
    fn inverse_in_q_zeta6() {
        let f = CycloField::new(6).unwrap();
        let g = f.generator();
        let inv = f.inv(&g).unwrap();
        assert_eq!(f.mul(&g, &inv).unwrap(), f.one());
        // zeta_6^-1 = zeta_6^5 = 1 - zeta_6 in Q[t]/(t^2 - t + 1)
        assert_eq!(inv.coeffs(), &[rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn rank_and_kernel_over_cyclotomic_field() {
        let f = CycloField::new(4).unwrap();
        let g = f.generator(); // i
        // [[1, i], [i, -1]] has rank 1, kernel spanned by (-i, 1)
        let m = CycloMatrix::new(
            f.clone(),
            2,
            2,
            vec![
                f.one(),
                g.clone(),
                g.clone(),
                f.neg(&f.one()),
            ],
        )
        .unwrap();
        let (rank, ker) = m.rank_and_kernel().unwrap();
        assert_eq!(rank, 1);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0][0], f.neg(&g));
        assert_eq!(ker[0][1], f.one());
    }

    #[test]
    fn mixed_field_entries_are_rejected() {
        let f4 = CycloField::new(4).unwrap();
        let f5 = CycloField::new(5).unwrap();
        let bad = CycloMatrix::new(f4.clone(), 1, 2, vec![f4.one(), f5.one()]);
        assert!(matches!(bad, Err(ExactError::FieldMismatch(_))));
    }
}
