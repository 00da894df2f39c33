//! Dense matrices over the rationals.
//!
//! Rank and kernel go through fraction-free (Bareiss-style) elimination on a
//! denominator-cleared integer copy, which keeps intermediate entries as
//! minors of the input instead of arbitrary fractions. A naive rational
//! row-reduction is kept as an independent second code path; the two are
//! cross-checked by property tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::QPolynomial;
use crate::rational::Rat;
use crate::{ExactError, Result};

/// A dense rows x cols matrix of rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(ExactError::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(ExactError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a * other.at(k, c);
                    *out.at_mut(r, c) += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(ExactError::Shape("trace of non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.at(i, i)).sum())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Rank together with a basis of the right kernel.
    ///
    /// Elimination is fraction-free over a denominator-cleared integer copy;
    /// the kernel basis is recovered by exact back-substitution (one vector
    /// per free column, with 1 in the free position).
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        // clear denominators row by row
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in self.row(r) {
                    lcm = lcm.lcm(c.denom());
                }
                self.row(r)
                    .iter()
                    .map(|c| c.numer() * (&lcm / c.denom()))
                    .collect()
            })
            .collect();

        let mut pivot_cols = Vec::new();
        let mut prev_pivot = BigInt::one();
        let mut pr = 0; // pivot row
        for pc in 0..self.cols {
            let Some(hit) = (pr..self.rows).find(|&r| !m[r][pc].is_zero()) else {
                continue;
            };
            m.swap(pr, hit);
            let pivot = m[pr][pc].clone();
            for r in pr + 1..self.rows {
                let factor = m[r][pc].clone();
                for c in 0..self.cols {
                    let val = (&pivot * &m[r][c] - &factor * &m[pr][c]) / &prev_pivot;
                    m[r][c] = val;
                }
            }
            prev_pivot = pivot;
            pivot_cols.push(pc);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        let rank = pivot_cols.len();

        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut kernel = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for i in (0..rank).rev() {
                let pc = pivot_cols[i];
                let mut acc = Rat::zero();
                for c in pc + 1..self.cols {
                    if !m[i][c].is_zero() && !v[c].is_zero() {
                        acc += Rat::from(m[i][c].clone()) * &v[c];
                    }
                }
                v[pc] = -acc / Rat::from(m[i][pc].clone());
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        self.rank_and_kernel().0
    }

    /// Rank by naive rational row reduction with first-nonzero pivoting.
    ///
    /// Independent of [`QMatrix::rank_and_kernel`]; exists as the second code
    /// path for cross-checking.
    pub fn rank_naive(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for pc in 0..self.cols {
            let Some(hit) = (rank..rows.len()).find(|&r| !rows[r][pc].is_zero()) else {
                continue;
            };
            rows.swap(rank, hit);
            let inv = Rat::one() / rows[rank][pc].clone();
            for c in pc..self.cols {
                rows[rank][c] = &rows[rank][c] * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][pc].is_zero() {
                    let factor = rows[r][pc].clone();
                    for c in pc..self.cols {
                        let delta = &factor * &rows[rank][c];
                        rows[r][c] = &rows[r][c] - delta;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Apply the matrix to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(ExactError::Shape("vector length != cols".into()));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Solve `self * x = rhs` for one solution of a consistent system.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if rhs.len() != self.rows {
            return Err(ExactError::Shape("rhs length != rows".into()));
        }
        // Gauss-Jordan on the augmented matrix
        let mut rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for pc in 0..self.cols {
            let Some(hit) = (rank..rows.len()).find(|&r| !rows[r][pc].is_zero()) else {
                continue;
            };
            rows.swap(rank, hit);
            let inv = Rat::one() / rows[rank][pc].clone();
            for c in pc..=self.cols {
                rows[rank][c] = &rows[rank][c] * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][pc].is_zero() {
                    let factor = rows[r][pc].clone();
                    for c in pc..=self.cols {
                        let delta = &factor * &rows[rank][c];
                        rows[r][c] = &rows[r][c] - delta;
                    }
                }
            }
            pivots.push(pc);
            rank += 1;
        }
        // inconsistent iff a zero row has nonzero rhs
        for r in rank..rows.len() {
            if !rows[r][self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Exact inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Result<Option<QMatrix>> {
        if !self.is_square() {
            return Err(ExactError::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                }));
                row
            })
            .collect();
        for pc in 0..n {
            let Some(hit) = (pc..n).find(|&r| !rows[r][pc].is_zero()) else {
                return Ok(None);
            };
            rows.swap(pc, hit);
            let inv = Rat::one() / rows[pc][pc].clone();
            for c in 0..2 * n {
                rows[pc][c] = &rows[pc][c] * &inv;
            }
            for r in 0..n {
                if r != pc && !rows[r][pc].is_zero() {
                    let factor = rows[r][pc].clone();
                    for c in 0..2 * n {
                        let delta = &factor * &rows[pc][c];
                        rows[r][c] = &rows[r][c] - delta;
                    }
                }
            }
        }
        let entries = rows
            .into_iter()
            .flat_map(|row| row[n..].to_vec())
            .collect();
        Ok(Some(QMatrix::new(n, n, entries)?))
    }

    /// Characteristic polynomial `det(tI - M)`, monic of degree `rows`,
    /// computed by the Faddeev-LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<QPolynomial> {
        if !self.is_square() {
            return Err(ExactError::Shape(
                "characteristic polynomial of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut aux = QMatrix::identity(n);
        for k in 1..=n {
            let mn = self.mul(&aux)?;
            let c = -(mn.trace()? / Rat::from(BigInt::from(k)));
            coeffs[n - k] = c.clone();
            aux = mn;
            for i in 0..n {
                *aux.at_mut(i, i) += &c;
            }
        }
        Ok(QPolynomial::new(coeffs))
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}

impl std::fmt::Display for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", crate::rational::format_rational(self.at(r, c)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel_examples() {
        let (rank, ker) = QMatrix::identity(3).rank_and_kernel();
        assert_eq!((rank, ker.len()), (3, 0));

        let (rank, ker) = QMatrix::zeros(2, 2).rank_and_kernel();
        assert_eq!((rank, ker.len()), (0, 2));

        let (rank, ker) = m(&[&[1, 2], &[2, 4]]).rank_and_kernel();
        assert_eq!(rank, 1);
        assert_eq!(ker, vec![vec![rat(-2, 1), rat(1, 1)]]);
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (rank, ker) = a.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(a.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn charpoly_examples() {
        let p = m(&[&[5]]).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[rat(-5, 1), rat(1, 1)]);

        let p = m(&[&[0, 1], &[-1, 0]]).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[rat(1, 1), rat(0, 1), rat(1, 1)]);

        let p = QMatrix::zeros(2, 2).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn charpoly_rejects_non_square() {
        assert!(QMatrix::zeros(2, 3).charpoly().is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), QMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[rat(1, 1), rat(2, 1)]).unwrap().is_some());
        assert!(a.solve(&[rat(1, 1), rat(3, 1)]).unwrap().is_none());
    }
}
