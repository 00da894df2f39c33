//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty coefficient vector. Division, gcd and root extraction are all
//! exact. Root extraction is deliberately limited to integer and rational
//! roots: that is the decision primitive needed by the eigenvalue
//! integrality tests, and it avoids any numerical factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;
use crate::{ExactError, Result};

/// Which integer roots to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMode {
    AnyInteger,
    NonnegInteger,
}

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<Rat>,
}

impl QPolynomial {
    /// Build from coefficients (lowest degree first), trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPolynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        QPolynomial::new(vec![c])
    }

    /// The monomial `c * t^n`.
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        QPolynomial::new(coeffs)
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[0] = -Rat::one();
        coeffs[n] = Rat::one();
        QPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divmod(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(ExactError::Domain("division by zero polynomial".into()));
        }
        let dd = div.degree().unwrap();
        let lead_inv = Rat::one() / div.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().clone() * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let idx = k + i;
                    let delta = &factor * c;
                    rem[idx] = rem[idx].clone() - delta;
                }
                quo[k] = factor;
            }
            rem.pop();
        }
        Ok((QPolynomial::new(quo), QPolynomial::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Result<Self> {
        let (q, r) = self.divmod(div)?;
        if !r.is_zero() {
            return Err(ExactError::Domain("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Make the polynomial monic (nonzero input).
    pub fn monic(&self) -> Result<Self> {
        let lead = self
            .leading_coeff()
            .ok_or_else(|| ExactError::Domain("monic of zero polynomial".into()))?
            .clone();
        Ok(self.scale(&(Rat::one() / lead)))
    }

    /// Clear denominators: the primitive integer coefficient list sharing the
    /// roots of `self`.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    /// Exactly the integer roots of a nonzero polynomial, sorted ascending.
    ///
    /// Multiplicities are not reported. Candidates are the divisors of the
    /// trailing nonzero coefficient (after clearing denominators), with 0
    /// included when `t` divides the polynomial; each candidate is confirmed
    /// by exact evaluation.
    pub fn integer_roots(&self, mode: RootMode) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let ints = self.integer_coeffs();
        let valuation = ints.iter().position(|c| !c.is_zero()).unwrap();
        let mut roots = Vec::new();
        if valuation > 0 {
            roots.push(BigInt::zero());
        }
        let stripped = &ints[valuation..];
        if stripped.len() > 1 {
            let trailing = stripped[0].abs();
            for d in divisors(&trailing) {
                for cand in [d.clone(), -d] {
                    if eval_int(stripped, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        if mode == RootMode::NonnegInteger {
            roots.retain(|r| !r.is_negative());
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// All rational roots with multiplicities, sorted ascending.
    pub fn rational_roots(&self) -> Result<Vec<(Rat, usize)>> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let ints = self.integer_coeffs();
        let valuation = ints.iter().position(|c| !c.is_zero()).unwrap();
        let mut out = Vec::new();
        if valuation > 0 {
            out.push((Rat::zero(), valuation));
        }
        let mut current = QPolynomial::new(
            ints[valuation..]
                .iter()
                .map(|c| Rat::from(c.clone()))
                .collect(),
        );
        if current.degree() == Some(0) {
            return Ok(out);
        }
        let trailing = current.coeffs[0].numer().abs();
        let leading = current.leading_coeff().unwrap().numer().abs();
        let mut candidates = Vec::new();
        for p in divisors(&trailing) {
            for q in divisors(&leading) {
                if p.gcd(&q).is_one() {
                    candidates.push(Rat::new(p.clone(), q.clone()));
                    candidates.push(Rat::new(-p.clone(), q));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        for cand in candidates {
            let mut mult = 0;
            while !current.is_zero()
                && current.degree() >= Some(1)
                && current.eval(&cand).is_zero()
            {
                let factor =
                    QPolynomial::new(vec![-cand.clone(), Rat::one()]);
                current = current.div_exact(&factor)?;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// An exact upper bound for the absolute value of every complex root.
    ///
    /// When the polynomial splits over the rationals the bound is the exact
    /// maximum |root|; otherwise the classical Cauchy bound
    /// `1 + max |c_i / c_d|` is used.
    pub fn abs_root_bound(&self) -> Result<Rat> {
        let deg = self.degree().ok_or(ExactError::ZeroPolynomial)?;
        if deg == 0 {
            return Ok(Rat::zero());
        }
        let roots = self.rational_roots()?;
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        if total == deg {
            let max = roots
                .iter()
                .map(|(r, _)| r.abs())
                .max()
                .unwrap_or_else(Rat::zero);
            return Ok(max);
        }
        let lead = self.leading_coeff().unwrap();
        let max = self.coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rat::zero);
        Ok(Rat::one() + max)
    }

    /// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic or zero.
    pub fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0 = QPolynomial::one();
        let mut s1 = QPolynomial::zero();
        let mut t0 = QPolynomial::zero();
        let mut t1 = QPolynomial::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let lead = r0.leading_coeff().unwrap().clone();
        let inv = Rat::one() / lead;
        Ok((
            r0.scale(&inv),
            s0.scale(&inv),
            t0.scale(&inv),
        ))
    }
}

impl std::fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", crate::rational::format_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", crate::rational::format_rational(&a))?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs
}

/// The d-th cyclotomic polynomial, by exact division of `t^d - 1` by the
/// product of the cyclotomic polynomials of the proper divisors of d.
pub fn cyclotomic_polynomial(d: usize) -> Result<QPolynomial> {
    if d == 0 {
        return Err(ExactError::Domain("cyclotomic polynomial needs d >= 1".into()));
    }
    let mut table: Vec<Option<QPolynomial>> = vec![None; d + 1];
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mut quotient = QPolynomial::t_pow_minus_one(e);
        for f in 1..e {
            if e % f == 0 {
                let phi_f = table[f].as_ref().unwrap();
                quotient = quotient.div_exact(phi_f)?;
            }
        }
        table[e] = Some(quotient);
    }
    Ok(table[d].take().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn divmod_exact() {
        let a = p(&[-1, 0, 0, 0, 0, 0, 1]); // t^6 - 1
        let b = p(&[-1, 1]); // t - 1
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn integer_roots_examples() {
        // t^2 + 1 has no integer roots
        assert_eq!(p(&[1, 0, 1]).integer_roots(RootMode::AnyInteger).unwrap(), vec![]);
        // t^2 - t = t(t - 1)
        let r = p(&[0, -1, 1]).integer_roots(RootMode::NonnegInteger).unwrap();
        assert_eq!(r, vec![BigInt::from(0), BigInt::from(1)]);
        // (t + 2)(t - 1/2) = t^2 + 3/2 t - 1
        let q = QPolynomial::new(vec![rat(-1, 1), rat(3, 2), rat(1, 1)]);
        assert_eq!(q.integer_roots(RootMode::AnyInteger).unwrap(), vec![BigInt::from(-2)]);
        assert_eq!(q.integer_roots(RootMode::NonnegInteger).unwrap(), vec![]);
    }

    #[test]
    fn integer_roots_zero_poly_is_error() {
        assert!(QPolynomial::zero().integer_roots(RootMode::AnyInteger).is_err());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (t - 1/2)^2 (t + 3)
        let q = QPolynomial::new(vec![rat(-1, 2), rat(1, 1)]);
        let poly = q.mul(&q).mul(&p(&[3, 1]));
        let roots = poly.rational_roots().unwrap();
        assert_eq!(roots, vec![(rat(-3, 1), 1), (rat(1, 2), 2)]);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).unwrap(), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_t_pow_minus_one() {
        for n in 1..=24usize {
            let mut prod = QPolynomial::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic_polynomial(d).unwrap());
                }
            }
            assert_eq!(prod, QPolynomial::t_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn abs_root_bound_is_tight_on_split_polynomials() {
        // (t - 1/3): exact bound 1/3
        let q = QPolynomial::new(vec![rat(-1, 3), rat(1, 1)]);
        assert_eq!(q.abs_root_bound().unwrap(), rat(1, 3));
        // t^2 + 1 does not split: Cauchy bound 1 + 1 = 2
        assert_eq!(p(&[1, 0, 1]).abs_root_bound().unwrap(), rat(2, 1));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]); // t^2 + 1
        let b = p(&[-1, 1]); // t - 1
        let (g, s, t) = QPolynomial::ext_gcd(&a, &b).unwrap();
        assert_eq!(g, QPolynomial::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), QPolynomial::one());
    }
}
