//! Residues and monodromy classes at edges, the nonresonance deciders, the
//! constructive integer shift, and the search for nonresonant translates.
//!
//! Four conditions are implemented, all decided exactly through integer
//! roots of characteristic polynomials of edge residues:
//!
//! * `kohno`: no residue at any edge has an integer eigenvalue;
//! * `ah(H)`: no residue at a dense edge inside the hyperplane `H`
//!   (including `H` itself) has an integer eigenvalue;
//! * `stv`: no residue at any dense edge has a nonnegative integer
//!   eigenvalue;
//! * `thm33`: the `stv` test plus a verified commutativity hypothesis on
//!   the endomorphisms; a commutativity failure is reported, not thrown.

use exact::{format_rational, QMatrix, QPolynomial, Rat, RootMode};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::lattice::{Flat, IntersectionLattice};
use crate::oscomplex::{EndoSystem, System, WeightSystem};
use crate::{Error, Result};

/// The residue of a system at an edge: the sum of the coefficients of the
/// hyperplanes containing the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    /// Closed index set of the flat.
    pub indices: Vec<usize>,
    pub value: ResidueValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidueValue {
    Scalar(Rat),
    Matrix(QMatrix),
}

impl ResidueValue {
    /// Characteristic polynomial of the residue (degree 1 for scalars).
    pub fn charpoly(&self) -> QPolynomial {
        match self {
            ResidueValue::Scalar(x) => {
                QPolynomial::new(vec![-x.clone(), Rat::from_integer(1.into())])
            }
            ResidueValue::Matrix(m) => m.charpoly().expect("residues are square"),
        }
    }

    /// Integer eigenvalues in the requested mode.
    pub fn integer_eigenvalues(&self, mode: RootMode) -> Vec<BigInt> {
        self.charpoly()
            .integer_roots(mode)
            .expect("characteristic polynomials are nonzero")
    }
}

/// Exact residue of a system at a flat.
pub fn residue(system: &System, flat: &Flat) -> Result<Residue> {
    for &h in &flat.indices {
        if h > system.len() {
            return Err(Error::validation(format!(
                "flat references hyperplane {h}, system has {}",
                system.len()
            )));
        }
    }
    let value = match system {
        System::Weights(w) => {
            ResidueValue::Scalar(flat.indices.iter().map(|&h| w.weight(h)).sum())
        }
        System::Endos(e) => {
            let mut sum = QMatrix::zeros(e.rank(), e.rank());
            for &h in &flat.indices {
                sum = sum.add(e.matrix(h)).map_err(Error::Exact)?;
            }
            ResidueValue::Matrix(sum)
        }
    };
    Ok(Residue {
        indices: flat.indices.clone(),
        value,
    })
}

/// The conjugacy class of the monodromy around an edge, in the
/// flat-connection realization `T_X ~ exp(+-2 pi i P_X)`.
///
/// When the characteristic polynomial of the residue splits over the
/// rationals, the eigenvalue exponents are reported reduced mod 1;
/// otherwise only the characteristic polynomial is attached and the class
/// supports integrality queries alone.
#[derive(Debug, Clone)]
pub struct MonodromyClass {
    pub indices: Vec<usize>,
    /// Eigenvalue exponents mod 1 (in `[0, 1)`), when rational.
    pub exponents: Option<Vec<Rat>>,
    pub charpoly: QPolynomial,
    /// Whether `T_X` admits 1 as an eigenvalue, i.e. whether the residue
    /// has an integer eigenvalue.
    pub admits_one: bool,
}

pub fn monodromy_class(system: &System, flat: &Flat) -> Result<MonodromyClass> {
    let res = residue(system, flat)?;
    let charpoly = res.value.charpoly();
    let admits_one = !res.value.integer_eigenvalues(RootMode::AnyInteger).is_empty();
    let roots = charpoly.rational_roots().map_err(Error::Exact)?;
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    let exponents = if total == charpoly.degree().unwrap_or(0) {
        let mut exps = Vec::new();
        for (root, mult) in roots {
            let frac = &root - root.floor();
            exps.extend(std::iter::repeat(frac).take(mult));
        }
        exps.sort();
        Some(exps)
    } else {
        None
    };
    Ok(MonodromyClass {
        indices: flat.indices.clone(),
        exponents,
        charpoly,
        admits_one,
    })
}

/// Which nonresonance condition to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    Kohno,
    Stv,
    Thm33,
    Ah,
}

impl ConditionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionKind::Kohno => "kohno",
            ConditionKind::Stv => "stv",
            ConditionKind::Thm33 => "thm33",
            ConditionKind::Ah => "ah",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "kohno" => Ok(ConditionKind::Kohno),
            "stv" => Ok(ConditionKind::Stv),
            "thm33" => Ok(ConditionKind::Thm33),
            "ah" => Ok(ConditionKind::Ah),
            other => Err(Error::validation(format!(
                "unknown condition '{other}' (expected kohno|stv|thm33|ah)"
            ))),
        }
    }
}

impl std::fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One offending edge: a flat whose residue has a forbidden integer
/// eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub integer_root: BigInt,
}

/// Outcome of a condition check.
#[derive(Debug, Clone)]
pub struct NonresReport {
    pub condition: ConditionKind,
    pub holds: bool,
    pub hyperplane: Option<usize>,
    pub violations: Vec<Violation>,
    /// Pairs of endomorphisms that fail the commutativity hypothesis of the
    /// commuting-family condition (`thm33` only).
    pub hypothesis_failures: Vec<(usize, usize)>,
}

impl NonresReport {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "condition": self.condition.as_str(),
            "holds": self.holds,
            "hyperplane": self.hyperplane,
            "violations": self
                .violations
                .iter()
                .map(|v| json!({"flat": v.indices, "integer_root": v.integer_root.to_string()}))
                .collect::<Vec<_>>(),
        });
        if self.condition == ConditionKind::Thm33 {
            out["hypothesis_failures"] = json!(self.hypothesis_failures);
        }
        out
    }
}

/// Check a nonresonance condition for a system against a lattice.
///
/// `h` is required for the per-hyperplane condition and ignored otherwise.
pub fn check_condition(
    system: &System,
    kind: ConditionKind,
    lattice: &IntersectionLattice,
    h: Option<usize>,
) -> Result<NonresReport> {
    let m = lattice.arrangement().size();
    if system.len() != m {
        return Err(Error::validation(format!(
            "system has {} coefficients, arrangement has {m} hyperplanes",
            system.len()
        )));
    }
    let hyperplane = match kind {
        ConditionKind::Ah => {
            let h = h.ok_or_else(|| {
                Error::validation("the per-hyperplane condition needs a hyperplane index")
            })?;
            if h < 1 || h > m {
                return Err(Error::validation(format!(
                    "hyperplane index {h} out of range 1..={m}"
                )));
            }
            Some(h)
        }
        _ => None,
    };

    let mode = match kind {
        ConditionKind::Kohno | ConditionKind::Ah => RootMode::AnyInteger,
        ConditionKind::Stv | ConditionKind::Thm33 => RootMode::NonnegInteger,
    };
    let quantified: Vec<&Flat> = lattice
        .flats()
        .iter()
        .filter(|f| f.codim >= 1)
        .filter(|f| match kind {
            ConditionKind::Kohno => true,
            ConditionKind::Stv | ConditionKind::Thm33 => f.dense,
            ConditionKind::Ah => f.dense && f.contains_hyperplane(hyperplane.unwrap()),
        })
        .collect();

    let mut violations = Vec::new();
    for flat in quantified {
        let res = residue(system, flat)?;
        for root in res.value.integer_eigenvalues(mode) {
            violations.push(Violation {
                indices: flat.indices.clone(),
                integer_root: root,
            });
        }
    }

    let mut hypothesis_failures = Vec::new();
    if kind == ConditionKind::Thm33 {
        if let System::Endos(e) = system {
            for i in 1..=m {
                for j in i + 1..=m {
                    let c = e.matrix(i).commutator(e.matrix(j)).map_err(Error::Exact)?;
                    if !c.is_zero() {
                        hypothesis_failures.push((i, j));
                    }
                }
            }
        }
    }

    Ok(NonresReport {
        condition: kind,
        holds: violations.is_empty() && hypothesis_failures.is_empty(),
        hyperplane,
        violations,
        hypothesis_failures,
    })
}

/// Shift a system that passes the per-hyperplane condition at `h` into one
/// that passes the dense-edge nonnegativity condition.
///
/// A positive integer `q` strictly exceeding every |eigenvalue| of the
/// residues at dense edges not inside `h` is computed from exact root
/// bounds (`q = 1 + floor(bound)`); the returned system replaces `P_h` by
/// `P_h + (m-1) q I` and every other `P_j` by `P_j - q I`. That the output
/// passes the dense-edge test is asserted before returning; a failure would
/// contradict the translate construction and is surfaced loudly.
pub fn nonres_shift(
    system: &System,
    h: usize,
    lattice: &IntersectionLattice,
) -> Result<(System, u64)> {
    let precondition = check_condition(system, ConditionKind::Ah, lattice, Some(h))?;
    if !precondition.holds {
        return Err(Error::validation(format!(
            "system is not nonresonant along hyperplane {h}: {} violations",
            precondition.violations.len()
        )));
    }
    let mut bound = Rat::zero();
    for flat in lattice.flats().iter().filter(|f| f.codim >= 1 && f.dense) {
        if flat.contains_hyperplane(h) {
            continue;
        }
        let res = residue(system, flat)?;
        let b = res.value.charpoly().abs_root_bound().map_err(Error::Exact)?;
        if b > bound {
            bound = b;
        }
    }
    let q_int: BigInt = bound.floor().numer().clone() + 1;
    let q: u64 = (&q_int)
        .try_into()
        .map_err(|_| Error::validation("shift exceeds the representable range"))?;
    let shift = Rat::from_integer(q_int);

    let m = system.len();
    let shifted = match system {
        System::Weights(w) => {
            let weights = (1..=m)
                .map(|j| {
                    if j == h {
                        w.weight(j) + &shift * Rat::from_integer((m as i64 - 1).into())
                    } else {
                        w.weight(j) - &shift
                    }
                })
                .collect();
            System::Weights(WeightSystem::new(weights)?)
        }
        System::Endos(e) => {
            let r = e.rank();
            let identity = QMatrix::identity(r);
            let matrices = (1..=m)
                .map(|j| {
                    let delta = if j == h {
                        identity.scale(&(&shift * Rat::from_integer((m as i64 - 1).into())))
                    } else {
                        identity.scale(&-shift.clone())
                    };
                    e.matrix(j).add(&delta).map_err(Error::Exact)
                })
                .collect::<Result<Vec<_>>>()?;
            System::Endos(EndoSystem::new(r, matrices)?)
        }
    };

    let post = check_condition(&shifted, ConditionKind::Stv, lattice, None)?;
    assert!(
        post.holds,
        "shift with q = {q} at hyperplane {h} failed the dense-edge test: {:?}",
        post.violations
    );
    Ok((shifted, q))
}

/// The smallest hyperplane index along which the per-hyperplane condition
/// holds, if any.
///
/// Integer translates `P_j + k_j I` with zero-sum `k` shift every
/// eigenvalue of a residue by an integer, so having an integer eigenvalue
/// is translate-invariant; a translate satisfying the per-hyperplane
/// condition therefore exists iff the test already passes for some `h`.
pub fn translate_exists(system: &System, lattice: &IntersectionLattice) -> Result<Option<usize>> {
    for h in 1..=lattice.arrangement().size() {
        if check_condition(system, ConditionKind::Ah, lattice, Some(h))?.holds {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Translate a system by a zero-sum integer vector.
pub fn translate(system: &System, k: &[i64]) -> Result<System> {
    if k.len() != system.len() {
        return Err(Error::validation(format!(
            "translation vector has {} entries, system has {}",
            k.len(),
            system.len()
        )));
    }
    if k.iter().sum::<i64>() != 0 {
        return Err(Error::validation("translation vector must sum to zero"));
    }
    Ok(match system {
        System::Weights(w) => {
            let weights = w
                .weights()
                .iter()
                .zip(k)
                .map(|(x, &ki)| x + Rat::from_integer(ki.into()))
                .collect();
            System::Weights(WeightSystem::new(weights)?)
        }
        System::Endos(e) => {
            let identity = QMatrix::identity(e.rank());
            let matrices = e
                .matrices()
                .iter()
                .zip(k)
                .map(|(p, &ki)| {
                    p.add(&identity.scale(&Rat::from_integer(ki.into())))
                        .map_err(Error::Exact)
                })
                .collect::<Result<Vec<_>>>()?;
            System::Endos(EndoSystem::new(e.rank(), matrices)?)
        }
    })
}

/// Pretty-print a residue value for reports.
pub fn format_residue(r: &Residue) -> String {
    match &r.value {
        ResidueValue::Scalar(x) => format_rational(x),
        ResidueValue::Matrix(m) => format!("{m}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin_arrangement;
    use crate::oscomplex::WeightSystem;
    use exact::rat;

    fn weights(vals: &[(i64, i64)]) -> System {
        System::Weights(WeightSystem::new(vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap())
    }

    fn cdo1() -> IntersectionLattice {
        IntersectionLattice::build(&builtin_arrangement("cdo-ex1").unwrap()).unwrap()
    }

    fn paper_weights_1() -> System {
        weights(&[(1, 2), (1, 2), (1, 2), (1, 2), (-2, 1)])
    }

    fn paper_weights_2() -> System {
        weights(&[(-5, 3), (1, 3), (-5, 3), (1, 3), (7, 3), (1, 3)])
    }

    #[test]
    fn residues_at_the_worked_examples() {
        let lat = cdo1();
        let triple = lat.flat_by_indices(&[1, 2, 5]).unwrap();
        let r = residue(&paper_weights_1(), triple).unwrap();
        assert_eq!(r.value, ResidueValue::Scalar(rat(-1, 1)));

        let single = lat.flat_by_indices(&[3]).unwrap();
        let r = residue(&paper_weights_1(), single).unwrap();
        assert_eq!(r.value, ResidueValue::Scalar(rat(1, 2)));

        let lat2 = IntersectionLattice::build(&builtin_arrangement("cdo-ex2").unwrap()).unwrap();
        let x135 = lat2.flat_by_indices(&[1, 3, 5]).unwrap();
        let r = residue(&paper_weights_2(), x135).unwrap();
        assert_eq!(r.value, ResidueValue::Scalar(rat(-1, 1)));
    }

    #[test]
    fn monodromy_classes() {
        let lat = cdo1();
        let triple = lat.flat_by_indices(&[1, 2, 5]).unwrap();

        let c = monodromy_class(&paper_weights_1(), triple).unwrap();
        assert!(c.admits_one);
        assert_eq!(c.exponents, Some(vec![rat(0, 1)]));

        let third = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        let c = monodromy_class(&third, triple).unwrap();
        assert!(!c.admits_one);
        assert_eq!(c.exponents, Some(vec![rat(1, 3)]));

        let zero = weights(&[(0, 1); 5]);
        let c = monodromy_class(&zero, triple).unwrap();
        assert!(c.admits_one);
    }

    #[test]
    fn stv_holds_for_the_first_worked_example() {
        let lat = cdo1();
        let report = check_condition(&paper_weights_1(), ConditionKind::Stv, &lat, None).unwrap();
        assert!(report.holds, "{:?}", report.violations);
    }

    #[test]
    fn ah_fails_everywhere_for_the_first_worked_example() {
        let lat = cdo1();
        for h in 1..=5 {
            let report =
                check_condition(&paper_weights_1(), ConditionKind::Ah, &lat, Some(h)).unwrap();
            assert!(!report.holds, "h = {h}");
            assert!(
                report
                    .violations
                    .iter()
                    .any(|v| v.integer_root == BigInt::from(-1)),
                "h = {h}: expected a violation with integer root -1, got {:?}",
                report.violations
            );
        }
    }

    #[test]
    fn ah_holds_for_nonintegral_weights() {
        let lat = cdo1();
        let third = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        let report = check_condition(&third, ConditionKind::Ah, &lat, Some(5)).unwrap();
        assert!(report.holds, "{:?}", report.violations);
    }

    #[test]
    fn ah_requires_a_hyperplane() {
        let lat = cdo1();
        assert!(check_condition(&paper_weights_1(), ConditionKind::Ah, &lat, None).is_err());
    }

    #[test]
    fn kohno_implies_ah_for_every_hyperplane() {
        let lat = cdo1();
        let third = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        let kohno = check_condition(&third, ConditionKind::Kohno, &lat, None).unwrap();
        assert!(kohno.holds);
        for h in 1..=5 {
            assert!(
                check_condition(&third, ConditionKind::Ah, &lat, Some(h))
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn ah_and_stv_are_incomparable() {
        let lat = cdo1();
        // the nonnegativity test holds but the per-hyperplane test fails for
        // every hyperplane (worked example 1)
        assert!(
            check_condition(&paper_weights_1(), ConditionKind::Stv, &lat, None)
                .unwrap()
                .holds
        );
        assert!(translate_exists(&paper_weights_1(), &lat).unwrap().is_none());
        // ah(1) holds but the weight at H5 is the nonnegative integer 1
        let mixed = weights(&[(1, 3), (1, 3), (1, 3), (-2, 1), (1, 1)]);
        assert!(
            check_condition(&mixed, ConditionKind::Ah, &lat, Some(1))
                .unwrap()
                .holds
        );
        assert!(
            !check_condition(&mixed, ConditionKind::Stv, &lat, None)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn thm33_reports_commutativity_failures() {
        let generic = builtin_arrangement("generic(3)").unwrap();
        let lat = IntersectionLattice::build(&generic).unwrap();
        let upper = QMatrix::new(2, 2, vec![rat(0, 1), rat(1, 3), rat(0, 1), rat(0, 1)]).unwrap();
        let lower = QMatrix::new(2, 2, vec![rat(0, 1), rat(0, 1), rat(1, 3), rat(0, 1)]).unwrap();
        let third = QMatrix::zeros(2, 2).sub(&upper.add(&lower).unwrap()).unwrap();
        let e = System::Endos(EndoSystem::new(2, vec![upper, lower, third]).unwrap());
        let report = check_condition(&e, ConditionKind::Thm33, &lat, None).unwrap();
        assert!(!report.holds);
        assert!(report.hypothesis_failures.contains(&(1, 2)));
    }

    #[test]
    fn shift_on_the_derived_example() {
        let lat = cdo1();
        let third = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        let (shifted, q) = nonres_shift(&third, 5, &lat).unwrap();
        assert_eq!(q, 1);
        let System::Weights(w) = &shifted else {
            panic!("rank 1 in, rank 1 out")
        };
        assert_eq!(
            w.weights(),
            &[rat(-2, 3), rat(-2, 3), rat(-2, 3), rat(-2, 3), rat(8, 3)]
        );
        assert!(
            check_condition(&shifted, ConditionKind::Stv, &lat, None)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn shift_precondition_failure() {
        // three generic lines with an integer weight on the chosen line
        let a = builtin_arrangement("generic(3)").unwrap();
        let lat = IntersectionLattice::build(&a).unwrap();
        let bad = weights(&[(1, 2), (1, 2), (-1, 1)]);
        assert!(nonres_shift(&bad, 3, &lat).is_err());
    }

    #[test]
    fn translate_exists_on_the_worked_examples() {
        let lat = cdo1();
        assert_eq!(translate_exists(&paper_weights_1(), &lat).unwrap(), None);

        let lat2 = IntersectionLattice::build(&builtin_arrangement("cdo-ex2").unwrap()).unwrap();
        assert_eq!(translate_exists(&paper_weights_2(), &lat2).unwrap(), None);

        let third = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        assert_eq!(translate_exists(&third, &lat).unwrap(), Some(1));
    }

    #[test]
    fn translation_preserves_integer_eigenvalue_detection() {
        let lat = cdo1();
        let base = weights(&[(1, 3), (1, 3), (1, 3), (1, 3), (-4, 3)]);
        for k in [[1i64, -1, 0, 0, 0], [2, 3, -1, -4, 0], [-5, 1, 1, 1, 2]] {
            let moved = translate(&base, &k).unwrap();
            for flat in lat.flats().iter().filter(|f| f.codim >= 1) {
                let before = residue(&base, flat).unwrap().value;
                let after = residue(&moved, flat).unwrap().value;
                assert_eq!(
                    before.integer_eigenvalues(RootMode::AnyInteger).is_empty(),
                    after.integer_eigenvalues(RootMode::AnyInteger).is_empty()
                );
            }
            for h in 1..=5 {
                let b = check_condition(&base, ConditionKind::Ah, &lat, Some(h)).unwrap();
                let a = check_condition(&moved, ConditionKind::Ah, &lat, Some(h)).unwrap();
                assert_eq!(b.holds, a.holds, "k = {k:?}, h = {h}");
            }
        }
    }

    #[test]
    fn report_serializes_with_violations() {
        let lat = cdo1();
        let report = check_condition(&paper_weights_1(), ConditionKind::Ah, &lat, Some(5)).unwrap();
        let v = report.to_json();
        assert_eq!(v["condition"], "ah");
        assert_eq!(v["holds"], false);
        assert_eq!(v["hyperplane"], 5);
        assert!(!v["violations"].as_array().unwrap().is_empty());
    }
}
