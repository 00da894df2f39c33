//! The Orlik-Solomon algebra of an affine arrangement via NBC monomials,
//! and the Aomoto complex (B, w^) for rank-1 weight systems and rank-r
//! endomorphism systems, with exact cohomology dimensions.
//!
//! Projective input is handled on the decone model: the complex of a
//! projective arrangement is realized as the OS algebra of its decone, with
//! the deconed hyperplane's weight carried implicitly by the zero-sum
//! constraint. Dependent monomials are straightened through circuit
//! boundary relations; monomials with empty intersection are zero.

use std::collections::HashMap;

use exact::{format_rational, parse_rational, QMatrix, Rat};
use num_traits::Zero;
use serde_json::Value;

use crate::arrangement::{Arrangement, Kind};
use crate::lattice::IntersectionLattice;
use crate::{Error, Result};

/// Rank-1 weights, one rational per hyperplane, summing to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rat>,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::validation("weight system needs at least one weight"));
        }
        let sum: Rat = weights.iter().sum();
        if !sum.is_zero() {
            return Err(Error::validation(format!(
                "weights must sum to zero, got {}",
                format_rational(&sum)
            )));
        }
        Ok(WeightSystem { weights })
    }

    /// Parse a comma- or whitespace-separated list of rationals.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let mut weights = Vec::with_capacity(tokens.len());
        for t in &tokens {
            weights.push(parse_rational(t).map_err(Error::Exact)?);
        }
        WeightSystem::new(weights)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// 1-based access.
    pub fn weight(&self, h: usize) -> &Rat {
        &self.weights[h - 1]
    }
}

/// Rank-r endomorphisms, one r x r matrix per hyperplane, summing to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoSystem {
    rank: usize,
    matrices: Vec<QMatrix>,
}

impl EndoSystem {
    pub fn new(rank: usize, matrices: Vec<QMatrix>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::validation("endomorphism rank must be >= 1"));
        }
        if matrices.is_empty() {
            return Err(Error::validation("endomorphism system needs at least one matrix"));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::validation(format!(
                    "matrix {} is {}x{}, expected {rank}x{rank}",
                    i + 1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut sum = QMatrix::zeros(rank, rank);
        for m in &matrices {
            sum = sum.add(m)?;
        }
        if !sum.is_zero() {
            return Err(Error::validation("endomorphisms must sum to zero"));
        }
        Ok(EndoSystem { rank, matrices })
    }

    /// Parse the JSON file format
    /// `{"rank": r, "matrices": [[["1/2", ...], ...], ...]}` with rational
    /// entries as strings.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::validation(format!("bad endomorphism JSON: {e}")))?;
        let rank = v["rank"]
            .as_u64()
            .ok_or_else(|| Error::validation("endomorphism JSON needs an integer 'rank'"))?
            as usize;
        let arrays = v["matrices"]
            .as_array()
            .ok_or_else(|| Error::validation("endomorphism JSON needs a 'matrices' array"))?;
        let mut matrices = Vec::with_capacity(arrays.len());
        for m in arrays {
            let rows = m
                .as_array()
                .ok_or_else(|| Error::validation("each matrix must be an array of rows"))?;
            let mut entries = Vec::with_capacity(rank * rank);
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::validation("each row must be an array"))?;
                for e in row {
                    let s = e.as_str().ok_or_else(|| {
                        Error::validation("matrix entries must be rational strings")
                    })?;
                    entries.push(parse_rational(s).map_err(Error::Exact)?);
                }
            }
            matrices.push(QMatrix::new(rank, rank, entries).map_err(Error::Exact)?);
        }
        EndoSystem::new(rank, matrices)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    /// 1-based access.
    pub fn matrix(&self, h: usize) -> &QMatrix {
        &self.matrices[h - 1]
    }
}

/// Either a rank-1 weight system or a rank-r endomorphism system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum System {
    Weights(WeightSystem),
    Endos(EndoSystem),
}

impl System {
    pub fn len(&self) -> usize {
        match self {
            System::Weights(w) => w.len(),
            System::Endos(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        match self {
            System::Weights(_) => 1,
            System::Endos(e) => e.rank(),
        }
    }

    /// The coefficient of hyperplane `h` as an r x r matrix.
    pub fn coefficient(&self, h: usize) -> QMatrix {
        match self {
            System::Weights(w) => QMatrix::new(1, 1, vec![w.weight(h).clone()]).expect("1x1"),
            System::Endos(e) => e.matrix(h).clone(),
        }
    }
}

/// A circuit of an affine (or central) arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    /// Sorted 1-based hyperplane indices.
    pub indices: Vec<usize>,
    /// True for a minimal dependent set with nonempty intersection; false
    /// for a minimal set with empty intersection (degeneracy relation).
    pub central: bool,
}

/// Enumerate all circuits, smallest first.
pub fn circuits(a: &Arrangement) -> Result<Vec<Circuit>> {
    let model = affine_view(a)?;
    let geom = AffineGeometry::new(&model);
    let m = model.size();
    if m > 30 {
        return Err(Error::Resource(format!(
            "{m} hyperplanes exceeds the circuit enumeration guard of 30"
        )));
    }
    let max_size = (geom.hom_dim + 2).min(m);
    let mut found: Vec<(u64, bool)> = Vec::new();
    let all: Vec<usize> = (0..m).collect();
    for size in 2..=max_size {
        for combo in combinations(&all, size) {
            let mask: u64 = combo.iter().map(|&j| 1u64 << j).sum();
            if found.iter().any(|(c, _)| mask & c == *c) {
                continue; // contains a smaller circuit
            }
            let hom_rank = geom.hom_rank(mask);
            let full_rank = geom.full_rank(mask);
            if full_rank > hom_rank {
                found.push((mask, false)); // minimal empty intersection
            } else if hom_rank < size {
                found.push((mask, true)); // minimal dependent, nonempty
            }
        }
    }
    let mut out: Vec<Circuit> = found
        .into_iter()
        .map(|(mask, central)| Circuit {
            indices: mask_to_indices(mask),
            central,
        })
        .collect();
    out.sort_by(|a, b| (a.indices.len(), &a.indices).cmp(&(b.indices.len(), &b.indices)));
    Ok(out)
}

/// NBC monomial basis of the OS algebra of an affine arrangement.
#[derive(Debug, Clone)]
pub struct NbcBasis {
    /// The ordering of hyperplanes used for broken circuits (1-based).
    pub ordering: Vec<usize>,
    /// Per degree, the sorted list of monomial index sets (1-based).
    pub monomials: Vec<Vec<Vec<usize>>>,
}

impl NbcBasis {
    pub fn dims(&self) -> Vec<usize> {
        self.monomials.iter().map(|d| d.len()).collect()
    }
}

/// Compute the NBC basis of an affine or central arrangement. The default
/// ordering is input order. Degree-q monomials are the size-q independent
/// index sets with nonempty intersection containing no broken circuit.
pub fn nbc_basis(a: &Arrangement, ordering: Option<Vec<usize>>) -> Result<NbcBasis> {
    let model = affine_view(a)?;
    let scaffold = OsAlgebra::for_affine(&model, ordering)?;
    Ok(scaffold.basis)
}

fn affine_view(a: &Arrangement) -> Result<Arrangement> {
    match a.kind() {
        Kind::Affine => Ok(a.clone()),
        Kind::Central => a.central_as_affine(),
        Kind::Projective => Err(Error::validation(
            "projective input must be deconed before building the OS algebra",
        )),
    }
}

struct AffineGeometry {
    /// Full coefficient rows, including the constant column.
    rows: Vec<Vec<Rat>>,
    hom_dim: usize,
}

impl AffineGeometry {
    fn new(a: &Arrangement) -> Self {
        debug_assert_eq!(a.kind(), Kind::Affine);
        AffineGeometry {
            rows: a.forms().iter().map(|f| f.coeffs.clone()).collect(),
            hom_dim: a.dim(),
        }
    }

    fn subset(&self, mask: u64, hom_only: bool) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, r)| {
                if hom_only {
                    r[..self.hom_dim].to_vec()
                } else {
                    r.clone()
                }
            })
            .collect()
    }

    fn full_rank(&self, mask: u64) -> usize {
        let rows = self.subset(mask, false);
        if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).expect("widths").rank()
        }
    }

    fn hom_rank(&self, mask: u64) -> usize {
        let rows = self.subset(mask, true);
        if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).expect("widths").rank()
        }
    }

    fn nonempty(&self, mask: u64) -> bool {
        self.full_rank(mask) == self.hom_rank(mask)
    }
}

/// Straightening data for one affine arrangement and one NBC ordering: the
/// basis together with the expansion of every generator product in it.
/// Building this once and assembling differentials for many systems keeps
/// the property suites cheap.
pub struct OsAlgebra {
    model: Arrangement,
    basis: NbcBasis,
    /// Masks of basis monomials per degree, parallel to `basis.monomials`.
    masks: Vec<Vec<u64>>,
    /// Position of a basis mask within its degree.
    index_of: HashMap<u64, (usize, usize)>,
    /// Central circuits as (mask, slot of the ordering-minimal element).
    rewriters: Vec<(u64, usize)>,
    geometry: AffineGeometry,
}

impl OsAlgebra {
    /// Build for an affine arrangement (callers decone projective input).
    pub fn for_affine(model: &Arrangement, ordering: Option<Vec<usize>>) -> Result<Self> {
        let m = model.size();
        let ordering = match ordering {
            Some(o) => {
                let mut sorted = o.clone();
                sorted.sort_unstable();
                if sorted != (1..=m).collect::<Vec<_>>() {
                    return Err(Error::validation("ordering must be a permutation of 1..=m"));
                }
                o
            }
            None => (1..=m).collect(),
        };
        // position[j] = rank of hyperplane j+1 in the ordering
        let mut position = vec![0usize; m];
        for (rank, &h) in ordering.iter().enumerate() {
            position[h - 1] = rank;
        }

        let geometry = AffineGeometry::new(model);
        let all_circuits = circuits(model)?;
        let mut rewriters = Vec::new();
        let mut broken: Vec<u64> = Vec::new();
        for c in all_circuits.iter().filter(|c| c.central) {
            let mask: u64 = c.indices.iter().map(|&h| 1u64 << (h - 1)).sum();
            let min_slot = c
                .indices
                .iter()
                .map(|&h| h - 1)
                .min_by_key(|&j| position[j])
                .expect("circuits are nonempty");
            rewriters.push((mask, min_slot));
            broken.push(mask & !(1u64 << min_slot));
        }

        let max_degree = geometry.hom_rank(((1u128 << m) - 1) as u64);
        let mut monomials: Vec<Vec<Vec<usize>>> = Vec::with_capacity(max_degree + 1);
        let mut masks: Vec<Vec<u64>> = Vec::with_capacity(max_degree + 1);
        let mut index_of = HashMap::new();
        let all: Vec<usize> = (0..m).collect();
        for q in 0..=max_degree {
            let mut level_masks = Vec::new();
            for combo in combinations(&all, q) {
                let mask: u64 = combo.iter().map(|&j| 1u64 << j).sum();
                if broken.iter().any(|b| mask & b == *b) {
                    continue;
                }
                if !geometry.nonempty(mask) {
                    continue;
                }
                if geometry.hom_rank(mask) < q {
                    continue; // dependent without a broken circuit cannot happen
                }
                level_masks.push(mask);
            }
            level_masks.sort_by_key(|&mask| mask_to_indices(mask));
            for (i, &mask) in level_masks.iter().enumerate() {
                index_of.insert(mask, (q, i));
            }
            monomials.push(level_masks.iter().map(|&mask| mask_to_indices(mask)).collect());
            masks.push(level_masks);
        }

        Ok(OsAlgebra {
            model: model.clone(),
            basis: NbcBasis { ordering, monomials },
            masks,
            index_of,
            rewriters,
            geometry,
        })
    }

    pub fn model(&self) -> &Arrangement {
        &self.model
    }

    pub fn basis(&self) -> &NbcBasis {
        &self.basis
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.dims()
    }

    /// Expand `e_j ^ e_S` (0-based generator slot, monomial mask) in the
    /// NBC basis of the next degree.
    fn multiply(
        &self,
        j: usize,
        mask: u64,
        memo: &mut HashMap<u64, Vec<(u64, Rat)>>,
    ) -> Vec<(u64, Rat)> {
        let bit = 1u64 << j;
        if mask & bit != 0 {
            return vec![];
        }
        let sign = insertion_sign(j, mask);
        self.straighten(mask | bit, memo)
            .iter()
            .map(|(m, c)| (*m, c * &sign))
            .collect()
    }

    /// Expand an arbitrary monomial mask in the NBC basis.
    fn straighten(&self, mask: u64, memo: &mut HashMap<u64, Vec<(u64, Rat)>>) -> Vec<(u64, Rat)> {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let result = self.straighten_uncached(mask, memo);
        memo.insert(mask, result.clone());
        result
    }

    fn straighten_uncached(
        &self,
        mask: u64,
        memo: &mut HashMap<u64, Vec<(u64, Rat)>>,
    ) -> Vec<(u64, Rat)> {
        if self.index_of.contains_key(&mask) {
            return vec![(mask, Rat::from_integer(1.into()))];
        }
        if !self.geometry.nonempty(mask) {
            return vec![];
        }
        if self.geometry.hom_rank(mask) < mask.count_ones() as usize {
            // dependent monomials vanish in the OS algebra
            return vec![];
        }
        // find a broken circuit inside the monomial
        let Some(&(circuit, min_slot)) = self.rewriters.iter().find(|(c, min_slot)| {
            let b = c & !(1u64 << min_slot);
            mask & b == b && mask & (1 << min_slot) == 0
        }) else {
            unreachable!("non-basis monomial without a broken circuit");
        };
        // The boundary relation of the circuit C (ascending slots c_1..c_p)
        // rewrites e_B for B = C minus its ordering-minimal element c_mu:
        //   e_B = sum_{k != mu} (-1)^(k - mu + 1) e_{C \ c_k}.
        // Each replacement swaps an element of B for the smaller-ranked
        // c_mu, so the recursion terminates.
        let circuit_slots = mask_slots(circuit);
        let mu = circuit_slots
            .iter()
            .position(|&s| s == min_slot)
            .expect("minimal element belongs to the circuit");
        let b_mask = circuit & !(1u64 << min_slot);
        let rest = mask & !b_mask;
        let sign_rest_b = merge_sign(rest, b_mask);
        let mut acc: HashMap<u64, Rat> = HashMap::new();
        for (k, &ck) in circuit_slots.iter().enumerate() {
            if k == mu {
                continue;
            }
            let coeff_sign = if (k as i64 - mu as i64 + 1).rem_euclid(2) == 0 {
                Rat::from_integer(1.into())
            } else {
                Rat::from_integer((-1).into())
            };
            let part = circuit & !(1u64 << ck);
            if rest & part != 0 {
                continue; // shared generator: wedge vanishes
            }
            let sign_merge = merge_sign(rest, part);
            let total = &coeff_sign * &sign_rest_b * sign_merge;
            for (m, c) in self.straighten(rest | part, memo) {
                let entry = acc.entry(m).or_insert_with(Rat::zero);
                *entry += c * &total;
            }
        }
        let mut out: Vec<(u64, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|(m, _)| *m);
        out
    }

    /// Matrices of multiplication by `w = sum_j e_j (x) P_j`, one per
    /// degree, in target x source convention with r x r blocks per basis
    /// pair.
    pub fn differentials(&self, system: &System) -> Result<Vec<QMatrix>> {
        let m = self.model.size();
        if system.len() != m {
            return Err(Error::validation(format!(
                "system has {} coefficients, the affine model has {m} hyperplanes",
                system.len()
            )));
        }
        let r = system.rank();
        let coeffs: Vec<QMatrix> = (1..=m).map(|h| system.coefficient(h)).collect();
        let mut memo = HashMap::new();
        let top = self.masks.len() - 1;
        let mut differentials = Vec::with_capacity(top);
        for q in 0..top {
            let src = &self.masks[q];
            let dst = &self.masks[q + 1];
            let mut d = QMatrix::zeros(dst.len() * r, src.len() * r);
            for (col, &s_mask) in src.iter().enumerate() {
                for (j, p) in coeffs.iter().enumerate() {
                    for (u_mask, c) in self.multiply(j, s_mask, &mut memo) {
                        let (uq, row) = self.index_of[&u_mask];
                        debug_assert_eq!(uq, q + 1);
                        for a in 0..r {
                            for b in 0..r {
                                let delta = p.at(a, b) * &c;
                                let target = d.at_mut(row * r + a, col * r + b);
                                *target = &*target + delta;
                            }
                        }
                    }
                }
            }
            differentials.push(d);
        }
        Ok(differentials)
    }
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask & (1 << j) != 0).map(|j| j + 1).collect()
}

fn mask_slots(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask & (1 << j) != 0).collect()
}

/// Sign of sorting `e_j ^ e_S` into ascending order: `(-1)^|{s in S : s < j}|`.
fn insertion_sign(j: usize, mask: u64) -> Rat {
    let below = (mask & ((1u64 << j) - 1)).count_ones();
    if below % 2 == 0 {
        Rat::from_integer(1.into())
    } else {
        Rat::from_integer((-1).into())
    }
}

/// Sign of merging two disjoint ascending blocks `e_A ^ e_B` into one
/// ascending monomial: parity of inversions between the blocks.
fn merge_sign(a: u64, b: u64) -> Rat {
    let mut inversions = 0u32;
    for j in mask_slots(b) {
        inversions += (a & !((1u128 << (j + 1)) - 1) as u64).count_ones();
    }
    if inversions % 2 == 0 {
        Rat::from_integer(1.into())
    } else {
        Rat::from_integer((-1).into())
    }
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - current.len() {
                break;
            }
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    rec(items, size, 0, &mut current, &mut out);
    out
}

/// Flatness report: the commutator conditions at codimension-2 edges.
#[derive(Debug, Clone)]
pub struct FlatnessReport {
    pub ok: bool,
    /// Violating pairs (hyperplane index, flat indices).
    pub violations: Vec<(usize, Vec<usize>)>,
}

/// Verify `[P_j, P_X] = 0` for every codimension-2 edge `X` of the lattice
/// and every hyperplane `j` containing `X`.
pub fn check_flat(e: &EndoSystem, lattice: &IntersectionLattice) -> Result<FlatnessReport> {
    if e.len() != lattice.arrangement().size() {
        return Err(Error::validation(format!(
            "endomorphism system has {} matrices, arrangement has {}",
            e.len(),
            lattice.arrangement().size()
        )));
    }
    let mut violations = Vec::new();
    for flat in lattice.flats_of_codim(2) {
        let mut p_x = QMatrix::zeros(e.rank(), e.rank());
        for &h in &flat.indices {
            p_x = p_x.add(e.matrix(h))?;
        }
        for &h in &flat.indices {
            if !e.matrix(h).commutator(&p_x)?.is_zero() {
                violations.push((h, flat.indices.clone()));
            }
        }
    }
    Ok(FlatnessReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// The Aomoto complex of an arrangement with coefficients in a weight or
/// endomorphism system.
#[derive(Debug)]
pub struct AomotoComplex {
    pub basis: NbcBasis,
    /// Coefficient rank r.
    pub rank: usize,
    /// `differentials[q]` maps degree q to degree q+1 (target x source).
    pub differentials: Vec<QMatrix>,
    /// Decone hyperplane used for projective input.
    pub decone: Option<usize>,
    /// Number of cochain degrees reported (ambient dimension + 1).
    pub degrees: usize,
}

impl AomotoComplex {
    /// Dimension of the degree-q cochain space.
    pub fn dim(&self, q: usize) -> usize {
        self.basis
            .monomials
            .get(q)
            .map_or(0, |level| level.len() * self.rank)
    }

    /// Exact cohomology dimensions `h^0 .. h^top`:
    /// `h^q = dim ker d^q - rank d^{q-1}`.
    pub fn cohomology(&self) -> Vec<usize> {
        let mut ranks = vec![0usize; self.degrees + 1];
        for (q, d) in self.differentials.iter().enumerate() {
            ranks[q + 1] = d.rank();
        }
        (0..self.degrees)
            .map(|q| {
                let rank_out = ranks.get(q + 1).copied().unwrap_or(0);
                self.dim(q) - rank_out - ranks[q]
            })
            .collect()
    }
}

/// Build the Aomoto complex.
///
/// Projective arrangements are deconed at `decone` (default: the last
/// hyperplane); affine and central arrangements use all their hyperplanes
/// directly. For endomorphism systems of rank at least 2 the flatness
/// condition is a hard precondition, checked against the lattice of the
/// input arrangement.
pub fn aomoto_complex(
    a: &Arrangement,
    system: &System,
    decone: Option<usize>,
) -> Result<AomotoComplex> {
    if system.len() != a.size() {
        return Err(Error::validation(format!(
            "system has {} coefficients, arrangement has {} hyperplanes",
            system.len(),
            a.size()
        )));
    }
    if let System::Endos(e) = system {
        if e.rank() > 1 {
            let lattice = IntersectionLattice::build(a)?;
            let report = check_flat(e, &lattice)?;
            if !report.ok {
                return Err(Error::validation(format!(
                    "endomorphism system is not flat: {} violated commutator conditions (first at hyperplane {} on flat {:?})",
                    report.violations.len(),
                    report.violations[0].0,
                    report.violations[0].1
                )));
            }
        }
    }

    let (model, decone_used, kept): (Arrangement, Option<usize>, Vec<usize>) = match a.kind() {
        Kind::Projective => {
            let h = decone.unwrap_or(a.size());
            let kept = (1..=a.size()).filter(|&j| j != h).collect();
            (a.decone(h)?, Some(h), kept)
        }
        Kind::Affine => (a.clone(), None, (1..=a.size()).collect()),
        Kind::Central => (a.central_as_affine()?, None, (1..=a.size()).collect()),
    };
    let restricted = restrict_system(system, &kept);
    let scaffold = OsAlgebra::for_affine(&model, None)?;
    let differentials = scaffold.differentials(&restricted)?;

    // the composition of consecutive differentials must vanish
    for w in differentials.windows(2) {
        let composite = w[1].mul(&w[0]).map_err(Error::Exact)?;
        assert!(composite.is_zero(), "Aomoto differential does not square to zero");
    }

    let degrees = model.dim() + 1;
    Ok(AomotoComplex {
        basis: scaffold.basis,
        rank: system.rank(),
        differentials,
        decone: decone_used,
        degrees,
    })
}

/// Keep only the listed (1-based) coefficients of a system, without
/// re-checking the zero-sum constraint.
pub(crate) fn restrict_system(system: &System, kept: &[usize]) -> System {
    match system {
        System::Weights(w) => System::Weights(WeightSystem {
            weights: kept.iter().map(|&h| w.weight(h).clone()).collect(),
        }),
        System::Endos(e) => System::Endos(EndoSystem {
            rank: e.rank(),
            matrices: kept.iter().map(|&h| e.matrix(h).clone()).collect(),
        }),
    }
}

/// Cohomology dimensions of the Aomoto complex.
pub fn aomoto_cohomology(
    a: &Arrangement,
    system: &System,
    decone: Option<usize>,
) -> Result<Vec<usize>> {
    Ok(aomoto_complex(a, system, decone)?.cohomology())
}
