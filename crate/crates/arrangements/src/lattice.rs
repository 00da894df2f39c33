//! Intersection poset construction, Möbius and Whitney numbers,
//! localization at a flat, matroid irreducibility, and dense-edge
//! enumeration.
//!
//! A flat is identified by its closed index set: the full set of hyperplanes
//! containing the subspace. For projective arrangements the empty projective
//! set (the center of the cone) is excluded; for central arrangements the
//! center is a genuine flat.

use std::collections::HashMap;

use exact::{QMatrix, Rat};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::arrangement::{Arrangement, Kind, LinearForm};
use crate::{Error, Result};

/// Size guards for the combinatorial enumerations.
#[derive(Debug, Clone, Copy)]
pub struct Guards {
    /// Maximum number of hyperplanes for lattice construction.
    pub max_forms: usize,
    /// Maximum ambient dimension for lattice construction.
    pub max_dim: usize,
    /// Maximum localization size for the irreducibility search.
    pub max_irreducibility: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_forms: 30,
            max_dim: 4,
            max_irreducibility: 25,
        }
    }
}

/// An edge of the arrangement: a nonempty intersection of hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    /// Closed set of 1-based hyperplane indices containing the subspace.
    pub indices: Vec<usize>,
    /// Codimension of the subspace.
    pub codim: usize,
    /// `|X|`: the number of hyperplanes containing the flat.
    pub multiplicity: usize,
    /// Möbius function value of the interval from the ambient flat.
    pub mobius: i64,
    /// Whether the localized subarrangement is irreducible.
    pub dense: bool,
    /// Defining equations (an echelon basis, one row per codimension).
    pub equations: QMatrix,
    mask: u64,
}

impl Flat {
    pub fn contains_hyperplane(&self, h: usize) -> bool {
        self.mask & (1 << (h - 1)) != 0
    }
}

/// The poset of all edges, ordered by reverse inclusion of subspaces with
/// the ambient space at the bottom.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    arrangement: Arrangement,
    /// All flats, sorted by (codim, indices); index 0 is the ambient flat.
    flats: Vec<Flat>,
    /// `below[i]`: indices of flats whose subspace strictly contains flat i.
    below: Vec<Vec<usize>>,
}

impl IntersectionLattice {
    pub fn build(a: &Arrangement) -> Result<Self> {
        IntersectionLattice::build_with(a, &Guards::default())
    }

    pub fn build_with(a: &Arrangement, guards: &Guards) -> Result<Self> {
        let m = a.size();
        if m > guards.max_forms || m > 64 {
            return Err(Error::Resource(format!(
                "{m} hyperplanes exceeds the lattice guard of {}",
                guards.max_forms
            )));
        }
        if a.dim() > guards.max_dim {
            return Err(Error::Resource(format!(
                "dimension {} exceeds the lattice guard of {}",
                a.dim(),
                guards.max_dim
            )));
        }

        let geom = Geometry::new(a);
        let mut ranks: HashMap<u64, usize> = HashMap::new();
        let mut closed: HashMap<u64, usize> = HashMap::new(); // mask -> codim
        closed.insert(0, 0);

        // iterated closure, one hyperplane at a time
        let mut frontier: Vec<u64> = Vec::new();
        for j in 0..m {
            let mask = geom.closure(1 << j, &mut ranks);
            if closed.insert(mask, geom.rank_of(mask, &mut ranks)).is_none() {
                frontier.push(mask);
            }
        }
        while let Some(mask) = frontier.pop() {
            for j in 0..m {
                let bit = 1u64 << j;
                if mask & bit != 0 {
                    continue;
                }
                let candidate = mask | bit;
                if !geom.is_nonempty(candidate, &mut ranks) {
                    continue;
                }
                let cl = geom.closure(candidate, &mut ranks);
                if closed.insert(cl, geom.rank_of(cl, &mut ranks)).is_none() {
                    frontier.push(cl);
                }
            }
        }

        let mut flats: Vec<Flat> = closed
            .into_iter()
            .map(|(mask, codim)| Flat {
                indices: mask_to_indices(mask),
                codim,
                multiplicity: mask.count_ones() as usize,
                mobius: 0,
                dense: false,
                equations: geom.equations(mask),
                mask,
            })
            .collect();
        flats.sort_by(|a, b| (a.codim, &a.indices).cmp(&(b.codim, &b.indices)));

        // containment: subspace(j) strictly contains subspace(i) iff the
        // closed index set of j is a strict subset of that of i
        let below: Vec<Vec<usize>> = flats
            .iter()
            .map(|fi| {
                flats
                    .iter()
                    .enumerate()
                    .filter(|(_, fj)| fj.mask != fi.mask && fi.mask & fj.mask == fj.mask)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();

        // Möbius recursion from the ambient flat downward
        for i in 0..flats.len() {
            if flats[i].mask == 0 {
                flats[i].mobius = 1;
            } else {
                let sum: i64 = below[i].iter().map(|&j| flats[j].mobius).sum();
                flats[i].mobius = -sum;
            }
        }

        let mut lattice = IntersectionLattice {
            arrangement: a.clone(),
            flats,
            below,
        };

        // dense flags via localization
        for i in 0..lattice.flats.len() {
            if lattice.flats[i].codim == 0 {
                continue;
            }
            let local = localize(a, &lattice.flats[i])?;
            lattice.flats[i].dense = is_irreducible_with(&local, guards)?;
        }
        Ok(lattice)
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn max_codim(&self) -> usize {
        self.flats.iter().map(|f| f.codim).max().unwrap_or(0)
    }

    pub fn flats_of_codim(&self, q: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == q)
    }

    /// All dense flats, of any positive codimension.
    pub fn dense_flats(&self) -> Vec<&Flat> {
        self.flats.iter().filter(|f| f.dense).collect()
    }

    /// Look up the flat with exactly this closed index set.
    pub fn flat_by_indices(&self, indices: &[usize]) -> Option<&Flat> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        self.flats.iter().find(|f| f.indices == sorted)
    }

    /// Whitney numbers: `b_q` is the sum of |Möbius| over flats of codim q.
    pub fn whitney_numbers(&self) -> Vec<u64> {
        let mut b = vec![0u64; self.max_codim() + 1];
        for f in &self.flats {
            b[f.codim] += f.mobius.unsigned_abs();
        }
        b
    }

    /// Flats whose subspace strictly contains the given flat (as lattice
    /// indices into `flats`).
    pub fn strictly_below(&self, flat_index: usize) -> &[usize] {
        &self.below[flat_index]
    }

    /// Sorted (codim, indices) signature of the whole poset.
    pub fn flat_signature(&self) -> Vec<(usize, Vec<usize>)> {
        self.flats
            .iter()
            .map(|f| (f.codim, f.indices.clone()))
            .collect()
    }

    /// Signature restricted to codim at most `c`.
    pub fn truncate(&self, c: usize) -> Vec<(usize, Vec<usize>)> {
        self.flats
            .iter()
            .filter(|f| f.codim <= c)
            .map(|f| (f.codim, f.indices.clone()))
            .collect()
    }

    /// JSON report: flats sorted by (codim, indices).
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.arrangement.kind().as_str(),
            "dim": self.arrangement.dim(),
            "size": self.arrangement.size(),
            "flats": self
                .flats
                .iter()
                .map(|f| {
                    json!({
                        "indices": f.indices,
                        "codim": f.codim,
                        "multiplicity": f.multiplicity,
                        "mobius": f.mobius,
                        "dense": f.dense,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask & (1 << j) != 0).map(|j| j + 1).collect()
}

/// Exact geometry queries shared by the lattice construction.
///
/// The "full vector" of a hyperplane is its stored coefficient vector; for
/// affine arrangements this is the augmented row `[homogeneous | constant]`.
/// For a set with nonempty intersection, a hyperplane contains the flat iff
/// its full vector lies in the span of the set's full vectors.
struct Geometry<'a> {
    a: &'a Arrangement,
}

impl<'a> Geometry<'a> {
    fn new(a: &'a Arrangement) -> Self {
        Geometry { a }
    }

    fn full_rows(&self, mask: u64) -> Vec<Vec<Rat>> {
        self.a
            .forms()
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, f)| f.coeffs.clone())
            .collect()
    }

    fn rank_of(&self, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let rows = self.full_rows(mask);
        let r = if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).expect("consistent widths").rank()
        };
        memo.insert(mask, r);
        r
    }

    fn hom_rank_of(&self, mask: u64) -> usize {
        let n = self.a.dim();
        let rows: Vec<Vec<Rat>> = self
            .full_rows(mask)
            .into_iter()
            .map(|r| r[..n].to_vec())
            .collect();
        if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).expect("consistent widths").rank()
        }
    }

    /// Does the index set cut out a nonempty flat of this arrangement kind?
    fn is_nonempty(&self, mask: u64, memo: &mut HashMap<u64, usize>) -> bool {
        match self.a.kind() {
            Kind::Central => true,
            Kind::Projective => self.rank_of(mask, memo) <= self.a.dim(),
            Kind::Affine => self.rank_of(mask, memo) == self.hom_rank_of(mask),
        }
    }

    /// Close the index set: add every hyperplane containing the flat.
    fn closure(&self, mask: u64, memo: &mut HashMap<u64, usize>) -> u64 {
        let base_rank = self.rank_of(mask, memo);
        let mut out = mask;
        for j in 0..self.a.size() {
            let bit = 1u64 << j;
            if out & bit != 0 {
                continue;
            }
            if self.rank_of(mask | bit, memo) == base_rank {
                out |= bit;
            }
        }
        out
    }

    /// Echelon basis of the defining equations.
    fn equations(&self, mask: u64) -> QMatrix {
        let rows = self.full_rows(mask);
        if rows.is_empty() {
            return QMatrix::zeros(0, self.a.dim() + 1);
        }
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for row in rows {
            insert_into_echelon(&mut basis, row);
        }
        QMatrix::from_rows(basis).expect("consistent widths")
    }
}

/// Reduce `row` against the echelon basis; if a nonzero remainder is left,
/// insert it and report growth.
fn insert_into_echelon(basis: &mut Vec<Vec<Rat>>, mut row: Vec<Rat>) -> bool {
    for b in basis.iter() {
        let pivot = b.iter().position(|c| !c.is_zero()).expect("echelon rows are nonzero");
        if !row[pivot].is_zero() {
            let factor = &row[pivot] / &b[pivot];
            for (r, bc) in row.iter_mut().zip(b) {
                let delta = &factor * bc;
                *r = &*r - delta;
            }
        }
    }
    if row.iter().all(|c| c.is_zero()) {
        return false;
    }
    basis.push(row);
    // keep rows sorted by pivot position
    basis.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX));
    true
}

/// The subarrangement of hyperplanes containing the flat, essentialized to a
/// central arrangement of rank `codim X`.
///
/// Coordinates come from expressing each containing form in a maximal
/// independent subset of the defining forms, which is an exact linear
/// isomorphism of the span and so preserves the matroid.
pub fn localize(a: &Arrangement, flat: &Flat) -> Result<Arrangement> {
    if flat.codim == 0 {
        return Err(Error::validation("cannot localize at the ambient flat"));
    }
    let rows: Vec<Vec<Rat>> = flat
        .indices
        .iter()
        .map(|&h| a.form(h).coeffs.clone())
        .collect();
    let r = flat.codim;
    // greedy maximal independent subset
    let mut basis_rows: Vec<Vec<Rat>> = Vec::new();
    let mut echelon: Vec<Vec<Rat>> = Vec::new();
    for row in &rows {
        if basis_rows.len() == r {
            break;
        }
        if insert_into_echelon(&mut echelon, row.clone()) {
            basis_rows.push(row.clone());
        }
    }
    debug_assert_eq!(basis_rows.len(), r);
    // coordinates of each row with respect to the independent subset
    let basis_t = QMatrix::from_rows(basis_rows)?.transpose();
    let mut forms = Vec::with_capacity(rows.len());
    for row in &rows {
        let coords = basis_t
            .solve(row)?
            .expect("rows lie in the span of the basis");
        forms.push(LinearForm::new(coords));
    }
    let labels = flat.indices.iter().map(|&h| a.labels()[h - 1].clone()).collect();
    Arrangement::with_labels(Kind::Central, r - 1, forms, labels)
}

/// Is the underlying matroid of a central arrangement connected?
///
/// Searches for a proper bipartition with `rank(S) + rank(S^c) = rank(all)`.
/// The search assigns one form at a time to either side, carrying echelon
/// bases, and prunes as soon as the rank sum exceeds the total.
pub fn is_irreducible(c: &Arrangement) -> Result<bool> {
    is_irreducible_with(c, &Guards::default())
}

fn is_irreducible_with(c: &Arrangement, guards: &Guards) -> Result<bool> {
    if c.kind() != Kind::Central {
        return Err(Error::validation("irreducibility expects a central arrangement"));
    }
    let k = c.size();
    if k > guards.max_irreducibility {
        return Err(Error::Resource(format!(
            "{k} hyperplanes exceeds the irreducibility guard of {}",
            guards.max_irreducibility
        )));
    }
    if k == 1 {
        return Ok(true);
    }
    let rows: Vec<Vec<Rat>> = c.forms().iter().map(|f| f.coeffs.clone()).collect();
    let total = QMatrix::from_rows(rows.clone())?.rank();

    // first form goes to side A by symmetry
    let mut side_a = Vec::new();
    insert_into_echelon(&mut side_a, rows[0].clone());
    let found = split_search(&rows, 1, side_a, Vec::new(), 1, 0, total);
    Ok(!found)
}

#[allow(clippy::too_many_arguments)]
fn split_search(
    rows: &[Vec<Rat>],
    next: usize,
    side_a: Vec<Vec<Rat>>,
    side_b: Vec<Vec<Rat>>,
    count_a: usize,
    count_b: usize,
    total: usize,
) -> bool {
    if side_a.len() + side_b.len() > total {
        return false;
    }
    if next == rows.len() {
        return count_a > 0 && count_b > 0 && side_a.len() + side_b.len() == total;
    }
    let row = &rows[next];
    for to_a in [true, false] {
        let (mut a, mut b) = (side_a.clone(), side_b.clone());
        if to_a {
            insert_into_echelon(&mut a, row.clone());
        } else {
            insert_into_echelon(&mut b, row.clone());
        }
        if split_search(
            rows,
            next + 1,
            a,
            b,
            count_a + usize::from(to_a),
            count_b + usize::from(!to_a),
            total,
        ) {
            return true;
        }
    }
    false
}

/// All dense edges of the arrangement, sorted by (codim, indices).
pub fn dense_edges(a: &Arrangement) -> Result<Vec<Flat>> {
    let lattice = IntersectionLattice::build(a)?;
    Ok(lattice
        .flats()
        .iter()
        .filter(|f| f.dense)
        .cloned()
        .collect())
}

/// Betti numbers of the complement.
///
/// For projective arrangements these are computed on the affine decone model
/// (default decone at the last hyperplane); for affine and central
/// arrangements directly from their own lattice. The result is padded to
/// one entry per ambient degree.
pub fn betti_numbers(a: &Arrangement) -> Result<Vec<u64>> {
    betti_numbers_with_decone(a, None)
}

pub fn betti_numbers_with_decone(a: &Arrangement, decone: Option<usize>) -> Result<Vec<u64>> {
    let (model, degrees) = match a.kind() {
        Kind::Projective => {
            let h = decone.unwrap_or(a.size());
            (a.decone(h)?, a.dim() + 1)
        }
        Kind::Affine => (a.clone(), a.dim() + 1),
        Kind::Central => (a.central_as_affine()?, a.dim() + 2),
    };
    let lattice = IntersectionLattice::build(&model)?;
    let mut b = lattice.whitney_numbers();
    b.resize(degrees, 0);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin_arrangement;

    fn indices(flats: &[&Flat]) -> Vec<Vec<usize>> {
        flats.iter().map(|f| f.indices.clone()).collect()
    }

    #[test]
    fn cdo_ex1_codim_two_flats() {
        let a = builtin_arrangement("cdo-ex1").unwrap();
        let lat = IntersectionLattice::build(&a).unwrap();
        let pts: Vec<_> = lat.flats_of_codim(2).collect();
        assert_eq!(
            indices(&pts),
            vec![
                vec![1, 2, 5],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4, 5],
            ],
        );
    }

    #[test]
    fn boolean2_has_one_codim_two_flat() {
        let a = builtin_arrangement("boolean(2)").unwrap();
        let lat = IntersectionLattice::build(&a).unwrap();
        let pts: Vec<_> = lat.flats_of_codim(2).collect();
        assert_eq!(indices(&pts), vec![vec![1, 2]]);
    }

    #[test]
    fn braid_a3_triples_and_doubles() {
        let a = builtin_arrangement("braid-a3").unwrap();
        let lat = IntersectionLattice::build(&a).unwrap();
        let triples: Vec<_> = lat
            .flats_of_codim(2)
            .filter(|f| f.multiplicity == 3)
            .collect();
        assert_eq!(
            indices(&triples),
            vec![vec![1, 2, 4], vec![1, 3, 5], vec![2, 3, 6], vec![4, 5, 6]],
        );
        assert_eq!(lat.flats_of_codim(2).filter(|f| f.multiplicity == 2).count(), 3);
    }

    #[test]
    fn mobius_sums_vanish() {
        for name in ["cdo-ex1", "cdo-ex2", "braid-a3", "boolean(3)"] {
            let a = builtin_arrangement(name).unwrap();
            let lat = IntersectionLattice::build(&a).unwrap();
            assert_eq!(lat.flats()[0].mobius, 1, "{name}: ambient");
            for (i, f) in lat.flats().iter().enumerate() {
                if f.codim == 0 {
                    continue;
                }
                let sum: i64 = lat.strictly_below(i).iter().map(|&j| lat.flats()[j].mobius).sum::<i64>()
                    + f.mobius;
                assert_eq!(sum, 0, "{name}: interval below {:?}", f.indices);
            }
        }
    }

    #[test]
    fn incidence_count_for_projective_lines() {
        for name in ["cdo-ex1", "cdo-ex2", "braid-a3", "generic(6)"] {
            let a = builtin_arrangement(name).unwrap();
            let m = a.size();
            let lat = IntersectionLattice::build(&a).unwrap();
            let pairs: usize = lat
                .flats_of_codim(2)
                .map(|f| f.multiplicity * (f.multiplicity - 1) / 2)
                .sum();
            assert_eq!(pairs, m * (m - 1) / 2, "{name}");
        }
    }

    #[test]
    fn betti_numbers_of_the_corpus() {
        let b = |name: &str| betti_numbers(&builtin_arrangement(name).unwrap()).unwrap();
        assert_eq!(b("cdo-ex1"), vec![1, 4, 4]);
        assert_eq!(b("cdo-ex2"), vec![1, 5, 7]);
        assert_eq!(b("braid-a3"), vec![1, 5, 6]);
        assert_eq!(b("boolean(2)"), vec![1, 2, 1]);
    }

    #[test]
    fn betti_numbers_are_decone_invariant() {
        let a = builtin_arrangement("cdo-ex2").unwrap();
        let reference = betti_numbers(&a).unwrap();
        for h in 1..=a.size() {
            assert_eq!(
                betti_numbers_with_decone(&a, Some(h)).unwrap(),
                reference,
                "decone at {h}"
            );
        }
    }

    #[test]
    fn betti_numbers_are_order_invariant() {
        let a = builtin_arrangement("cdo-ex1").unwrap();
        let reference = betti_numbers(&a).unwrap();
        // a couple of hand-rolled permutations
        for perm in [[2usize, 1, 3, 4, 5], [5, 3, 1, 4, 2], [3, 4, 1, 2, 5]] {
            let forms = perm.iter().map(|&i| a.form(i).clone()).collect();
            let p = Arrangement::new(Kind::Projective, 2, forms).unwrap();
            assert_eq!(betti_numbers(&p).unwrap(), reference, "{perm:?}");
        }
    }

    #[test]
    fn localize_examples() {
        let a = builtin_arrangement("cdo-ex1").unwrap();
        let lat = IntersectionLattice::build(&a).unwrap();

        let triple = lat.flat_by_indices(&[1, 2, 5]).unwrap();
        let local = localize(&a, triple).unwrap();
        assert_eq!(local.kind(), Kind::Central);
        assert_eq!(local.size(), 3);
        assert_eq!(local.dim(), 1); // three concurrent lines in C^2

        let double = lat.flat_by_indices(&[1, 3]).unwrap();
        let local = localize(&a, double).unwrap();
        assert_eq!(local.size(), 2);
        assert_eq!(local.dim(), 1);

        let hyperplane = lat.flat_by_indices(&[1]).unwrap();
        let local = localize(&a, hyperplane).unwrap();
        assert_eq!(local.size(), 1);
        assert_eq!(local.dim(), 0);
    }

    #[test]
    fn irreducibility_examples() {
        let single = builtin_arrangement("boolean(1)").unwrap();
        assert!(is_irreducible(&single).unwrap());

        let transverse = builtin_arrangement("boolean(2)").unwrap();
        assert!(!is_irreducible(&transverse).unwrap());

        let concurrent = Arrangement::new(
            Kind::Central,
            1,
            vec![
                LinearForm::from_ints(&[1, 0]),
                LinearForm::from_ints(&[0, 1]),
                LinearForm::from_ints(&[1, -1]),
            ],
        )
        .unwrap();
        assert!(is_irreducible(&concurrent).unwrap());
    }

    #[test]
    fn dense_edges_of_the_worked_examples() {
        let dense = |name: &str| {
            let a = builtin_arrangement(name).unwrap();
            dense_edges(&a)
                .unwrap()
                .iter()
                .map(|f| f.indices.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            dense("cdo-ex1"),
            vec![
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![5],
                vec![1, 2, 5],
                vec![3, 4, 5],
            ],
        );
        assert_eq!(
            dense("cdo-ex2"),
            vec![
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![5],
                vec![6],
                vec![1, 2, 6],
                vec![1, 3, 5],
                vec![3, 4, 6],
            ],
        );
        let braid = dense("braid-a3");
        assert_eq!(braid.len(), 10); // 6 lines + 4 triple points
        assert!(braid.contains(&vec![1, 2, 4]));
        assert!(braid.contains(&vec![4, 5, 6]));
    }

    #[test]
    fn density_in_the_plane_is_multiplicity_at_least_three() {
        for name in ["cdo-ex1", "cdo-ex2", "braid-a3", "generic(5)"] {
            let a = builtin_arrangement(name).unwrap();
            let lat = IntersectionLattice::build(&a).unwrap();
            for f in lat.flats_of_codim(2) {
                assert_eq!(f.dense, f.multiplicity >= 3, "{name} {:?}", f.indices);
            }
            for f in lat.flats_of_codim(1) {
                assert!(f.dense, "{name}: hyperplanes are always dense");
            }
        }
    }

    #[test]
    fn size_guard_is_enforced() {
        let a = builtin_arrangement("generic(8)").unwrap();
        let guards = Guards {
            max_forms: 6,
            ..Guards::default()
        };
        assert!(matches!(
            IntersectionLattice::build_with(&a, &guards),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn decone_then_rehomogenize_preserves_the_poset() {
        for name in ["cdo-ex1", "cdo-ex2", "braid-a3"] {
            let a = builtin_arrangement(name).unwrap();
            let m = a.size();
            let h = 2;
            let again = a.decone(h).unwrap().rehomogenize().unwrap();
            // affine line j maps back to original index, infinity to h
            let relabel: Vec<usize> = (1..=m).filter(|&j| j != h).chain([h]).collect();
            let lat_a = IntersectionLattice::build(&a).unwrap();
            let lat_b = IntersectionLattice::build(&again).unwrap();
            let mut sig_b: Vec<(usize, Vec<usize>)> = lat_b
                .flat_signature()
                .into_iter()
                .map(|(codim, idx)| {
                    let mut mapped: Vec<usize> =
                        idx.iter().map(|&i| relabel[i - 1]).collect();
                    mapped.sort_unstable();
                    (codim, mapped)
                })
                .collect();
            sig_b.sort();
            let mut sig_a = lat_a.flat_signature();
            sig_a.sort();
            assert_eq!(sig_a, sig_b, "{name}");
        }
    }

    #[test]
    fn generic_slice_of_the_corpus() {
        // c = n gives a lattice-isomorphic copy
        let a = builtin_arrangement("cdo-ex1").unwrap();
        let s = a.generic_slice(2, 7).unwrap();
        assert_eq!(
            IntersectionLattice::build(&s).unwrap().flat_signature(),
            IntersectionLattice::build(&a).unwrap().flat_signature()
        );

        // a generic line meets every line in a distinct point
        for (name, m) in [("braid-a3", 6), ("cdo-ex1", 5)] {
            let a = builtin_arrangement(name).unwrap();
            let s = a.generic_slice(1, 11).unwrap();
            assert_eq!(s.size(), m);
            let lat = IntersectionLattice::build(&s).unwrap();
            assert_eq!(lat.flats_of_codim(1).count(), m, "{name}");
            assert!(lat.flats_of_codim(1).all(|f| f.multiplicity == 1));
        }
    }
}
