use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Rational, SparseVec};

/// Incremental echelon basis keyed by pivot column. Rows are normalized so
/// the pivot entry is 1; they are only reduced below their own pivot until
/// [`Echelon::into_reduced_rows`] back-substitutes.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub(crate) fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub(crate) fn reduce(&self, v: SparseVec) -> SparseVec {
        if self.rows.is_empty() {
            return v;
        }
        let mut acc = v.into_map();
        let mut cursor = 0usize;
        while let Some(k) = acc.range(cursor..).next().map(|(k, _)| *k) {
            if let Some(row) = self.rows.get(&k) {
                let c = acc.remove(&k).expect("present");
                for (j, x) in row.iter().skip(1) {
                    let slot = acc.entry(j).or_insert_with(Rational::zero);
                    *slot -= &c * x;
                    if slot.is_zero() {
                        acc.remove(&j);
                    }
                }
            }
            cursor = k + 1;
        }
        SparseVec::from_map(acc)
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub(crate) fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.max_index().map_or(true, |i| i < self.dim));
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let row = r.scale(&inv);
        self.rows.insert(p, row);
        true
    }

    pub(crate) fn into_reduced_rows(self) -> Vec<SparseVec> {
        let mut rows: Vec<(usize, SparseVec)> = self.rows.into_iter().collect();
        for i in (0..rows.len()).rev() {
            let (p, pivot_row) = (rows[i].0, rows[i].1.clone());
            for row in rows.iter_mut().take(i) {
                if let Some(c) = row.1.get(p).cloned() {
                    row.1 = row.1.add_scaled(&pivot_row, &-c);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Subspace of `k^ambient_dim` with a basis in reduced row-echelon form.
///
/// Pivots (leading indices) are strictly increasing, each pivot entry is 1
/// and every other basis vector vanishes at that pivot, so the stored basis
/// is canonical and derived equality is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_spanning<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut vs: Vec<SparseVec> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
        // sparsest first keeps intermediate fractions small
        vs.sort_by_key(SparseVec::nnz);
        let mut ech = Echelon::new(ambient_dim);
        for v in vs {
            assert!(
                v.max_index().map_or(true, |i| i < ambient_dim),
                "vector outside ambient space"
            );
            if ech.rank() == ambient_dim {
                break;
            }
            ech.insert(v);
        }
        Self {
            ambient_dim,
            basis: ech.into_reduced_rows(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|v| v.leading().expect("nonzero").0)
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for row in &self.basis {
            let p = row.leading().expect("nonzero").0;
            if let Some(c) = out.get(p).cloned() {
                out = out.add_scaled(row, &-c);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_entries(
            self.basis
                .iter()
                .enumerate()
                .filter_map(|(k, row)| {
                    let p = row.leading().expect("nonzero").0;
                    v.get(p).map(|c| (k, c.clone()))
                }),
        );
        let rebuilt = self.combine(&coords);
        (rebuilt == *v).then_some(coords)
    }

    /// The ambient vector with the given coordinates.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        coords
            .iter()
            .fold(SparseVec::new(), |acc, (k, c)| acc.add_scaled(&self.basis[k], c))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_spanning(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

/// Standard basis vectors spanning a complement of `sub` (the non-pivot
/// coordinates of its echelon form).
pub fn quotient_basis(ambient_dim: usize, sub: &Subspace) -> Vec<SparseVec> {
    assert_eq!(ambient_dim, sub.ambient_dim(), "ambient dimension mismatch");
    let mut is_pivot = vec![false; ambient_dim];
    for p in sub.pivots() {
        is_pivot[p] = true;
    }
    (0..ambient_dim)
        .filter(|&i| !is_pivot[i])
        .map(SparseVec::unit)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_entries(xs.iter().enumerate().map(|(i, &x)| (i, q(x))))
    }

    #[test]
    fn quotient_of_zero_is_standard_basis() {
        let b = quotient_basis(3, &Subspace::zero(3));
        assert_eq!(b, (0..3).map(SparseVec::unit).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_of_full_is_empty() {
        assert!(quotient_basis(3, &Subspace::full(3)).is_empty());
    }

    #[test]
    fn quotient_of_diagonal_line() {
        let s = Subspace::from_spanning(2, [v(&[1, 1])]);
        let reps = quotient_basis(2, &s);
        assert_eq!(reps.len(), 1);
        // the representative together with the line spans everything
        assert_eq!(s.sum(&Subspace::from_spanning(2, reps)).dim(), 2);
    }

    #[test]
    fn canonical_form_is_independent_of_spanning_set() {
        let a = Subspace::from_spanning(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_spanning(3, [v(&[1, 3, 1]), v(&[2, 3, -1]), v(&[1, 2, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::from_spanning(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 1]);
        let c = s.coordinates(&x).unwrap();
        assert_eq!(s.combine(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }

    proptest! {
        #[test]
        fn normal_form_projection_is_idempotent(
            gens in proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 0..4),
            x in proptest::collection::vec(-3i64..4, 4),
        ) {
            let s = Subspace::from_spanning(4, gens.iter().map(|g| v(g)));
            let once = s.reduce(&v(&x));
            prop_assert_eq!(s.reduce(&once), once.clone());
            prop_assert!(s.contains(&v(&x).sub(&once)));
            prop_assert_eq!(quotient_basis(4, &s).len(), 4 - s.dim());
            for p in s.pivots() {
                prop_assert!(once.get(p).is_none());
            }
        }
    }
}
