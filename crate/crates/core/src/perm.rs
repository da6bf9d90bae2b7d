//! The group algebra `k[Σ_n]` acting on tensor words by place permutation.
//!
//! Convention: a permutation `σ` acts on a word by putting the letter from
//! slot `σ(i)` into slot `i`, so `(σ·x)_i = x_{σ(i)}`. Products are defined
//! so that the action is a left action, `g·(h·x) = (g·h)·x`; as functions on
//! slots this means `(g·h)(i) = h(g(i))`. Under this convention the cyclic
//! generator satisfies `τ_n^{-1}·(c¹⊗…⊗cⁿ) = c²⊗…⊗cⁿ⊗c¹`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix};
use crate::tensor::{word_map, SparseTensor};

/// A bijection of `{0, …, n-1}` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds from 1-based images as written in cycle-free notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidArgument("images are 1-based".into()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Group product `self · other` (act by `other` first).
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation degree mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut k: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.n());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Signed powers; negative exponents use the inverse.
    pub fn powi(&self, k: i64) -> Permutation {
        if k >= 0 {
            self.pow(k as usize)
        } else {
            self.inverse().pow(k.unsigned_abs() as usize)
        }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.n()];
        let mut transpositions = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Block sum: `self` on the first `p` slots, `other` shifted on the rest.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let p = self.n();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&j| j + p));
        Permutation { images }
    }

    /// Place-permutation action on a word: slot `i` receives `word[σ(i)]`.
    pub fn act<T: Clone>(&self, word: &[T]) -> Vec<T> {
        assert_eq!(word.len(), self.n(), "word length mismatch");
        self.images.iter().map(|&j| word[j].clone()).collect()
    }

    /// All permutations of `n` letters in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The generator `τ_n` of the cyclic group `C_n`.
pub fn cyclic(n: usize) -> Permutation {
    assert!(n >= 1, "cyclic(n) needs n ≥ 1");
    Permutation {
        images: (0..n).map(|i| (i + n - 1) % n).collect(),
    }
}

/// Formal rational combination of permutations of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(p: Permutation) -> Self {
        Self::from_terms(p.n(), [(p, Rational::one())])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.n(), self.n, "permutation degree mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    /// Convolution product; acting by the result equals acting by `other`
    /// and then by `self`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "group algebra degree mismatch");
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.mul(q), a * b);
            }
        }
        out
    }

    /// `self ⊗ other` in `k[Σ_{p+q}]` via block sums.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.direct_sum(q), a * b);
            }
        }
        out
    }

    /// Linear extension of the place-permutation action.
    pub fn apply(&self, t: &SparseTensor) -> Result<SparseTensor> {
        if t.degree() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "element of k[Σ_{}] applied to a tensor of degree {}",
                self.n,
                t.degree()
            )));
        }
        let mut out = SparseTensor::zero(t.dim(), t.degree());
        for (w, x) in t.terms() {
            for (p, c) in &self.terms {
                out.add_term(p.act(w), x * c);
            }
        }
        Ok(out)
    }

    /// Matrix of the action on `C^{⊗n}` with `dim C = dim`.
    pub fn matrix(&self, dim: usize) -> SparseMatrix {
        word_map(dim, self.n, self.n, |w, out| {
            for (p, c) in &self.terms {
                out.add_term(p.act(w), c.clone());
            }
        })
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `ε_n = Σ sgn(σ) σ`.
pub fn antisymmetrizer(n: usize) -> GroupAlgebraElement {
    assert!(n >= 1);
    GroupAlgebraElement::from_terms(
        n,
        Permutation::all(n).into_iter().map(|p| {
            let s = p.sign();
            (p, q(s))
        }),
    )
}

/// `N_n = Σ_{j<n} (-1)^{(n-1)j} τ_n^j`.
pub fn norm(n: usize) -> GroupAlgebraElement {
    let tau = cyclic(n);
    GroupAlgebraElement::from_terms(
        n,
        (0..n).map(|j| {
            let sign = if ((n - 1) * j) % 2 == 0 { 1 } else { -1 };
            (tau.pow(j), q(sign))
        }),
    )
}

/// `t_n = id - (-1)^{n-1} τ_n^{-1}`.
pub fn t_operator(n: usize) -> GroupAlgebraElement {
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let mut out = GroupAlgebraElement::identity(n);
    out.add_term(cyclic(n).inverse(), q(-sign));
    out
}

/// `h_n = Σ_{j<n} (-1)^{j+1} (id_j ⊗ τ_{n-j}^{-1})`; moves letter `j+1` to the end.
pub fn h_element(n: usize) -> GroupAlgebraElement {
    assert!(n >= 1);
    GroupAlgebraElement::from_terms(
        n,
        (0..n).map(|j| {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            (
                Permutation::identity(j).direct_sum(&cyclic(n - j).inverse()),
                q(sign),
            )
        }),
    )
}

/// All `(p,q)`-shuffles: permutations increasing on `{0..p}` and on `{p..p+q}`.
pub fn shuffles(p: usize, q_: usize) -> Vec<Permutation> {
    let n = p + q_;
    let mut out = Vec::new();
    // choose the image set of the first block
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let second: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let mut images = first;
        images.extend(second);
        out.push(Permutation { images });
    }
    out.sort();
    out
}

/// `(ε^{(p,q)}, ε_{(p,q)}) = (Σ sgn σ · σ, Σ sgn σ · σ^{-1})` over `(p,q)`-shuffles.
pub fn shuffle_sums(p: usize, q_: usize) -> (GroupAlgebraElement, GroupAlgebraElement) {
    assert!(p >= 1 && q_ >= 1);
    let sh = shuffles(p, q_);
    let upper = GroupAlgebraElement::from_terms(
        p + q_,
        sh.iter().map(|s| (s.clone(), q(s.sign()))),
    );
    let lower = GroupAlgebraElement::from_terms(
        p + q_,
        sh.iter().map(|s| (s.inverse(), q(s.sign()))),
    );
    (upper, lower)
}

/// The conjugacy class of `τ_m`: every `m`-cycle in `Σ_m`.
pub fn long_cycle_class(m: usize) -> Vec<Permutation> {
    assert!(m >= 1);
    let tau = cyclic(m);
    let mut class: Vec<Permutation> = Permutation::all(m)
        .into_iter()
        .map(|g| g.inverse().mul(&tau).mul(&g))
        .collect();
    class.sort();
    class.dedup();
    class
}

/// Elements of `Σ_m` commuting with `τ_m`.
pub fn centralizer_of_cycle(m: usize) -> Vec<Permutation> {
    let tau = cyclic(m);
    Permutation::all(m)
        .into_iter()
        .filter(|g| g.mul(&tau) == tau.mul(g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::SparseTensor;

    fn word_tensor(w: &[usize]) -> SparseTensor {
        SparseTensor::basis(3, w.to_vec())
    }

    #[test]
    fn inverse_cycle_rotates_left() {
        let t = cyclic(3).inverse();
        let out = GroupAlgebraElement::from_perm(t).apply(&word_tensor(&[0, 1, 2])).unwrap();
        assert_eq!(out, word_tensor(&[1, 2, 0]));
    }

    #[test]
    fn identity_leaves_tensor_unchanged() {
        let out = GroupAlgebraElement::identity(3).apply(&word_tensor(&[2, 0, 1])).unwrap();
        assert_eq!(out, word_tensor(&[2, 0, 1]));
    }

    #[test]
    fn transposition_swaps_first_two_slots() {
        let s = cyclic(2).direct_sum(&Permutation::identity(1));
        let out = GroupAlgebraElement::from_perm(s).apply(&word_tensor(&[0, 1, 2])).unwrap();
        assert_eq!(out, word_tensor(&[1, 0, 2]));
    }

    #[test]
    fn apply_rejects_length_mismatch() {
        let e = GroupAlgebraElement::identity(2);
        assert!(e.apply(&word_tensor(&[0, 1, 2])).is_err());
    }

    #[test]
    fn cyclic_generators() {
        assert!(cyclic(1).is_identity());
        assert_eq!(cyclic(2), Permutation::from_one_based(&[2, 1]).unwrap());
        let t3 = cyclic(3);
        assert!(!t3.pow(1).is_identity() && !t3.pow(2).is_identity());
        assert!(t3.pow(3).is_identity());
    }

    #[test]
    fn antisymmetrizer_small_cases() {
        assert_eq!(antisymmetrizer(1), GroupAlgebraElement::identity(1));
        let e2 = antisymmetrizer(2);
        let expected = GroupAlgebraElement::identity(2)
            .sub(&GroupAlgebraElement::from_perm(cyclic(2)));
        assert_eq!(e2, expected);
        let e3 = antisymmetrizer(3);
        assert_eq!(e3.len(), 6);
        assert_eq!(e3.mul(&e3), e3.scale(&q(6)));
    }

    #[test]
    fn antisymmetrizer_absorbs_with_sign() {
        let e = antisymmetrizer(4);
        for s in Permutation::all(4) {
            let lhs = GroupAlgebraElement::from_perm(s.clone()).mul(&e);
            assert_eq!(lhs, e.scale(&q(s.sign())));
        }
        assert_eq!(e.mul(&e), e.scale(&q(24)));
    }

    #[test]
    fn norm_small_cases() {
        assert_eq!(norm(1), GroupAlgebraElement::identity(1));
        assert_eq!(
            norm(2),
            GroupAlgebraElement::identity(2).sub(&GroupAlgebraElement::from_perm(cyclic(2)))
        );
        let t = cyclic(3);
        let expected = GroupAlgebraElement::from_terms(
            3,
            [(t.pow(0), q(1)), (t.pow(1), q(1)), (t.pow(2), q(1))],
        );
        assert_eq!(norm(3), expected);
    }

    #[test]
    fn norm_absorbs_signed_rotation() {
        for n in 1..=6 {
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let lhs = GroupAlgebraElement::from_perm(cyclic(n)).mul(&norm(n)).scale(&q(sign));
            assert_eq!(lhs, norm(n));
        }
    }

    #[test]
    fn t_operator_small_cases() {
        assert!(t_operator(1).is_zero());
        assert_eq!(
            t_operator(2),
            GroupAlgebraElement::identity(2).add(&GroupAlgebraElement::from_perm(cyclic(2)))
        );
        assert_eq!(
            t_operator(3),
            GroupAlgebraElement::identity(3)
                .sub(&GroupAlgebraElement::from_perm(cyclic(3).inverse()))
        );
    }

    #[test]
    fn t_and_norm_compose_to_zero() {
        for n in 1..=6 {
            assert!(t_operator(n).mul(&norm(n)).is_zero());
            assert!(norm(n).mul(&t_operator(n)).is_zero());
        }
    }

    #[test]
    fn h_element_small_cases() {
        assert_eq!(h_element(1), GroupAlgebraElement::identity(1).scale(&q(-1)));
        let expected = GroupAlgebraElement::identity(2)
            .sub(&GroupAlgebraElement::from_perm(cyclic(2)));
        assert_eq!(h_element(2), expected);
    }

    #[test]
    fn antisymmetrizer_times_h() {
        // (ε_n ⊗ id_1) h_{n+1} = (-1)^{n+1} ε_{n+1}
        for n in 1..=5 {
            let lhs = antisymmetrizer(n)
                .tensor(&GroupAlgebraElement::identity(1))
                .mul(&h_element(n + 1));
            let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, antisymmetrizer(n + 1).scale(&q(sign)), "n = {n}");
        }
    }

    #[test]
    fn coset_decomposition_by_cyclic_powers() {
        for n in 1..=4 {
            let sub: Vec<Permutation> = Permutation::all(n)
                .into_iter()
                .map(|s| s.direct_sum(&Permutation::identity(1)))
                .collect();
            let tau = cyclic(n + 1);
            let mut all: Vec<Permutation> = (0..=n)
                .flat_map(|j| {
                    let t = tau.pow(j);
                    sub.iter().map(move |s| s.mul(&t))
                })
                .collect();
            let total = all.len();
            all.sort();
            all.dedup();
            assert_eq!(total, all.len());
            assert_eq!(all.len(), Permutation::all(n + 1).len());
        }
    }

    #[test]
    fn shuffle_sum_sizes_and_factorization() {
        let (up, low) = shuffle_sums(1, 1);
        let expected = GroupAlgebraElement::identity(2)
            .sub(&GroupAlgebraElement::from_perm(cyclic(2)));
        assert_eq!(up, expected);
        assert_eq!(low, expected);
        assert_eq!(shuffle_sums(2, 1).0.len(), 3);
        for (p, q_) in [(2, 2), (1, 3), (3, 2), (2, 3)] {
            let (up, low) = shuffle_sums(p, q_);
            assert_eq!(up.len(), binomial(p + q_, p));
            let blocks = antisymmetrizer(p).tensor(&antisymmetrizer(q_));
            assert_eq!(blocks.mul(&up), antisymmetrizer(p + q_));
            assert_eq!(low.mul(&blocks), antisymmetrizer(p + q_));
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn long_cycles_and_centralizer() {
        assert_eq!(long_cycle_class(1), vec![Permutation::identity(1)]);
        assert_eq!(long_cycle_class(2), vec![cyclic(2)]);
        assert_eq!(long_cycle_class(4).len(), 6);
        assert!(long_cycle_class(5).iter().all(|c| c.cycle_type() == vec![5]));
        for m in 1..=5 {
            let mut cent = centralizer_of_cycle(m);
            let mut powers: Vec<Permutation> = (0..m).map(|j| cyclic(m).pow(j)).collect();
            cent.sort();
            powers.sort();
            assert_eq!(cent, powers);
        }
    }

    #[test]
    fn direct_sum_blocks() {
        assert!(Permutation::identity(2).direct_sum(&Permutation::identity(3)).is_identity());
        assert_eq!(
            cyclic(2).direct_sum(&Permutation::identity(1)),
            Permutation::from_one_based(&[2, 1, 3]).unwrap()
        );
        assert_eq!(
            cyclic(2).direct_sum(&cyclic(2)),
            Permutation::from_one_based(&[2, 1, 4, 3]).unwrap()
        );
    }

    #[test]
    fn action_is_a_left_action_on_sigma_3() {
        let t = {
            let mut t = SparseTensor::zero(3, 3);
            t.add_term(vec![0, 1, 2], q(2));
            t.add_term(vec![2, 2, 0], q(-1));
            t.add_term(vec![1, 0, 1], q(3));
            t
        };
        for g in Permutation::all(3) {
            for h in Permutation::all(3) {
                let gg = GroupAlgebraElement::from_perm(g.clone());
                let hh = GroupAlgebraElement::from_perm(h.clone());
                let two_steps = gg.apply(&hh.apply(&t).unwrap()).unwrap();
                let one_step = gg.mul(&hh).apply(&t).unwrap();
                assert_eq!(two_steps, one_step);
            }
        }
    }
}
