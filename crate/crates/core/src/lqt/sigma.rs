//! The Hopf algebra `⊕_m C^{⊗m} ⊗ k[Σ_m^ad]`: concatenation with block
//! sums as product, splitting along `σ`-stable subsets as coproduct.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::perm::Permutation;
use crate::tensor::Word;

/// A basis element `c ⊗ σ`.
pub type SigmaAdTerm = (Word, Permutation);

/// Finite combination `Σ_i r_i (c_i ⊗ σ_i)` in a fixed degree `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaAdElement {
    m: usize,
    terms: BTreeMap<SigmaAdTerm, Rational>,
}

/// An element of the tensor square, as a sum over pairs of basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SigmaAdTensor {
    terms: BTreeMap<(SigmaAdTerm, SigmaAdTerm), Rational>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SigmaAdElement {
    pub fn zero(m: usize) -> Self {
        Self {
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: empty word, `σ ∈ Σ_0`.
    pub fn unit() -> Self {
        Self::basis(Vec::new(), Permutation::identity(0)).expect("degree 0")
    }

    pub fn basis(word: Word, sigma: Permutation) -> Result<Self> {
        let mut e = Self::zero(word.len());
        e.add_term(word, sigma, Rational::one())?;
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SigmaAdTerm, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: Word, sigma: Permutation, c: Rational) -> Result<()> {
        if word.len() != self.m || sigma.n() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "term of word length {} and Σ_{} in degree {}",
                word.len(),
                sigma.n(),
                self.m
            )));
        }
        accumulate(&mut self.terms, (word, sigma), c);
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for ((w, s), c) in &other.terms {
            out.add_term(w.clone(), s.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// `(c ⊗ σ)(d ⊗ δ) = (cd ⊗ σ ⊕ δ)`, extended bilinearly.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.m + other.m);
        for ((c, s), x) in &self.terms {
            for ((d, t), y) in &other.terms {
                let word = [c.as_slice(), d.as_slice()].concat();
                accumulate(&mut out.terms, (word, s.direct_sum(t)), x * y);
            }
        }
        out
    }

    /// `Δ(c ⊗ σ) = Σ_{P ⊔ Q, σ(P) = P} (c^P ⊗ σ^P) ⊗ (c^Q ⊗ σ^Q)`, over
    /// ordered splittings; restrictions are reindexed along the increasing
    /// enumeration of `P` and `Q`.
    pub fn coproduct(&self) -> SigmaAdTensor {
        let mut out = SigmaAdTensor::default();
        for ((c, s), x) in &self.terms {
            for mask in stable_subsets(s) {
                let (left, right) = split(c, s, mask);
                accumulate(&mut out.terms, (left, right), x.clone());
            }
        }
        out
    }

    /// Whether `Δ(a) = 1 ⊗ a + a ⊗ 1`.
    pub fn is_primitive(&self) -> bool {
        let mut expected = SigmaAdTensor::default();
        let one = (Vec::new(), Permutation::identity(0));
        for (t, x) in &self.terms {
            accumulate(&mut expected.terms, (one.clone(), t.clone()), x.clone());
            accumulate(&mut expected.terms, (t.clone(), one.clone()), x.clone());
        }
        self.coproduct() == expected
    }

    /// `δ · (c ⊗ σ) = (δ·c) ⊗ (δ⁻¹ σ δ)` on each term, with place action on
    /// words and conjugation keeping stable subsets aligned with letters.
    pub fn act(&self, delta: &Permutation) -> Self {
        let mut out = Self::zero(self.m);
        for ((c, s), x) in &self.terms {
            accumulate(&mut out.terms, act_term(delta, c, s), x.clone());
        }
        out
    }

    /// Image in the coinvariants `(C^{⊗m} ⊗ k[Σ_m^ad])_{Σ_m}` (unsigned
    /// action): every term replaced by the least element of its orbit.
    pub fn coinvariant_class(&self) -> Self {
        let mut out = Self::zero(self.m);
        for ((c, s), x) in &self.terms {
            accumulate(&mut out.terms, canonical(c, s), x.clone());
        }
        out
    }
}

impl SigmaAdTensor {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(SigmaAdTerm, SigmaAdTerm), &Rational)> + '_ {
        self.terms.iter()
    }

    /// Factorwise product `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (((c1, s1), (c2, s2)), x) in &self.terms {
            for (((d1, t1), (d2, t2)), y) in &other.terms {
                let left = ([c1.as_slice(), d1.as_slice()].concat(), s1.direct_sum(t1));
                let right = ([c2.as_slice(), d2.as_slice()].concat(), s2.direct_sum(t2));
                accumulate(&mut out.terms, (left, right), x * y);
            }
        }
        out
    }

    /// Both factors replaced by their coinvariant representatives.
    pub fn coinvariant_class(&self) -> Self {
        let mut out = Self::default();
        for (((c1, s1), (c2, s2)), x) in &self.terms {
            accumulate(&mut out.terms, (canonical(c1, s1), canonical(c2, s2)), x.clone());
        }
        out
    }
}

fn act_term(delta: &Permutation, c: &[usize], s: &Permutation) -> SigmaAdTerm {
    (delta.act(c), delta.mul(s).mul(&delta.inverse()))
}

fn canonical(c: &[usize], s: &Permutation) -> SigmaAdTerm {
    Permutation::all(c.len())
        .iter()
        .map(|d| act_term(d, c, s))
        .min()
        .expect("Σ_m is nonempty")
}

/// Bit masks of all `σ`-stable subsets of `{0, …, m-1}`: unions of cycles.
fn stable_subsets(s: &Permutation) -> Vec<u64> {
    let m = s.n();
    assert!(m < 64, "degree too large for subset enumeration");
    let mut seen = vec![false; m];
    let mut cycles = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut mask = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            mask |= 1 << i;
            i = s.image(i);
        }
        cycles.push(mask);
    }
    (0..1u64 << cycles.len())
        .map(|choice| {
            cycles
                .iter()
                .enumerate()
                .filter(|(k, _)| choice >> k & 1 == 1)
                .fold(0, |acc, (_, c)| acc | c)
        })
        .collect()
}

fn restrict(c: &[usize], s: &Permutation, positions: &[usize]) -> SigmaAdTerm {
    let mut rank = vec![usize::MAX; c.len()];
    for (k, &p) in positions.iter().enumerate() {
        rank[p] = k;
    }
    let word = positions.iter().map(|&p| c[p]).collect();
    let images = positions.iter().map(|&p| rank[s.image(p)]).collect();
    (word, Permutation::from_images(images).expect("stable subset"))
}

fn split(c: &[usize], s: &Permutation, mask: u64) -> (SigmaAdTerm, SigmaAdTerm) {
    let (p, q): (Vec<usize>, Vec<usize>) = (0..c.len()).partition(|&i| mask >> i & 1 == 1);
    (restrict(c, s, &p), restrict(c, s, &q))
}

impl fmt::Display for SigmaAdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, s), c)| format!("{c}·({w:?} ⊗ {s})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
