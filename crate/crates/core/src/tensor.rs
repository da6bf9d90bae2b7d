//! Tensor powers `C^{⊗m}` of a finite basis, indexed lexicographically.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{Rational, SparseMatrix, SparseVec};

/// Basis element of `C^{⊗m}`: a word of basis indices.
pub type Word = Vec<usize>;

/// Number of words of length `degree` over `dim` letters, or `None` on overflow.
pub fn space_dim(dim: usize, degree: usize) -> Option<usize> {
    dim.checked_pow(u32::try_from(degree).ok()?)
}

pub fn word_index(word: &[usize], dim: usize) -> usize {
    word.iter().fold(0, |acc, &c| acc * dim + c)
}

pub fn index_word(mut index: usize, dim: usize, degree: usize) -> Word {
    let mut w = vec![0; degree];
    for slot in w.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    w
}

/// All words of the given length in lexicographic order.
pub fn words(dim: usize, degree: usize) -> impl Iterator<Item = Word> {
    let n = space_dim(dim, degree).expect("tensor power too large");
    (0..n).map(move |i| index_word(i, dim, degree))
}

/// Strictly increasing words, the wedge basis of the exterior power.
pub fn increasing_words(dim: usize, degree: usize) -> Vec<Word> {
    fn rec(dim: usize, left: usize, start: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in start..dim {
            if dim - c < left {
                break;
            }
            cur.push(c);
            rec(dim, left - 1, c + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, degree, 0, &mut Vec::new(), &mut out);
    out
}

/// Sparse rational combination of words of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Word, Rational>,
}

impl SparseTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, word: Word) -> Self {
        let mut t = Self::zero(dim, word.len());
        t.add_term(word, Rational::from_integer(1.into()));
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        assert_eq!(word.len(), self.degree, "word length mismatch");
        debug_assert!(word.iter().all(|&c| c < self.dim));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseTensor, c: &Rational) {
        assert_eq!(self.degree, other.degree);
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseTensor {
        let mut out = SparseTensor::zero(self.dim, self.degree);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Concatenation `self ⊗ other`.
    pub fn tensor(&self, other: &SparseTensor) -> SparseTensor {
        assert_eq!(self.dim, other.dim);
        let mut out = SparseTensor::zero(self.dim, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    pub fn to_vec(&self) -> SparseVec {
        SparseVec::from_entries(
            self.terms
                .iter()
                .map(|(w, v)| (word_index(w, self.dim), v.clone())),
        )
    }

    pub fn from_vec(dim: usize, degree: usize, v: &SparseVec) -> SparseTensor {
        let mut out = SparseTensor::zero(dim, degree);
        for (i, c) in v.iter() {
            out.add_term(index_word(i, dim, degree), c.clone());
        }
        out
    }
}

/// Matrix of a linear map `C^{⊗src_degree} → C^{⊗tgt_degree}` given by its
/// action on basis words.
pub fn word_map<F>(dim: usize, src_degree: usize, tgt_degree: usize, mut f: F) -> SparseMatrix
where
    F: FnMut(&[usize], &mut SparseTensor),
{
    let rows = space_dim(dim, tgt_degree).expect("tensor power too large");
    let columns = words(dim, src_degree)
        .map(|w| {
            let mut out = SparseTensor::zero(dim, tgt_degree);
            f(&w, &mut out);
            out.to_vec()
        })
        .collect();
    SparseMatrix::from_columns(rows, columns)
}
