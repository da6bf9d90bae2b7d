//! The degree-raising operators on tensor words and their matrices.
//!
//! Every operator is written once as a per-word rule; matrices and the
//! action on sparse tensors are both derived from that rule.

use num_traits::One;

use crate::coalgebra::{diagonal_coaction, lie_of, Coalgebra, LeibnizCoalgebra, Structure};
use crate::error::Result;
use crate::linalg::{Rational, SparseMatrix};
use crate::perm::{antisymmetrizer, GroupAlgebraElement};
use crate::tensor::{word_map, SparseTensor};

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `∂_j`: replaces letter `j` by the two halves of its coproduct.
fn face(delta: &Structure, w: &[usize], j: usize, c: &Rational, out: &mut SparseTensor) {
    for (a, b, v) in &delta[w[j]] {
        let mut word = Vec::with_capacity(w.len() + 1);
        word.extend_from_slice(&w[..j]);
        word.push(*a);
        word.push(*b);
        word.extend_from_slice(&w[j + 1..]);
        out.add_term(word, c * v);
    }
}

/// `d^CB_n(w) = Σ_{j<n} (-1)^j ∂_j(w)`, accumulated with weight `c`.
pub fn bar_word(delta: &Structure, w: &[usize], c: &Rational, out: &mut SparseTensor) {
    for j in 0..w.len() {
        face(delta, w, j, &(c * sign(j)), out);
    }
}

/// `d^CH_n = d^CB_n + (-1)^n τ_{n+1}^{-1} ∂_0`; the extra face sends
/// `c¹⊗…⊗cⁿ` to `c¹₍₂₎⊗c²⊗…⊗cⁿ⊗c¹₍₁₎`.
pub fn hochschild_word(delta: &Structure, w: &[usize], c: &Rational, out: &mut SparseTensor) {
    let n = w.len();
    if n == 0 {
        return;
    }
    bar_word(delta, w, c, out);
    let s = c * sign(n);
    for (a, b, v) in &delta[w[0]] {
        let mut word = Vec::with_capacity(n + 1);
        word.push(*b);
        word.extend_from_slice(&w[1..]);
        word.push(*a);
        out.add_term(word, &s * v);
    }
}

/// `(ρ_j ⊗ id_{n-j})(w)`: each of the first `j` letters emits `x_[2]`,
/// which is inserted right after slot `j`.
pub fn partial_coaction_word(
    cobracket: &Structure,
    w: &[usize],
    j: usize,
    c: &Rational,
    out: &mut SparseTensor,
) {
    for i in 0..j {
        for (a, b, v) in &cobracket[w[i]] {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.extend_from_slice(&w[..j]);
            word[i] = *a;
            word.push(*b);
            word.extend_from_slice(&w[j..]);
            out.add_term(word, c * v);
        }
    }
}

/// `d^CE_n = Σ_{j=1}^n (-1)^{j-1} (ρ_j ⊗ id_{n-j})`.
pub fn ce_word(cobracket: &Structure, w: &[usize], c: &Rational, out: &mut SparseTensor) {
    for j in 1..=w.len() {
        partial_coaction_word(cobracket, w, j, &(c * sign(j - 1)), out);
    }
}

fn apply_rule<F>(t: &SparseTensor, mut rule: F) -> SparseTensor
where
    F: FnMut(&[usize], &Rational, &mut SparseTensor),
{
    let mut out = SparseTensor::zero(t.dim(), t.degree() + 1);
    for (w, c) in t.terms() {
        rule(w, c, &mut out);
    }
    out
}

pub fn bar_apply(c: &Coalgebra, t: &SparseTensor) -> SparseTensor {
    apply_rule(t, |w, x, out| bar_word(c.delta(), w, x, out))
}

pub fn hochschild_apply(c: &Coalgebra, t: &SparseTensor) -> SparseTensor {
    apply_rule(t, |w, x, out| hochschild_word(c.delta(), w, x, out))
}

pub fn ce_apply(l: &LeibnizCoalgebra, t: &SparseTensor) -> SparseTensor {
    apply_rule(t, |w, x, out| ce_word(l.cobracket(), w, x, out))
}

/// `ρ_n` applied to a tensor, the emitted letter appended last.
pub fn coaction_apply(l: &LeibnizCoalgebra, t: &SparseTensor) -> SparseTensor {
    apply_rule(t, |w, x, out| {
        partial_coaction_word(l.cobracket(), w, w.len(), x, out)
    })
}

pub fn bar_matrix(c: &Coalgebra, n: usize) -> SparseMatrix {
    let one = Rational::one();
    word_map(c.dim(), n, n + 1, |w, out| bar_word(c.delta(), w, &one, out))
}

pub fn hochschild_matrix(c: &Coalgebra, n: usize) -> SparseMatrix {
    let one = Rational::one();
    word_map(c.dim(), n, n + 1, |w, out| {
        hochschild_word(c.delta(), w, &one, out)
    })
}

pub fn ce_matrix(l: &LeibnizCoalgebra, n: usize) -> SparseMatrix {
    let one = Rational::one();
    word_map(l.dim(), n, n + 1, |w, out| ce_word(l.cobracket(), w, &one, out))
}

/// `ρ_j ⊗ id_{n-j}` on `L^{⊗n}`.
pub fn partial_coaction_matrix(l: &LeibnizCoalgebra, n: usize, j: usize) -> SparseMatrix {
    let one = Rational::one();
    word_map(l.dim(), n, n + 1, |w, out| {
        partial_coaction_word(l.cobracket(), w, j, &one, out)
    })
}

/// `ρ_n` on `L^{⊗n}` in the tensor layout `L^{⊗n}⊗L = L^{⊗(n+1)}`.
pub fn coaction_matrix(l: &LeibnizCoalgebra, n: usize) -> Result<SparseMatrix> {
    Ok(diagonal_coaction(l, n)?.matrix().clone())
}

/// The bar homotopy `h_n(x) = Σ_j (-1)^j (…x̂ʲ…)⊗xʲ`: the action of the
/// group-algebra element `h_n`, reading `C^{⊗n}` as `C^{⊗(n-1)}⊗C`.
pub fn bar_homotopy_matrix(dim: usize, n: usize) -> SparseMatrix {
    crate::perm::h_element(n).matrix(dim)
}

/// `ε_n` on `C^{⊗n}`, with `ε_0 = id_k`.
pub fn antisymmetrizer_matrix(dim: usize, n: usize) -> SparseMatrix {
    if n == 0 {
        return SparseMatrix::identity(1);
    }
    antisymmetrizer(n).matrix(dim)
}

/// `id_1 ⊗ ε_{n-1}` as an element of `k[Σ_n]`.
pub fn shifted_antisymmetrizer(n: usize) -> GroupAlgebraElement {
    assert!(n >= 1);
    if n == 1 {
        GroupAlgebraElement::identity(1)
    } else {
        GroupAlgebraElement::identity(1).tensor(&antisymmetrizer(n - 1))
    }
}

/// The Lie coalgebra `Lie(C)` as a plain Leibniz coalgebra.
pub fn lie_leibniz(c: &Coalgebra) -> Result<LeibnizCoalgebra> {
    Ok(lie_of(c)?.into_leibniz())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{matrix_coalgebra, trivial};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn bar_on_k_alternates() {
        let k = trivial();
        let expected = [0, 1, 0, 1, 0, 1];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(bar_matrix(&k, n).get(0, 0), q(*e), "n = {n}");
        }
    }

    #[test]
    fn hochschild_on_k() {
        let k = trivial();
        // odd n: 1 - 1 = 0; even n ≥ 2: 0 + 1 = 1
        let expected = [0, 0, 1, 0, 1, 0];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(hochschild_matrix(&k, n).get(0, 0), q(*e), "n = {n}");
        }
    }

    #[test]
    fn hochschild_extra_face_rotates() {
        // on M_2^c(k), d^CH_1(e_12) has the term e_22⊗e_11... check a term
        let m = matrix_coalgebra(2).unwrap();
        let t = SparseTensor::basis(4, vec![1]);
        let out = hochschild_apply(&m, &t);
        // d^CB_1(e_12) = e11⊗e12 + e12⊗e22; extra = -(e12⊗e11 + e22⊗e12)
        assert_eq!(out.coefficient(&[0, 1]), q(1));
        assert_eq!(out.coefficient(&[1, 3]), q(1));
        assert_eq!(out.coefficient(&[1, 0]), q(-1));
        assert_eq!(out.coefficient(&[3, 1]), q(-1));
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn ce_degree_one_is_cobracket() {
        let l = lie_leibniz(&matrix_coalgebra(2).unwrap()).unwrap();
        let d1 = ce_matrix(&l, 1);
        assert_eq!(d1, coaction_matrix(&l, 1).unwrap());
    }

    #[test]
    fn matrix_and_tensor_views_agree() {
        let m = matrix_coalgebra(2).unwrap();
        let l = lie_leibniz(&m).unwrap();
        let d = ce_matrix(&l, 2);
        let t = SparseTensor::basis(4, vec![1, 2]);
        assert_eq!(d.apply(&t.to_vec()), ce_apply(&l, &t).to_vec());
        let b = bar_matrix(&m, 2);
        assert_eq!(b.apply(&t.to_vec()), bar_apply(&m, &t).to_vec());
    }
}
