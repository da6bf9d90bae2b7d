//! Product structures: the shuffle product and deconcatenation coproduct
//! on `CE^sym`, and the tensor product on `CE^red`.

use num_traits::One;

use crate::coalgebra::{Coalgebra, LeibnizCoalgebra};
use crate::error::Result;
use crate::linalg::Rational;
use crate::perm::{antisymmetrizer, shuffle_sums, GroupAlgebraElement, Permutation};
use crate::report::Report;
use crate::tensor::{increasing_words, SparseTensor};

use super::build::{build_reduced_ce, wedge_tensor};
use super::ops::{ce_apply, coaction_apply, lie_leibniz};
use super::DegreeSpace;

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn swap_blocks(p: usize, q: usize) -> Permutation {
    // slot i receives the letter at (i + p) mod (p + q): Ψ⊗Φ ↦ Φ⊗Ψ
    Permutation::from_images((0..p + q).map(|i| (i + p) % (p + q)).collect())
        .expect("rotation is a permutation")
}

/// `μ(Ψ, Φ) = ε_{(p,q)}(Ψ ⊗ Φ)`.
pub fn shuffle_product(a: &SparseTensor, b: &SparseTensor) -> SparseTensor {
    let (p, q) = (a.degree(), b.degree());
    let ab = a.tensor(b);
    if p == 0 || q == 0 {
        return ab;
    }
    let (_, lower) = shuffle_sums(p, q);
    lower.apply(&ab).expect("degrees match")
}

/// `ε_{p+q} = (ε_p ⊗ ε_q) ε^{(p,q)} = ε_{(p,q)} (ε_p ⊗ ε_q)` in `k[Σ_{p+q}]`.
pub fn shuffle_factorization_check(max_p_plus_q: usize) -> Report {
    let mut r = Report::new();
    for n in 2..=max_p_plus_q {
        let full = antisymmetrizer(n);
        for p in 1..n {
            let q = n - p;
            let block: GroupAlgebraElement = antisymmetrizer(p).tensor(&antisymmetrizer(q));
            let (upper, lower) = shuffle_sums(p, q);
            r.record(
                format!("ε = (ε ⊗ ε) ε^({p},{q})"),
                Some(n),
                (block.mul(&upper) != full).then(|| "group algebra elements differ".into()),
            );
            r.record(
                format!("ε = ε_({p},{q}) (ε ⊗ ε)"),
                Some(n),
                (lower.mul(&block) != full).then(|| "group algebra elements differ".into()),
            );
        }
    }
    r
}

fn describe(c: &Coalgebra, u: &[usize], v: &[usize]) -> String {
    format!("ε({}) · ε({})", c.word_label(u), c.word_label(v))
}

/// On `CE^sym_*(Lie(C))` for `p, q ≥ 1`, `p + q ≤ max_p_plus_q`, over all
/// pairs of wedge basis elements: closure `μ(ε u, ε v) = ε(uv)`, graded
/// commutativity, and the Leibniz rule for `d^CE`.
pub fn shuffle_product_check(c: &Coalgebra, max_p_plus_q: usize) -> Result<Report> {
    let l = lie_leibniz(c)?;
    let n = c.dim();
    let mut r = Report::new();
    for total in 2..=max_p_plus_q {
        for p in 1..total {
            let q = total - p;
            let (mut closure, mut commute, mut leibniz) = (None, None, None);
            for u in increasing_words(n, p) {
                let a = wedge_tensor(n, &u);
                let da = ce_apply(&l, &a);
                for v in increasing_words(n, q) {
                    let b = wedge_tensor(n, &v);
                    let ab = shuffle_product(&a, &b);
                    let uv = [u.as_slice(), v.as_slice()].concat();
                    if closure.is_none() && ab != wedge_tensor(n, &uv) {
                        closure = Some(describe(c, &u, &v));
                    }
                    if commute.is_none() && ab != shuffle_product(&b, &a).scale(&sign(p * q)) {
                        commute = Some(describe(c, &u, &v));
                    }
                    if leibniz.is_none() {
                        let mut rhs = shuffle_product(&da, &b);
                        rhs.add_scaled(&shuffle_product(&a, &ce_apply(&l, &b)), &sign(p));
                        if ce_apply(&l, &ab) != rhs {
                            leibniz = Some(describe(c, &u, &v));
                        }
                    }
                }
            }
            let deg = Some(total);
            r.record(format!("shuffle product closes on im ε ({p},{q})"), deg, closure);
            r.record(format!("shuffle product is graded commutative ({p},{q})"), deg, commute);
            r.record(format!("d is a derivation of the shuffle product ({p},{q})"), deg, leibniz);
        }
    }
    Ok(r)
}

/// Deconcatenation on `im ε_m`, `m ≤ max_deg`: each `(p,q)` block of
/// `ε(w)` lies in `im ε_p ⊗ im ε_q`, and swapping blocks gives the
/// `(q,p)` block up to `(-1)^{pq}`.
pub fn deconcat_coproduct_check(c: &Coalgebra, max_deg: usize) -> Report {
    let n = c.dim();
    let mut r = Report::new();
    for m in 2..=max_deg {
        for p in 1..m {
            let q = m - p;
            let adjacent: Vec<Permutation> = (0..m - 1)
                .filter(|&i| i + 1 != p)
                .map(|i| {
                    let mut images: Vec<usize> = (0..m).collect();
                    images.swap(i, i + 1);
                    Permutation::from_images(images).expect("transposition")
                })
                .collect();
            let swap = GroupAlgebraElement::from_perm(swap_blocks(p, q));
            let (mut closure, mut cocommute) = (None, None);
            for w in increasing_words(n, m) {
                // the (p,q) block of Δ(ε w) is ε w regrouped as C^{⊗p} ⊗ C^{⊗q}
                let x = wedge_tensor(n, &w);
                if closure.is_none() {
                    let bad = adjacent.iter().any(|s| {
                        let sx = GroupAlgebraElement::from_perm(s.clone()).apply(&x).expect("degree");
                        sx != x.scale(&-Rational::one())
                    });
                    if bad {
                        closure = Some(format!("ε({})", c.word_label(&w)));
                    }
                }
                if cocommute.is_none() && swap.apply(&x).expect("degree") != x.scale(&sign(p * q)) {
                    cocommute = Some(format!("ε({})", c.word_label(&w)));
                }
            }
            r.record(format!("deconcatenation closes on im ε ({p},{q})"), Some(m), closure);
            r.record(format!("deconcatenation is graded cocommutative ({p},{q})"), Some(m), cocommute);
        }
    }
    r
}

/// On `CE^red = ker ρ`: `a ⊗ b` is invariant for invariant `a`, `b`, and
/// `d(a ⊗ b) = da ⊗ b + (-1)^p a ⊗ db`, for `p + q ≤ max_deg`.
pub fn reduced_ce_product_check(l: &LeibnizCoalgebra, max_deg: usize) -> Result<Report> {
    let red = build_reduced_ce(l, max_deg)?;
    let n = l.dim();
    let kernel = |m: usize| -> Vec<SparseTensor> {
        match red.space(m) {
            Some(DegreeSpace::Sub(s)) => s
                .basis()
                .iter()
                .map(|v| SparseTensor::from_vec(n, m, v))
                .collect(),
            _ => unreachable!("reduced complex stores subspaces"),
        }
    };
    let mut r = Report::new();
    for total in 0..=max_deg {
        for p in 0..=total {
            let q = total - p;
            let (mut closure, mut leibniz) = (None, None);
            let (ks, kt) = (kernel(p), kernel(q));
            for (i, a) in ks.iter().enumerate() {
                let da = ce_apply(l, a);
                for (j, b) in kt.iter().enumerate() {
                    let ab = a.tensor(b);
                    if closure.is_none() && !coaction_apply(l, &ab).is_zero() {
                        closure = Some(format!("kernel vectors {i} ⊗ {j}"));
                    }
                    if leibniz.is_none() {
                        let mut rhs = da.tensor(b);
                        rhs.add_scaled(&a.tensor(&ce_apply(l, b)), &sign(p));
                        if ce_apply(l, &ab) != rhs {
                            leibniz = Some(format!("kernel vectors {i} ⊗ {j}"));
                        }
                    }
                }
            }
            r.record(format!("invariants are closed under ⊗ ({p},{q})"), Some(total), closure);
            r.record(format!("d is a derivation of ⊗ on invariants ({p},{q})"), Some(total), leibniz);
        }
    }
    Ok(r)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{gl_coalgebra_k, group_coalgebra, lie_of, matrix_coalgebra, trivial};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn degree_one_product_is_the_wedge() {
        let a = SparseTensor::basis(4, vec![0]);
        let b = SparseTensor::basis(4, vec![1]);
        let ab = shuffle_product(&a, &b);
        assert_eq!(ab.coefficient(&[0, 1]), q(1));
        assert_eq!(ab.coefficient(&[1, 0]), q(-1));
        assert_eq!(ab.len(), 2);
        assert_eq!(shuffle_product(&b, &a), ab.scale(&q(-1)));
    }

    #[test]
    fn factorization() {
        assert!(shuffle_factorization_check(5).passed());
    }

    #[test]
    fn shuffle_algebra_on_gl2() {
        let r = shuffle_product_check(&matrix_coalgebra(2).unwrap(), 4).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn deconcatenation_on_gl2() {
        let r = deconcat_coproduct_check(&matrix_coalgebra(2).unwrap(), 4);
        assert!(r.passed(), "{r}");
        // on k nothing survives past degree 1
        assert!(deconcat_coproduct_check(&trivial(), 4).passed());
        assert!(increasing_words(1, 2).is_empty());
    }

    #[test]
    fn reduced_ce_is_a_dga() {
        let r = reduced_ce_product_check(&gl_coalgebra_k(2).unwrap(), 4).unwrap();
        assert!(r.passed(), "{r}");
        let r = reduced_ce_product_check(&lie_of(&group_coalgebra(2).unwrap()).unwrap(), 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_sign_breaks_commutativity() {
        let a = wedge_tensor(4, &[0]);
        let b = wedge_tensor(4, &[1, 2]);
        let ab = shuffle_product(&a, &b);
        assert_eq!(ab, shuffle_product(&b, &a));
        assert_ne!(ab, shuffle_product(&b, &a).scale(&q(-1)));
    }
}
