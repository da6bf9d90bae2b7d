use std::sync::Arc;

use num_traits::One;

use crate::coalgebra::{Coalgebra, LeibnizCoalgebra};
use crate::error::Result;
use crate::linalg::{Rational, SparseMatrix, Subspace};
use crate::perm::{cyclic, norm, t_operator, GroupAlgebraElement, Permutation};
use crate::report::Report;
use crate::tensor::{space_dim, words, SparseTensor};

use super::build::{build_bar, build_ce, build_hochschild};
use super::ops::{
    antisymmetrizer_matrix, bar_homotopy_matrix, bar_matrix, ce_matrix, coaction_matrix,
    hochschild_matrix, lie_leibniz, shifted_antisymmetrizer,
};
use super::ChainMap;

fn pow(d: usize, m: usize) -> usize {
    space_dim(d, m).expect("tensor power fits in usize")
}

fn perm_matrix(p: Permutation, dim: usize) -> SparseMatrix {
    GroupAlgebraElement::from_perm(p).matrix(dim)
}

fn column_witness(col: Option<usize>, dim: usize, degree: usize) -> Option<String> {
    col.map(|j| format!("basis word {:?}", crate::tensor::index_word(j, dim, degree)))
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `h_{n+1} d^CB_n + (d^CB_{n-1} ⊗ id) h_n = ρ_n` for `1 ≤ n ≤ max_deg`,
/// with `ρ` the diagonal `Lie(C)`-coaction.
pub fn bar_homotopy_check(c: &Coalgebra, max_deg: usize) -> Result<Report> {
    let l = lie_leibniz(c)?;
    let d = c.dim();
    let mut r = Report::new();
    for n in 1..=max_deg {
        let lhs = bar_homotopy_matrix(d, n + 1)
            .mul(&bar_matrix(c, n))
            .add(&bar_matrix(c, n - 1).kron_identity_right(d).mul(&bar_homotopy_matrix(d, n)));
        let rho = coaction_matrix(&l, n)?;
        r.record(
            "h d + (d ⊗ id) h = ρ on the bar complex",
            Some(n),
            column_witness(lhs.first_difference(&rho), d, n),
        );
    }
    Ok(r)
}

/// `i_{n+1} d^CE_n + (d^CE_{n-1} ⊗ id) i_n = ρ_n` for `1 ≤ n ≤ max_deg`,
/// where `i_n = (-1)^n` times the regrouping `L^{⊗n} = L^{⊗(n-1)} ⊗ L`.
pub fn ce_homotopy_check(l: &LeibnizCoalgebra, max_deg: usize) -> Result<Report> {
    let d = l.dim();
    let i = |n: usize| SparseMatrix::identity(pow(d, n)).scale(&sign(n));
    let mut r = Report::new();
    for n in 1..=max_deg {
        let lhs = i(n + 1)
            .mul(&ce_matrix(l, n))
            .add(&ce_matrix(l, n - 1).kron_identity_right(d).mul(&i(n)));
        let rho = coaction_matrix(l, n)?;
        r.record(
            "i d + (d ⊗ id) i = ρ on the Chevalley–Eilenberg complex",
            Some(n),
            column_witness(lhs.first_difference(&rho), d, n),
        );
    }
    Ok(r)
}

/// `d^CB_{n+m} = d^CB_n ⊗ id_m + (-1)^n id_n ⊗ d^CB_m` for `n, m ≥ 1`,
/// `n + m ≤ max_deg`.
pub fn bar_leibniz_check(c: &Coalgebra, max_deg: usize) -> Report {
    let d = c.dim();
    let mut r = Report::new();
    for total in 2..=max_deg {
        let full = bar_matrix(c, total);
        for n in 1..total {
            let m = total - n;
            let rhs = bar_matrix(c, n)
                .kron_identity_right(pow(d, m))
                .add(&bar_matrix(c, m).kron_identity_left(pow(d, n)).scale(&sign(n)));
            r.record(
                format!("bar differential is a graded derivation ({n},{m})"),
                Some(total),
                column_witness(full.first_difference(&rhs), d, total),
            );
        }
    }
    r
}

/// Decomposition of `d^CE_{p+q}` into the two derivation terms plus the
/// correction `Σ_j (-1)^{p+j-1} (id_p ⊗ τ_{j+1}^{-1} ⊗ id_{q-j})(ρ_p ⊗ id_q)`
/// moving the coacting letter past the first `j` letters of the right block.
pub fn ce_leibniz_check(l: &LeibnizCoalgebra, max_deg: usize) -> Result<Report> {
    let d = l.dim();
    let mut r = Report::new();
    for total in 2..=max_deg {
        let full = ce_matrix(l, total);
        for p in 1..total {
            let q = total - p;
            let mut rhs = ce_matrix(l, p)
                .kron_identity_right(pow(d, q))
                .add(&ce_matrix(l, q).kron_identity_left(pow(d, p)).scale(&sign(p)));
            let rho = coaction_matrix(l, p)?.kron_identity_right(pow(d, q));
            for j in 1..=q {
                let move_letter = Permutation::identity(p)
                    .direct_sum(&cyclic(j + 1).inverse())
                    .direct_sum(&Permutation::identity(q - j));
                let term = perm_matrix(move_letter, d).mul(&rho);
                rhs = rhs.add(&term.scale(&sign(p + j - 1)));
            }
            r.record(
                format!("CE differential decomposes over ({p},{q})"),
                Some(total),
                column_witness(full.first_difference(&rhs), d, total),
            );
        }
    }
    Ok(r)
}

/// Per degree `1 ≤ m ≤ max_deg`: `ker t = im N`, `ker N = im t`, and the
/// squares `t d^CH = d^CB t`, `N d^CB = d^CH N`.
pub fn tn_exactness_check(c: &Coalgebra, max_deg: usize) -> Report {
    let d = c.dim();
    let mut r = Report::new();
    let t = |m: usize| t_operator(m).matrix(d);
    let nm = |m: usize| norm(m).matrix(d);
    let subspace_witness = |a: &Subspace, b: &Subspace| {
        (a != b).then(|| format!("dimensions {} and {}", a.dim(), b.dim()))
    };
    for m in 1..=max_deg {
        let (tm, nmm) = (t(m), nm(m));
        r.record("ker t = im N", Some(m), subspace_witness(&tm.kernel(), &nmm.image()));
        r.record("ker N = im t", Some(m), subspace_witness(&nmm.kernel(), &tm.image()));
        if m < max_deg {
            let lhs = t(m + 1).mul(&hochschild_matrix(c, m));
            let rhs = bar_matrix(c, m).mul(&tm);
            r.record(
                "t d^CH = d^CB t",
                Some(m),
                column_witness(lhs.first_difference(&rhs), d, m),
            );
            let lhs = nm(m + 1).mul(&bar_matrix(c, m));
            let rhs = hochschild_matrix(c, m).mul(&nmm);
            r.record(
                "N d^CB = d^CH N",
                Some(m),
                column_witness(lhs.first_difference(&rhs), d, m),
            );
        }
    }
    r
}

/// `t: CH_*(C) → CB_*(C)` in degrees `1..=max_deg`.
pub fn chain_map_t(c: &Coalgebra, max_deg: usize) -> Result<ChainMap> {
    let src = Arc::new(build_hochschild(c, max_deg)?);
    let tgt = Arc::new(build_bar(c, max_deg)?);
    let maps = (1..=max_deg).map(|m| t_operator(m).matrix(c.dim())).collect();
    ChainMap::new("t", src, tgt, 1, maps)
}

/// `N: CB_*(C) → CH_*(C)` in degrees `1..=max_deg`.
pub fn chain_map_n(c: &Coalgebra, max_deg: usize) -> Result<ChainMap> {
    let src = Arc::new(build_bar(c, max_deg)?);
    let tgt = Arc::new(build_hochschild(c, max_deg)?);
    let maps = (1..=max_deg).map(|m| norm(m).matrix(c.dim())).collect();
    ChainMap::new("N", src, tgt, 1, maps)
}

/// `ε: CB_*(C) → CE_*(Lie(C))` in degrees `0..=max_deg`.
pub fn chain_map_epsilon(c: &Coalgebra, max_deg: usize) -> Result<ChainMap> {
    let src = Arc::new(build_bar(c, max_deg)?);
    let tgt = Arc::new(build_ce(&lie_leibniz(c)?, max_deg)?);
    let maps = (0..=max_deg).map(|m| antisymmetrizer_matrix(c.dim(), m)).collect();
    ChainMap::new("ε", src, tgt, 0, maps)
}

/// `id_1 ⊗ ε_{*-1}: CH_*(C) → CE_*(Lie(C))` in degrees `1..=max_deg`.
pub fn chain_map_shifted_epsilon(c: &Coalgebra, max_deg: usize) -> Result<ChainMap> {
    let src = Arc::new(build_hochschild(c, max_deg)?);
    let tgt = Arc::new(build_ce(&lie_leibniz(c)?, max_deg)?);
    let maps = (1..=max_deg)
        .map(|m| shifted_antisymmetrizer(m).matrix(c.dim()))
        .collect();
    ChainMap::new("id ⊗ ε", src, tgt, 1, maps)
}

/// `ε` and `id ⊗ ε` commute with the differentials, and
/// `(id_1 ⊗ ε_{m-1}) N_m = ε_m`.
pub fn epsilon_chain_map_check(c: &Coalgebra, max_deg: usize) -> Result<Report> {
    let d = c.dim();
    let mut r = Report::new();
    for cm in [
        chain_map_epsilon(c, max_deg),
        chain_map_shifted_epsilon(c, max_deg),
    ] {
        match cm {
            Ok(cm) => r.extend(cm.report()),
            Err(crate::Error::NotChainMap { degree }) => {
                r.fail("ε-type map commutes with the differentials", Some(degree), "construction refused".into())
            }
            Err(e) => return Err(e),
        }
    }
    for m in 1..=max_deg {
        let lhs = shifted_antisymmetrizer(m).matrix(d).mul(&norm(m).matrix(d));
        let rhs = antisymmetrizer_matrix(d, m);
        r.record(
            "(id ⊗ ε) N = ε",
            Some(m),
            column_witness(lhs.first_difference(&rhs), d, m),
        );
    }
    Ok(r)
}

/// Graded commutators `Ψ⊗Φ − (-1)^{pq} Φ⊗Ψ` of basis words span `ker N_n`
/// and lie in `ker ε_n`, for `2 ≤ n ≤ max_deg`; in degree 1 both are 0.
pub fn commutator_check(c: &Coalgebra, max_deg: usize) -> Report {
    let d = c.dim();
    let mut r = Report::new();
    for n in 1..=max_deg {
        let mut gens = Vec::new();
        for p in 1..n {
            let q = n - p;
            for psi in words(d, p) {
                for phi in words(d, q) {
                    let mut t = SparseTensor::zero(d, n);
                    t.add_term([psi.as_slice(), phi.as_slice()].concat(), Rational::one());
                    t.add_term([phi.as_slice(), psi.as_slice()].concat(), -sign(p * q));
                    gens.push(t.to_vec());
                }
            }
        }
        let comm = Subspace::from_spanning(pow(d, n), gens);
        let ker_n = norm(n).matrix(d).kernel();
        r.record(
            "[CB, CB] = ker N",
            Some(n),
            (comm != ker_n).then(|| format!("dimensions {} and {}", comm.dim(), ker_n.dim())),
        );
        let eps = antisymmetrizer_matrix(d, n);
        let leak = comm.basis().iter().position(|v| !eps.apply(v).is_zero());
        r.record(
            "[CB, CB] ⊆ ker ε",
            Some(n),
            leak.map(|i| format!("commutator basis vector {i}")),
        );
    }
    r
}

/// `(σ ⊗ id_1) ρ_n = ρ_n σ` for every `σ ∈ Σ_n`, `1 ≤ n ≤ max_deg`.
pub fn representation_commute_check(l: &LeibnizCoalgebra, max_deg: usize) -> Result<Report> {
    let d = l.dim();
    let mut r = Report::new();
    for n in 1..=max_deg {
        let rho = coaction_matrix(l, n)?;
        let bad = Permutation::all(n).into_iter().find(|s| {
            let lhs = perm_matrix(s.direct_sum(&Permutation::identity(1)), d).mul(&rho);
            let rhs = rho.mul(&perm_matrix(s.clone(), d));
            lhs != rhs
        });
        r.record(
            "ρ commutes with place permutations",
            Some(n),
            bad.map(|s| format!("σ = {s}")),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{gl_coalgebra, gl_coalgebra_k, group_coalgebra, lie_of, matrix_coalgebra, trivial};

    fn assert_pass(r: Report) {
        assert!(r.passed(), "{r}");
        assert!(!r.is_empty());
    }

    #[test]
    fn bar_homotopy_holds() {
        assert_pass(bar_homotopy_check(&trivial(), 4).unwrap());
        assert_pass(bar_homotopy_check(&matrix_coalgebra(2).unwrap(), 3).unwrap());
        assert_pass(bar_homotopy_check(&group_coalgebra(2).unwrap(), 4).unwrap());
    }

    #[test]
    fn ce_homotopy_holds() {
        assert_pass(ce_homotopy_check(&lie_of(&trivial()).unwrap(), 4).unwrap());
        assert_pass(ce_homotopy_check(&gl_coalgebra_k(2).unwrap(), 3).unwrap());
        let g = gl_coalgebra(2, &group_coalgebra(2).unwrap()).unwrap();
        assert_pass(ce_homotopy_check(&g, 2).unwrap());
    }

    #[test]
    fn ce_homotopy_with_opposite_sign_fails() {
        // the sign of i_n is forced: flipping it yields −ρ
        let l = gl_coalgebra_k(2).unwrap();
        let d = l.dim();
        let i = |n: usize| SparseMatrix::identity(pow(d, n)).scale(&-sign(n));
        let lhs = i(2).mul(&ce_matrix(&l, 1)).add(&ce_matrix(&l, 0).kron_identity_right(d).mul(&i(1)));
        let rho = coaction_matrix(&l, 1).unwrap();
        assert_eq!(lhs, rho.scale(&-Rational::one()));
    }

    #[test]
    fn derivation_identities() {
        let m = matrix_coalgebra(2).unwrap();
        assert_pass(bar_leibniz_check(&m, 4));
        assert_pass(ce_leibniz_check(&gl_coalgebra_k(2).unwrap(), 4).unwrap());
        assert_pass(bar_leibniz_check(&group_coalgebra(3).unwrap(), 4));
    }

    #[test]
    fn exactness_and_chain_maps() {
        assert_pass(tn_exactness_check(&trivial(), 4));
        assert_pass(tn_exactness_check(&group_coalgebra(2).unwrap(), 4));
        assert_pass(tn_exactness_check(&matrix_coalgebra(2).unwrap(), 3));
        assert_pass(chain_map_t(&matrix_coalgebra(2).unwrap(), 3).unwrap().report());
        assert_pass(chain_map_n(&group_coalgebra(2).unwrap(), 4).unwrap().report());
    }

    #[test]
    fn exactness_on_k_in_degree_two() {
        // t_2 = 2 and N_2 = 0 on the one-dimensional space
        let t2 = t_operator(2).matrix(1);
        let n2 = norm(2).matrix(1);
        assert_eq!(t2.get(0, 0), Rational::from_integer(2.into()));
        assert!(n2.is_zero());
    }

    #[test]
    fn epsilon_maps() {
        assert_pass(epsilon_chain_map_check(&trivial(), 4).unwrap());
        assert_pass(epsilon_chain_map_check(&matrix_coalgebra(2).unwrap(), 3).unwrap());
    }

    #[test]
    fn degree_one_epsilon_square_is_the_cobracket() {
        let c = matrix_coalgebra(2).unwrap();
        let l = lie_leibniz(&c).unwrap();
        let lhs = antisymmetrizer_matrix(4, 2).mul(&bar_matrix(&c, 1));
        assert_eq!(lhs, ce_matrix(&l, 1));
    }

    #[test]
    fn commutators() {
        assert_pass(commutator_check(&trivial(), 4));
        assert_pass(commutator_check(&group_coalgebra(2).unwrap(), 4));
        assert_pass(commutator_check(&matrix_coalgebra(2).unwrap(), 3));
    }

    #[test]
    fn coaction_is_equivariant() {
        assert_pass(representation_commute_check(&gl_coalgebra_k(2).unwrap(), 3).unwrap());
    }
}
