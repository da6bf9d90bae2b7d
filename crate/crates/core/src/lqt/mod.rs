//! Weyl coinvariants, primitives of `CE^sym(gl^c(C))`, and the
//! comparison of `H^Lie_*(gl_n^c(C))` with `Λ* HC_*(C)[+1]`.

mod sigma;

pub use sigma::{SigmaAdElement, SigmaAdTensor, SigmaAdTerm};

use serde::Serialize;

use crate::coalgebra::{dualize_leibniz, gl_coalgebra_k, invariants, diagonal_coaction, matrix_over, Coalgebra};
use crate::complexes::{build_cyclic, build_sym_ce, GradedDims};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, Subspace};
use crate::perm::cyclic;
use crate::tensor::space_dim;

fn tensor_power(d: usize, m: usize) -> Result<usize> {
    space_dim(d, m)
        .ok_or_else(|| Error::InvalidArgument(format!("tensor power {d}^{m} overflows")))
}

/// `dim (M_n(k)^{⊗m})_{gl_n(k)}`: the quotient of `M_n^{⊗m}` by the span
/// of the diagonal adjoint action, with the bracket read off the dual of
/// `gl_n^c(k)`.
pub fn weyl_coinvariants_dim(n: usize, m: usize) -> Result<usize> {
    let g = dualize_leibniz(gl_coalgebra_k(n)?.as_leibniz());
    let d = g.dim();
    let total = tensor_power(d, m)?;
    let span = Subspace::from_spanning(
        total,
        (0..d).flat_map(|a| derivation(&g.left_multiplication(a), m).columns().to_vec()),
    );
    Ok(total - span.dim())
}

/// `Σ_j id^{⊗j} ⊗ x ⊗ id^{⊗(m-1-j)}` for a square matrix `x`.
fn derivation(x: &SparseMatrix, m: usize) -> SparseMatrix {
    let d = x.rows();
    let p = |k: usize| space_dim(d, k).expect("checked by caller");
    let mut out = SparseMatrix::zeros(p(m), p(m));
    for j in 0..m {
        let term = x.kron_identity_right(p(m - 1 - j)).kron_identity_left(p(j));
        out = out.add(&term);
    }
    out
}

/// `dim CB_m(M_n^c(k))^{gl_n^c(k)}`: kernel of the diagonal coaction.
pub fn bar_invariants_dim(n: usize, m: usize) -> Result<usize> {
    let l = gl_coalgebra_k(n)?;
    Ok(invariants(&diagonal_coaction(&l, m)?).dim())
}

/// `dim C^{⊗m} ⊗_{C_m} k` for the signed action `τ ↦ (-1)^{m-1} τ`: the
/// quotient by the image of `id - (-1)^{m-1} τ_m`.
pub fn primitives_dim(c: &Coalgebra, m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::InvalidArgument("primitives start in degree 1".into()));
    }
    let d = c.dim();
    let total = tensor_power(d, m)?;
    let tau = crate::perm::GroupAlgebraElement::from_perm(cyclic(m)).matrix(d);
    let s = if m % 2 == 1 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
    let rel = SparseMatrix::identity(total).sub(&tau.scale(&s));
    Ok(total - rel.rank())
}

/// Coefficients of `Π_{m odd} (1+t^m)^{g_m} · Π_{m even} (1-t^m)^{-g_m}`
/// in degrees `0..=max_degree`: the free graded-commutative algebra on
/// `g` generators per degree.
pub fn free_graded_commutative_dims(g: &GradedDims, max_degree: usize) -> Result<GradedDims> {
    if g.get(0).is_some_and(|x| x > 0) {
        return Err(Error::InvalidArgument("generators in degree 0".into()));
    }
    let overflow = || Error::InvalidArgument("series coefficient overflows".into());
    let mut series = vec![0usize; max_degree + 1];
    series[0] = 1;
    for (deg, count) in g.iter().filter(|&(deg, _)| deg >= 1 && deg <= max_degree) {
        for _ in 0..count {
            if deg % 2 == 1 {
                for k in (deg..=max_degree).rev() {
                    series[k] = series[k].checked_add(series[k - deg]).ok_or_else(overflow)?;
                }
            } else {
                for k in deg..=max_degree {
                    series[k] = series[k].checked_add(series[k - deg]).ok_or_else(overflow)?;
                }
            }
        }
    }
    Ok(GradedDims::new(0, series))
}

/// One degree of the comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementRow {
    pub degree: usize,
    pub lie: usize,
    pub expected: usize,
    pub stable: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableRangeReport {
    pub coalgebra: String,
    pub n: usize,
    pub max_degree: usize,
    pub lie_homology_dims: GradedDims,
    pub cyclic_homology_dims: GradedDims,
    pub expected_dims: GradedDims,
    pub rows: Vec<AgreementRow>,
}

impl StableRangeReport {
    /// Agreement in every degree `m ≤ n`; other degrees are informational.
    pub fn stable_agreement(&self) -> bool {
        self.rows.iter().filter(|r| r.stable).all(|r| r.agree)
    }
}

/// `H_* CE^sym(gl_n^c(C))` against the free graded-commutative algebra
/// on `HC_*(C)[+1]`, degrees `0..=max_degree`.
pub fn lqt_check(c: &Coalgebra, n: usize, max_degree: usize) -> Result<StableRangeReport> {
    if n == 0 || max_degree == 0 {
        return Err(Error::InvalidArgument("need n ≥ 1 and max degree ≥ 1".into()));
    }
    let mc = matrix_over(n, c)?;
    let lie = build_sym_ce(&mc, max_degree + 1)?.homology();
    let hc = build_cyclic(c, max_degree + 1)?.homology();
    let expected = free_graded_commutative_dims(&hc, max_degree)?;
    let rows = (0..=max_degree)
        .map(|m| {
            let (l, e) = (lie.get(m).unwrap_or(0), expected.get(m).unwrap_or(0));
            AgreementRow {
                degree: m,
                lie: l,
                expected: e,
                stable: m <= n,
                agree: l == e,
            }
        })
        .collect();
    Ok(StableRangeReport {
        coalgebra: c.name().to_string(),
        n,
        max_degree,
        lie_homology_dims: lie,
        cyclic_homology_dims: hc,
        expected_dims: expected,
        rows,
    })
}
