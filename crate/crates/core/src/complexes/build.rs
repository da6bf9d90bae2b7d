use std::collections::HashMap;

use num_traits::One;

use crate::coalgebra::{Coalgebra, LeibnizCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, SparseVec, Subspace};
use crate::perm::norm;
use crate::report::Report;
use crate::tensor::{increasing_words, space_dim, SparseTensor, Word};

use super::ops::{
    antisymmetrizer_matrix, bar_matrix, bar_word, ce_matrix, coaction_matrix, hochschild_matrix,
    lie_leibniz,
};
use super::{ComplexKind, DegreeSpace, GradedComplex};

fn require(report: Report) -> Result<()> {
    match report.first_failure() {
        Some(f) => Err(Error::AxiomFailure {
            axiom: f.identity.clone(),
            witness: f.witness.clone().unwrap_or_default(),
        }),
        None => Ok(()),
    }
}

fn full_dim(letters: usize, m: usize) -> Result<usize> {
    space_dim(letters, m).ok_or_else(|| {
        Error::InvalidArgument(format!("tensor power {letters}^{m} overflows"))
    })
}

fn full_complex<F>(
    kind: ComplexKind,
    label: &str,
    letters: usize,
    max_deg: usize,
    mut d: F,
) -> Result<GradedComplex>
where
    F: FnMut(usize) -> SparseMatrix,
{
    let spaces = (0..=max_deg)
        .map(|m| full_dim(letters, m).map(|dim| DegreeSpace::Full { dim }))
        .collect::<Result<_>>()?;
    let differentials = (0..max_deg).map(&mut d).collect();
    GradedComplex::new(kind, label, letters, 0, spaces, differentials)
}

/// `CB_*(C)` in degrees `0..=max_deg`.
pub fn build_bar(c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(c.check())?;
    full_complex(ComplexKind::Bar, c.name(), c.dim(), max_deg, |m| bar_matrix(c, m))
}

/// `CH_*(C)` in degrees `0..=max_deg`.
pub fn build_hochschild(c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(c.check())?;
    full_complex(ComplexKind::Hochschild, c.name(), c.dim(), max_deg, |m| {
        hochschild_matrix(c, m)
    })
}

/// `CE_*(L)` in degrees `0..=max_deg`.
pub fn build_ce(l: &LeibnizCoalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(l.check())?;
    full_complex(ComplexKind::Ce, l.name(), l.dim(), max_deg, |m| ce_matrix(l, m))
}

/// Matrix of `d` restricted to `src`, in echelon coordinates on both sides.
fn restrict(d: &SparseMatrix, src: &Subspace, tgt: &Subspace, degree: usize) -> Result<SparseMatrix> {
    let columns = src
        .basis()
        .iter()
        .map(|b| {
            tgt.coordinates(&d.apply(b))
                .ok_or(Error::NotPreserved { degree: degree + 1 })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_columns(tgt.dim(), columns))
}

fn sub_complex(
    kind: ComplexKind,
    label: &str,
    letters: usize,
    first_degree: usize,
    subspaces: Vec<Subspace>,
    mut d: impl FnMut(usize) -> SparseMatrix,
) -> Result<GradedComplex> {
    let differentials = (0..subspaces.len().saturating_sub(1))
        .map(|i| {
            let m = first_degree + i;
            restrict(&d(m), &subspaces[i], &subspaces[i + 1], m)
        })
        .collect::<Result<_>>()?;
    GradedComplex::new(
        kind,
        label,
        letters,
        first_degree,
        subspaces.into_iter().map(DegreeSpace::Sub).collect(),
        differentials,
    )
}

/// `CC^λ_*(C)[+1] ≅ im N_*` inside `CH_*(C)`, degrees `1..=max_deg`.
pub fn build_cyclic(c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(c.check())?;
    if max_deg == 0 {
        return Err(Error::InvalidArgument("the cyclic complex starts in degree 1".into()));
    }
    let subspaces = (1..=max_deg)
        .map(|m| {
            full_dim(c.dim(), m)?;
            Ok(norm(m).matrix(c.dim()).image())
        })
        .collect::<Result<Vec<_>>>()?;
    sub_complex(ComplexKind::Cyclic, c.name(), c.dim(), 1, subspaces, |m| {
        hochschild_matrix(c, m)
    })
}

/// `CE^red_*(L) = ker ρ_*`, degrees `0..=max_deg`.
pub fn build_reduced_ce(l: &LeibnizCoalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(l.check())?;
    let subspaces = (0..=max_deg)
        .map(|m| {
            full_dim(l.dim(), m + 1)?;
            Ok(coaction_matrix(l, m)?.kernel())
        })
        .collect::<Result<Vec<_>>>()?;
    sub_complex(ComplexKind::CeRed, l.name(), l.dim(), 0, subspaces, |m| ce_matrix(l, m))
}

/// Sign of the permutation sorting `w`, or `None` when a letter repeats.
pub(crate) fn sort_sign(w: &[usize]) -> Option<(Word, bool)> {
    let mut sorted = w.to_vec();
    let mut odd = false;
    // insertion sort counting transpositions
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((sorted, odd))
    }
}

/// Tensor `ε_m(u)` for an increasing word `u`.
pub fn wedge_tensor(letters: usize, u: &[usize]) -> SparseTensor {
    let mut t = SparseTensor::zero(letters, u.len());
    for p in crate::perm::Permutation::all(u.len()) {
        let c = Rational::from_integer(p.sign().into());
        t.add_term(p.act(u), c);
    }
    t
}

/// `CE^sym_*(Lie(C)) ≅ im ε_*` on the wedge basis, degrees `0..=max_deg`.
///
/// The differential is `ε_{m+1} d^CB_m` evaluated on `ε_m(u)`: since
/// `ε_{m+1} d^CB = d^CE ε`, each column is obtained from the bar
/// differential of a single increasing word, with no `m!` expansion.
pub fn build_sym_ce(c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    require(c.check())?;
    let n = c.dim();
    let bases: Vec<Vec<Word>> = (0..=max_deg).map(|m| increasing_words(n, m)).collect();
    let one = Rational::one();
    let differentials = (0..max_deg)
        .map(|m| {
            let target: HashMap<&[usize], usize> = bases[m + 1]
                .iter()
                .enumerate()
                .map(|(i, w)| (w.as_slice(), i))
                .collect();
            let columns = bases[m]
                .iter()
                .map(|u| {
                    let mut out = SparseTensor::zero(n, m + 1);
                    bar_word(c.delta(), u, &one, &mut out);
                    SparseVec::from_entries(out.terms().filter_map(|(v, x)| {
                        let (sorted, odd) = sort_sign(v)?;
                        Some((target[sorted.as_slice()], if odd { -x } else { x.clone() }))
                    }))
                })
                .collect();
            SparseMatrix::from_columns(bases[m + 1].len(), columns)
        })
        .collect();
    GradedComplex::new(
        ComplexKind::CeSym,
        format!("Lie({})", c.name()),
        n,
        0,
        bases.into_iter().map(DegreeSpace::Wedge).collect(),
        differentials,
    )
}

/// `CE^sym` as the subcomplex `im ε_*` of `CE_*(Lie(C))` with `d^CE`
/// restricted. Expands `ε_m` explicitly, so intended for small degrees.
pub fn build_sym_ce_explicit(c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    let l = lie_leibniz(c)?;
    let subspaces = (0..=max_deg)
        .map(|m| {
            full_dim(c.dim(), m)?;
            Ok(antisymmetrizer_matrix(c.dim(), m).image())
        })
        .collect::<Result<Vec<_>>>()?;
    sub_complex(
        ComplexKind::CeSym,
        &format!("Lie({})", c.name()),
        c.dim(),
        0,
        subspaces,
        |m| ce_matrix(&l, m),
    )
}

/// Compares the wedge-basis and explicit realizations of `CE^sym`: the map
/// sending `ε_m(u)` to its echelon coordinates must be an isomorphism of
/// complexes.
pub fn sym_ce_cross_check(c: &Coalgebra, max_deg: usize) -> Result<Report> {
    let wedge = build_sym_ce(c, max_deg)?;
    let explicit = build_sym_ce_explicit(c, max_deg)?;
    let mut r = Report::new();
    let mut maps = Vec::new();
    for m in 0..=max_deg {
        let (Some(DegreeSpace::Wedge(words)), Some(DegreeSpace::Sub(sub))) =
            (wedge.space(m), explicit.space(m))
        else {
            unreachable!("builders produce wedge and subspace degrees");
        };
        let columns: Option<Vec<SparseVec>> = words
            .iter()
            .map(|u| {
                let v = if m == 0 {
                    SparseVec::unit(0)
                } else {
                    wedge_tensor(c.dim(), u).to_vec()
                };
                sub.coordinates(&v)
            })
            .collect();
        let ok = columns.as_ref().is_some_and(|cols| {
            words.len() == sub.dim()
                && SparseMatrix::from_columns(sub.dim(), cols.clone()).rank() == sub.dim()
        });
        r.record(
            "wedge basis spans im ε",
            Some(m),
            (!ok).then(|| format!("wedge dim {}, im ε dim {}", words.len(), sub.dim())),
        );
        maps.push(columns.map(|cols| SparseMatrix::from_columns(sub.dim(), cols)));
    }
    for m in 0..max_deg {
        if let (Some(f0), Some(f1)) = (&maps[m], &maps[m + 1]) {
            let lhs = f1.mul(wedge.differential(m).expect("stored"));
            let rhs = explicit.differential(m).expect("stored").mul(f0);
            r.record(
                "wedge differential matches restricted d^CE",
                Some(m),
                lhs.first_difference(&rhs)
                    .map(|col| format!("wedge word {:?}", match wedge.space(m) {
                        Some(DegreeSpace::Wedge(ws)) => ws[col].clone(),
                        _ => Vec::new(),
                    })),
            );
        }
    }
    Ok(r)
}

/// Builds any of the six complexes for a coassociative coalgebra; the
/// Chevalley–Eilenberg kinds use `Lie(C)`.
pub fn build(kind: ComplexKind, c: &Coalgebra, max_deg: usize) -> Result<GradedComplex> {
    match kind {
        ComplexKind::Bar => build_bar(c, max_deg),
        ComplexKind::Hochschild => build_hochschild(c, max_deg),
        ComplexKind::Ce => build_ce(&lie_leibniz(c)?, max_deg),
        ComplexKind::CeSym => build_sym_ce(c, max_deg),
        ComplexKind::CeRed => build_reduced_ce(&lie_leibniz(c)?, max_deg),
        ComplexKind::Cyclic => build_cyclic(c, max_deg.max(1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{gl_coalgebra, group_coalgebra, lie_of, matrix_coalgebra, trivial};

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn bar_of_k() {
        let b = build_bar(&trivial(), 6).unwrap();
        assert_eq!(b.homology().dims, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(b.homology_checked().unwrap(), b.homology());
    }

    #[test]
    fn bar_dims_of_matrix_coalgebra() {
        let b = build_bar(&matrix_coalgebra(2).unwrap(), 3).unwrap();
        assert_eq!(b.dims().dims, vec![1, 4, 16, 64]);
    }

    #[test]
    fn bar_of_group_coalgebra_is_square_zero() {
        let b = build_bar(&group_coalgebra(2).unwrap(), 6).unwrap();
        assert!(b.square_zero_report().passed());
        assert_eq!(b.homology().dims, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn hochschild_of_k() {
        let h = build_hochschild(&trivial(), 6).unwrap();
        assert_eq!(h.homology().dims, vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn cyclic_of_k_alternates() {
        let cc = build_cyclic(&trivial(), 7).unwrap();
        assert_eq!(cc.dims().dims, vec![1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(cc.homology().dims, vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(cc.homology().first_degree, 1);
    }

    #[test]
    fn ce_of_abelian_is_zero_complex() {
        let l = lie_of(&trivial()).unwrap();
        let ce = build_ce(&l, 4).unwrap();
        assert_eq!(ce.homology().dims, vec![1, 1, 1, 1]);
        let red = build_reduced_ce(&l, 4).unwrap();
        assert_eq!(red.dims(), ce.dims());
    }

    #[test]
    fn sym_ce_dims_are_binomial() {
        let ce = build_sym_ce(&matrix_coalgebra(2).unwrap(), 5).unwrap();
        assert_eq!(ce.dims().dims, vec![1, 4, 6, 4, 1, 0]);
        assert_eq!(build_sym_ce(&trivial(), 3).unwrap().dims().dims, vec![1, 1, 0, 0]);
        let c = crate::coalgebra::matrix_over(2, &group_coalgebra(2).unwrap()).unwrap();
        let big = build_sym_ce(&c, 3).unwrap();
        assert_eq!(big.dims().dims, (0..=3).map(|m| binom(8, m)).collect::<Vec<_>>());
        assert_eq!(gl_coalgebra(2, &group_coalgebra(2).unwrap()).unwrap().dim(), 8);
    }

    #[test]
    fn sym_ce_of_gl2_is_exterior_on_degrees_one_and_three() {
        let ce = build_sym_ce(&matrix_coalgebra(2).unwrap(), 5).unwrap();
        assert_eq!(ce.homology().dims, vec![1, 1, 0, 1, 1]);
    }

    #[test]
    fn wedge_and_explicit_sym_ce_agree() {
        for c in [trivial(), group_coalgebra(2).unwrap(), matrix_coalgebra(2).unwrap()] {
            let r = sym_ce_cross_check(&c, 4).unwrap();
            assert!(r.passed(), "{}: {r}", c.name());
        }
    }

    #[test]
    fn sort_sign_examples() {
        assert_eq!(sort_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_sign(&[1, 1]), None);
    }

    #[test]
    fn broken_coalgebra_is_refused() {
        let m = matrix_coalgebra(2).unwrap();
        let mut delta = m.delta().clone();
        delta[0][0].2 = -delta[0][0].2.clone();
        let bad = Coalgebra::new("bad", m.basis().to_vec(), delta, None).unwrap();
        assert!(matches!(build_bar(&bad, 2), Err(Error::AxiomFailure { .. })));
    }
}
