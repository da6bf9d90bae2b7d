//! Right comodules over a Leibniz coalgebra, stored as the matrix of
//! `ρ: X → X⊗L` with row index `x₀·dim L + l`.

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, SparseVec, Subspace};
use crate::tensor::{space_dim, word_index, words};

use super::LeibnizCoalgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coaction {
    comodule_dim: usize,
    coalgebra_dim: usize,
    structure: SparseMatrix,
}

impl Coaction {
    pub fn new(comodule_dim: usize, coalgebra_dim: usize, structure: SparseMatrix) -> Result<Self> {
        if structure.cols() != comodule_dim || structure.rows() != comodule_dim * coalgebra_dim {
            return Err(Error::DimensionMismatch(format!(
                "coaction matrix is {}×{}, expected {}×{}",
                structure.rows(),
                structure.cols(),
                comodule_dim * coalgebra_dim,
                comodule_dim
            )));
        }
        Ok(Self {
            comodule_dim,
            coalgebra_dim,
            structure,
        })
    }

    /// From sparse triples `x ↦ Σ c · x₀⊗l`.
    pub fn from_terms(
        comodule_dim: usize,
        coalgebra_dim: usize,
        terms: &[Vec<(usize, usize, Rational)>],
    ) -> Result<Self> {
        if terms.len() != comodule_dim {
            return Err(Error::DimensionMismatch(format!(
                "{} coaction entries for a comodule of dimension {comodule_dim}",
                terms.len()
            )));
        }
        let mut triplets = Vec::new();
        for (x, ts) in terms.iter().enumerate() {
            for (x0, l, c) in ts {
                if *x0 >= comodule_dim || *l >= coalgebra_dim {
                    return Err(Error::DimensionMismatch(format!(
                        "coaction term ({x0}, {l}) out of range"
                    )));
                }
                triplets.push((x0 * coalgebra_dim + l, x, c.clone()));
            }
        }
        Self::new(
            comodule_dim,
            coalgebra_dim,
            SparseMatrix::from_triplets(comodule_dim * coalgebra_dim, comodule_dim, triplets),
        )
    }

    pub fn comodule_dim(&self) -> usize {
        self.comodule_dim
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.structure
    }

    /// `ρ(x)` as `(x₀, l, coeff)` triples.
    pub fn terms(&self, x: usize) -> Vec<(usize, usize, Rational)> {
        self.structure
            .column(x)
            .iter()
            .map(|(r, c)| (r / self.coalgebra_dim, r % self.coalgebra_dim, c.clone()))
            .collect()
    }

    /// The operator `x ↦ Σ x₀ f_l(x₁)` on the comodule, for the dual basis
    /// functional `f_l`. These generate the dual action of `L^∨`.
    pub fn action_operator(&self, l: usize) -> SparseMatrix {
        let ld = self.coalgebra_dim;
        let columns = self
            .structure
            .columns()
            .iter()
            .map(|col| {
                col.iter()
                    .filter(|(r, _)| r % ld == l)
                    .map(|(r, c)| (r / ld, c.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.comodule_dim, columns)
    }

    /// First basis element violating
    /// `(ρ⊗id)ρ − (id⊗τ₂)(ρ⊗id)ρ = (id⊗δ)ρ`.
    pub fn identity_witness(&self, l: &LeibnizCoalgebra) -> Result<Option<usize>> {
        let ld = self.coalgebra_dim;
        if l.dim() != ld {
            return Err(Error::DimensionMismatch(format!(
                "coaction over a {ld}-dimensional coalgebra checked against one of dimension {}",
                l.dim()
            )));
        }
        let rho = &self.structure;
        let twice = rho.kron_identity_right(ld).mul(rho);
        let swap = swap_last_two(self.comodule_dim, ld);
        let lhs = twice.sub(&swap.mul(&twice));
        let delta = cobracket_matrix(l);
        let rhs = delta.kron_identity_left(self.comodule_dim).mul(rho);
        Ok(lhs.first_difference(&rhs))
    }
}

/// Matrix of `δ: L → L⊗L`.
pub fn cobracket_matrix(l: &LeibnizCoalgebra) -> SparseMatrix {
    let d = l.dim();
    let triplets = l
        .cobracket()
        .iter()
        .enumerate()
        .flat_map(|(x, ts)| ts.iter().map(move |(a, b, c)| (a * d + b, x, c.clone())));
    SparseMatrix::from_triplets(d * d, d, triplets)
}

/// `id_X ⊗ τ₂` on `X⊗L⊗L`.
fn swap_last_two(xd: usize, ld: usize) -> SparseMatrix {
    let n = xd * ld * ld;
    SparseMatrix::from_triplets(
        n,
        n,
        (0..xd).flat_map(|x| {
            (0..ld).flat_map(move |a| {
                (0..ld).map(move |b| {
                    (
                        (x * ld + b) * ld + a,
                        (x * ld + a) * ld + b,
                        Rational::from_integer(1.into()),
                    )
                })
            })
        }),
    )
}

/// Diagonal coaction on `L^{⊗m}`:
/// `ρ_m(x¹⊗…⊗xᵐ) = Σ_j (x¹⊗…⊗x^j_[1]⊗…⊗xᵐ) ⊗ x^j_[2]`.
pub fn diagonal_coaction(l: &LeibnizCoalgebra, m: usize) -> Result<Coaction> {
    let d = l.dim();
    let xd = space_dim(d, m).ok_or_else(|| {
        Error::InvalidArgument(format!("tensor power {d}^{m} does not fit in memory"))
    })?;
    let columns = words(d, m)
        .map(|w| {
            let mut entries = Vec::new();
            let mut w2 = w.clone();
            for j in 0..m {
                for (a, b, c) in l.cobracket_of(w[j]) {
                    w2[j] = *a;
                    entries.push((word_index(&w2, d) * d + b, c.clone()));
                }
                w2[j] = w[j];
            }
            SparseVec::from_entries(entries)
        })
        .collect();
    Coaction::new(xd, d, SparseMatrix::from_columns(xd * d, columns))
}

/// `X^L = ker ρ`.
pub fn invariants(rho: &Coaction) -> Subspace {
    rho.structure.kernel()
}

/// Dimension of `(X^∨)_{L^∨}`: the dual space modulo the span of all
/// `φ·f`, computed from the transposed action operators one functional at
/// a time rather than from the kernel of `ρ`.
pub fn coinvariants_of_dual(rho: &Coaction) -> usize {
    let span = Subspace::from_spanning(
        rho.comodule_dim,
        (0..rho.coalgebra_dim).flat_map(|l| {
            rho.action_operator(l)
                .transpose()
                .columns()
                .to_vec()
        }),
    );
    rho.comodule_dim - span.dim()
}

/// The decomposition `X = X^L ⊕ X^rest` with `X^rest` the span of the
/// images of all dual action operators.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub invariants: Subspace,
    pub rest: Subspace,
}

impl Splitting {
    pub fn compute(rho: &Coaction) -> Self {
        let rest = Subspace::from_spanning(
            rho.comodule_dim,
            (0..rho.coalgebra_dim).flat_map(|l| rho.action_operator(l).columns().to_vec()),
        );
        Self {
            invariants: invariants(rho),
            rest,
        }
    }

    /// Direct-sum decomposition preserved by every action operator.
    pub fn is_direct(&self, rho: &Coaction) -> bool {
        let n = rho.comodule_dim;
        let complementary = self.invariants.dim() + self.rest.dim() == n
            && self.invariants.intersection_dim(&self.rest) == 0;
        complementary
            && (0..rho.coalgebra_dim).all(|l| {
                let a = rho.action_operator(l);
                self.rest.basis().iter().all(|v| self.rest.contains(&a.apply(v)))
                    && self.invariants.basis().iter().all(|v| a.apply(v).is_zero())
            })
    }
}
