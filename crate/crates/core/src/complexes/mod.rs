//! Graded complexes materialized degree by degree, chain maps between
//! them, and the operator identities relating bar, Hochschild,
//! Chevalley–Eilenberg and cyclic complexes.

mod algebra;
mod build;
mod checks;
pub mod ops;

pub use algebra::{
    deconcat_coproduct_check, reduced_ce_product_check, shuffle_factorization_check,
    shuffle_product, shuffle_product_check,
};
pub use build::{
    build_bar, build_ce, build_cyclic, build_hochschild, build_reduced_ce, build_sym_ce,
    build, build_sym_ce_explicit, sym_ce_cross_check, wedge_tensor,
};
pub use checks::{
    bar_homotopy_check, bar_leibniz_check, ce_homotopy_check, ce_leibniz_check,
    chain_map_epsilon, chain_map_n, chain_map_shifted_epsilon, chain_map_t,
    commutator_check, epsilon_chain_map_check, representation_commute_check,
    tn_exactness_check,
};

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, Subspace};
use crate::report::Report;
use crate::tensor::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    Bar,
    Hochschild,
    Ce,
    CeSym,
    CeRed,
    Cyclic,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 6] = [
        ComplexKind::Bar,
        ComplexKind::Hochschild,
        ComplexKind::Ce,
        ComplexKind::CeSym,
        ComplexKind::CeRed,
        ComplexKind::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Bar => "bar",
            ComplexKind::Hochschild => "hochschild",
            ComplexKind::Ce => "ce",
            ComplexKind::CeSym => "ce-sym",
            ComplexKind::CeRed => "ce-red",
            ComplexKind::Cyclic => "cyclic",
        }
    }

    pub fn first_degree(self) -> usize {
        match self {
            ComplexKind::Cyclic => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComplexKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown complex kind {s:?}")))
    }
}

/// How a degree space sits inside the ambient tensor power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeSpace {
    /// All of `C^{⊗m}` with the lexicographic word basis.
    Full { dim: usize },
    /// A subspace, coordinates taken in its canonical echelon basis.
    Sub(Subspace),
    /// The image of `ε_m`, basis `ε_m(w)` for strictly increasing words `w`.
    Wedge(Vec<Word>),
}

impl DegreeSpace {
    pub fn dim(&self) -> usize {
        match self {
            DegreeSpace::Full { dim } => *dim,
            DegreeSpace::Sub(s) => s.dim(),
            DegreeSpace::Wedge(ws) => ws.len(),
        }
    }
}

/// Per-degree counts starting at `first_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub first_degree: usize,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn new(first_degree: usize, dims: Vec<usize>) -> Self {
        Self { first_degree, dims }
    }

    pub fn get(&self, degree: usize) -> Option<usize> {
        degree
            .checked_sub(self.first_degree)
            .and_then(|i| self.dims.get(i).copied())
    }

    pub fn last_degree(&self) -> Option<usize> {
        (!self.dims.is_empty()).then(|| self.first_degree + self.dims.len() - 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| (self.first_degree + i, d))
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "({}) from degree {}", parts.join(","), self.first_degree)
    }
}

/// Degree spaces `first..=max` with differentials `d_m: X_m → X_{m+1}`
/// between consecutive stored degrees. `d∘d = 0` is checked on
/// construction.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    kind: ComplexKind,
    label: String,
    letters: usize,
    first_degree: usize,
    spaces: Vec<DegreeSpace>,
    differentials: Vec<SparseMatrix>,
}

impl GradedComplex {
    pub fn new(
        kind: ComplexKind,
        label: impl Into<String>,
        letters: usize,
        first_degree: usize,
        spaces: Vec<DegreeSpace>,
        differentials: Vec<SparseMatrix>,
    ) -> Result<Self> {
        if spaces.is_empty() || differentials.len() + 1 != spaces.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces need {} differentials, got {}",
                spaces.len(),
                spaces.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.cols() != spaces[i].dim() || d.rows() != spaces[i + 1].dim() {
                return Err(Error::DimensionMismatch(format!(
                    "differential at degree {} is {}×{}, spaces have dims {} → {}",
                    first_degree + i,
                    d.rows(),
                    d.cols(),
                    spaces[i].dim(),
                    spaces[i + 1].dim()
                )));
            }
        }
        for i in 1..differentials.len() {
            if !differentials[i].mul(&differentials[i - 1]).is_zero() {
                return Err(Error::NotSquareZero {
                    degree: first_degree + i - 1,
                });
            }
        }
        Ok(Self {
            kind,
            label: label.into(),
            letters,
            first_degree,
            spaces,
            differentials,
        })
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Dimension of the underlying coalgebra.
    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn first_degree(&self) -> usize {
        self.first_degree
    }

    pub fn max_degree(&self) -> usize {
        self.first_degree + self.spaces.len() - 1
    }

    pub fn space(&self, degree: usize) -> Option<&DegreeSpace> {
        degree
            .checked_sub(self.first_degree)
            .and_then(|i| self.spaces.get(i))
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.space(degree).map_or(0, DegreeSpace::dim)
    }

    /// `d_m: X_m → X_{m+1}`, if both degrees are stored.
    pub fn differential(&self, degree: usize) -> Option<&SparseMatrix> {
        degree
            .checked_sub(self.first_degree)
            .and_then(|i| self.differentials.get(i))
    }

    pub fn dims(&self) -> GradedDims {
        GradedDims::new(
            self.first_degree,
            self.spaces.iter().map(DegreeSpace::dim).collect(),
        )
    }

    /// Homology in degrees `first..max` (the top stored degree has no
    /// outgoing differential and is omitted).
    pub fn homology(&self) -> GradedDims {
        let ranks: Vec<usize> = self.differentials.iter().map(SparseMatrix::rank).collect();
        let dims = (0..self.differentials.len())
            .map(|i| {
                let incoming = if i == 0 { 0 } else { ranks[i - 1] };
                self.spaces[i].dim() - ranks[i] - incoming
            })
            .collect();
        GradedDims::new(self.first_degree, dims)
    }

    /// Homology via [`crate::linalg::homology_dim`] one degree at a time.
    pub fn homology_checked(&self) -> Result<GradedDims> {
        let dims = (0..self.differentials.len())
            .map(|i| {
                let d_in = if i == 0 {
                    SparseMatrix::zeros(self.spaces[0].dim(), 0)
                } else {
                    self.differentials[i - 1].clone()
                };
                crate::linalg::homology_dim(&self.differentials[i], &d_in)
            })
            .collect::<Result<_>>()?;
        Ok(GradedDims::new(self.first_degree, dims))
    }

    /// First degree `m` with `d_{m+1} d_m ≠ 0`; always `None` for a
    /// constructed complex.
    pub fn square_zero_witness(&self) -> Option<usize> {
        (1..self.differentials.len())
            .find(|&i| !self.differentials[i].mul(&self.differentials[i - 1]).is_zero())
            .map(|i| self.first_degree + i - 1)
    }

    pub fn square_zero_report(&self) -> Report {
        let mut r = Report::new();
        for i in 1..self.differentials.len() {
            let m = self.first_degree + i - 1;
            let zero = self.differentials[i].mul(&self.differentials[i - 1]).is_zero();
            r.record(
                format!("d∘d = 0 on {} of {}", self.kind, self.label),
                Some(m),
                (!zero).then(|| format!("d_{} d_{} ≠ 0", m + 1, m)),
            );
        }
        r
    }

    /// Conjugates every degree by a random invertible matrix. Homology is
    /// unchanged; used as a self-check of the rank computations.
    pub fn in_random_basis<R: Rng>(&self, rng: &mut R) -> GradedComplex {
        let changes: Vec<(SparseMatrix, SparseMatrix)> = self
            .spaces
            .iter()
            .map(|s| random_invertible(s.dim(), rng))
            .collect();
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(i, d)| changes[i + 1].0.mul(d).mul(&changes[i].1))
            .collect();
        GradedComplex {
            kind: self.kind,
            label: format!("{} (rebased)", self.label),
            letters: self.letters,
            first_degree: self.first_degree,
            spaces: self
                .spaces
                .iter()
                .map(|s| DegreeSpace::Full { dim: s.dim() })
                .collect(),
            differentials,
        }
    }
}

/// A random invertible matrix `P` together with `P^{-1}`, built as a
/// product of elementary row operations with small integer multipliers.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> (SparseMatrix, SparseMatrix) {
    let mut p = SparseMatrix::identity(n);
    let mut p_inv = SparseMatrix::identity(n);
    if n < 2 {
        let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if n == 1 {
            let c = Rational::from_integer(c.into());
            return (p.scale(&c), p_inv.scale(&c.recip()));
        }
        return (p, p_inv);
    }
    for _ in 0..(2 * n) {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let c: i64 = rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = Rational::from_integer(c.into());
        let e = SparseMatrix::identity(n).add(&SparseMatrix::from_triplets(n, n, [(a, b, c.clone())]));
        let e_inv =
            SparseMatrix::identity(n).add(&SparseMatrix::from_triplets(n, n, [(a, b, -c)]));
        p = e.mul(&p);
        p_inv = p_inv.mul(&e_inv);
    }
    (p, p_inv)
}

/// A family of maps `f_m: S_m → T_m` between two complexes.
#[derive(Debug, Clone)]
pub struct ChainMap {
    name: String,
    source: Arc<GradedComplex>,
    target: Arc<GradedComplex>,
    first_degree: usize,
    maps: Vec<SparseMatrix>,
}

impl ChainMap {
    /// Builds the map and refuses it unless `f_{m+1} d^S_m = d^T_m f_m` in
    /// every degree where both sides are stored.
    pub fn new(
        name: impl Into<String>,
        source: Arc<GradedComplex>,
        target: Arc<GradedComplex>,
        first_degree: usize,
        maps: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let cm = Self::unchecked(name, source, target, first_degree, maps)?;
        if let Some((m, _)) = cm.first_noncommuting() {
            return Err(Error::NotChainMap { degree: m });
        }
        Ok(cm)
    }

    /// Shape-checked only; use [`ChainMap::report`] to test commutation.
    pub fn unchecked(
        name: impl Into<String>,
        source: Arc<GradedComplex>,
        target: Arc<GradedComplex>,
        first_degree: usize,
        maps: Vec<SparseMatrix>,
    ) -> Result<Self> {
        for (i, f) in maps.iter().enumerate() {
            let m = first_degree + i;
            if f.cols() != source.dim(m) || f.rows() != target.dim(m) {
                return Err(Error::DimensionMismatch(format!(
                    "map at degree {m} is {}×{}, complexes have dims {} → {}",
                    f.rows(),
                    f.cols(),
                    source.dim(m),
                    target.dim(m)
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            source,
            target,
            first_degree,
            maps,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &GradedComplex {
        &self.source
    }

    pub fn target(&self) -> &GradedComplex {
        &self.target
    }

    pub fn map(&self, degree: usize) -> Option<&SparseMatrix> {
        degree
            .checked_sub(self.first_degree)
            .and_then(|i| self.maps.get(i))
    }

    fn square(&self, m: usize) -> Option<Option<usize>> {
        let (f0, f1) = (self.map(m)?, self.map(m + 1)?);
        let (ds, dt) = (self.source.differential(m)?, self.target.differential(m)?);
        Some(f1.mul(ds).first_difference(&dt.mul(f0)))
    }

    fn first_noncommuting(&self) -> Option<(usize, usize)> {
        (self.first_degree..self.first_degree + self.maps.len())
            .find_map(|m| self.square(m).flatten().map(|col| (m, col)))
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        for m in self.first_degree..self.first_degree + self.maps.len() {
            if let Some(diff) = self.square(m) {
                r.record(
                    format!("{} commutes with the differentials", self.name),
                    Some(m),
                    diff.map(|col| format!("basis column {col}")),
                );
            }
        }
        r
    }
}
