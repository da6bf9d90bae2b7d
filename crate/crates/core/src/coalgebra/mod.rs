//! Finite-dimensional coassociative, Leibniz and Lie coalgebras given by
//! structure constants, with axiom checkers and the standard constructions.

mod coaction;
mod dual;
mod format;

pub use coaction::{diagonal_coaction, invariants, coinvariants_of_dual, Coaction, Splitting};
pub use dual::{dualize, dualize_leibniz, DualAlgebra};
pub use format::{builtin, parse_coalgebra, to_json, CoalgebraFile};

use std::collections::BTreeMap;
use std::ops::Deref;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::report::Report;

/// Sparse structure constants: for each basis element, `(left, right, coeff)`.
pub type Structure = Vec<Vec<(usize, usize, Rational)>>;

fn normalize(terms: Vec<(usize, usize, Rational)>) -> Vec<(usize, usize, Rational)> {
    let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for (a, b, c) in terms {
        *acc.entry((a, b)).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), c)| (a, b, c))
        .collect()
}

fn check_indices(structure: &Structure, dim: usize, what: &str) -> Result<()> {
    if structure.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{what} has {} entries for a basis of size {dim}",
            structure.len()
        )));
    }
    for (x, terms) in structure.iter().enumerate() {
        if let Some((a, b, _)) = terms.iter().find(|(a, b, _)| *a >= dim || *b >= dim) {
            return Err(Error::DimensionMismatch(format!(
                "{what} of basis element {x} refers to ({a}, {b}) outside 0..{dim}"
            )));
        }
    }
    Ok(())
}

type Triple = BTreeMap<(usize, usize, usize), Rational>;

fn add3(map: &mut Triple, key: (usize, usize, usize), c: Rational) {
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// `(Δ⊗id)Δ(x)` and `(id⊗Δ)Δ(x)` agree on every basis element; returns
/// the first one where they do not.
fn coassociativity_witness(delta: &Structure) -> Option<usize> {
    (0..delta.len()).find(|&x| {
        let mut left = Triple::new();
        let mut right = Triple::new();
        for (a, b, c) in &delta[x] {
            for (a1, a2, c1) in &delta[*a] {
                add3(&mut left, (*a1, *a2, *b), c * c1);
            }
            for (b1, b2, c2) in &delta[*b] {
                add3(&mut right, (*a, *b1, *b2), c * c2);
            }
        }
        left != right
    })
}

/// First basis element violating `(id₃ - (id⊗τ₂))(δ⊗id)δ = (id⊗δ)δ`.
fn cojacobi_witness(delta: &Structure) -> Option<usize> {
    (0..delta.len()).find(|&x| {
        let mut left = Triple::new();
        let mut right = Triple::new();
        for (a, b, c) in &delta[x] {
            for (a1, a2, c1) in &delta[*a] {
                add3(&mut left, (*a1, *a2, *b), c * c1);
                add3(&mut left, (*a1, *b, *a2), -(c * c1));
            }
            for (b1, b2, c2) in &delta[*b] {
                add3(&mut right, (*a, *b1, *b2), c * c2);
            }
        }
        left != right
    })
}

/// First basis element violating `(id₂ + τ₂)δ = 0`.
fn antisymmetry_witness(delta: &Structure) -> Option<usize> {
    (0..delta.len()).find(|&x| {
        let mut sym: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (a, b, c) in &delta[x] {
            *sym.entry((*a, *b)).or_insert_with(Rational::zero) += c;
            *sym.entry((*b, *a)).or_insert_with(Rational::zero) += c;
        }
        sym.values().any(|v| !v.is_zero())
    })
}

/// Counital coassociative coalgebra (the counit may be absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    name: String,
    basis: Vec<String>,
    delta: Structure,
    counit: Option<Vec<Rational>>,
}

impl Coalgebra {
    /// Validates shapes and normalizes the structure constants. Axioms are
    /// not checked here; call [`Coalgebra::check`].
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        delta: Structure,
        counit: Option<Vec<Rational>>,
    ) -> Result<Self> {
        let dim = basis.len();
        check_indices(&delta, dim, "comultiplication")?;
        if let Some(e) = &counit {
            if e.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "counit has {} values for a basis of size {dim}",
                    e.len()
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            basis,
            delta: delta.into_iter().map(normalize).collect(),
            counit,
        })
    }

    /// Like [`Coalgebra::new`] but refuses input failing any axiom.
    pub fn new_checked(
        name: impl Into<String>,
        basis: Vec<String>,
        delta: Structure,
        counit: Option<Vec<Rational>>,
    ) -> Result<Self> {
        let c = Self::new(name, basis, delta, counit)?;
        c.require_axioms()?;
        Ok(c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn delta(&self) -> &Structure {
        &self.delta
    }

    pub fn delta_of(&self, x: usize) -> &[(usize, usize, Rational)] {
        &self.delta[x]
    }

    pub fn counit(&self) -> Option<&[Rational]> {
        self.counit.as_deref()
    }

    pub fn is_counital(&self) -> bool {
        self.counit.is_some()
    }

    /// Labels of a word joined by `⊗`.
    pub fn word_label(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&i| self.basis[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// Coassociativity and, when a counit is present, both counit laws.
    pub fn check(&self) -> Report {
        let mut r = Report::new();
        let witness = |x: Option<usize>| x.map(|i| self.basis[i].clone());
        r.record("coassociativity", None, witness(coassociativity_witness(&self.delta)));
        if let Some(eps) = &self.counit {
            let left = (0..self.dim()).find(|&x| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (a, b, c) in &self.delta[x] {
                    *acc.entry(*b).or_insert_with(Rational::zero) += &eps[*a] * c;
                }
                acc.retain(|_, v| !v.is_zero());
                acc != BTreeMap::from([(x, Rational::one())])
            });
            let right = (0..self.dim()).find(|&x| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (a, b, c) in &self.delta[x] {
                    *acc.entry(*a).or_insert_with(Rational::zero) += &eps[*b] * c;
                }
                acc.retain(|_, v| !v.is_zero());
                acc != BTreeMap::from([(x, Rational::one())])
            });
            r.record("left counit law", None, witness(left));
            r.record("right counit law", None, witness(right));
        }
        r
    }

    fn require_axioms(&self) -> Result<()> {
        match self.check().first_failure() {
            Some(f) => Err(Error::AxiomFailure {
                axiom: f.identity.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            }),
            None => Ok(()),
        }
    }

    fn require_counital(&self) -> Result<()> {
        if self.is_counital() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "coalgebra {} has no counit",
                self.name
            )))
        }
    }
}

/// Coalgebra with a cobracket `δ: L → L⊗L` and no counit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizCoalgebra {
    name: String,
    basis: Vec<String>,
    cobracket: Structure,
}

impl LeibnizCoalgebra {
    pub fn new(name: impl Into<String>, basis: Vec<String>, cobracket: Structure) -> Result<Self> {
        check_indices(&cobracket, basis.len(), "cobracket")?;
        Ok(Self {
            name: name.into(),
            basis,
            cobracket: cobracket.into_iter().map(normalize).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn cobracket(&self) -> &Structure {
        &self.cobracket
    }

    pub fn cobracket_of(&self, x: usize) -> &[(usize, usize, Rational)] {
        &self.cobracket[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.cobracket.iter().all(Vec::is_empty)
    }

    pub fn word_label(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&i| self.basis[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        r.record(
            "coJacobi identity",
            None,
            cojacobi_witness(&self.cobracket).map(|i| self.basis[i].clone()),
        );
        r
    }

    pub fn check_lie(&self) -> Report {
        let mut r = self.check();
        r.record(
            "antisymmetry of the cobracket",
            None,
            antisymmetry_witness(&self.cobracket).map(|i| self.basis[i].clone()),
        );
        r
    }
}

/// Leibniz coalgebra whose cobracket is antisymmetric; both axioms are
/// verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCoalgebra(LeibnizCoalgebra);

impl LieCoalgebra {
    pub fn new(l: LeibnizCoalgebra) -> Result<Self> {
        if let Some(f) = l.check_lie().first_failure() {
            return Err(Error::AxiomFailure {
                axiom: f.identity.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
        Ok(Self(l))
    }

    pub fn as_leibniz(&self) -> &LeibnizCoalgebra {
        &self.0
    }

    pub fn into_leibniz(self) -> LeibnizCoalgebra {
        self.0
    }
}

impl Deref for LieCoalgebra {
    type Target = LeibnizCoalgebra;

    fn deref(&self) -> &LeibnizCoalgebra {
        &self.0
    }
}

impl AsRef<LeibnizCoalgebra> for LieCoalgebra {
    fn as_ref(&self) -> &LeibnizCoalgebra {
        &self.0
    }
}

/// `Lie(C)`: the cobracket `δ = (id - τ₂)Δ`.
pub fn lie_of(c: &Coalgebra) -> Result<LieCoalgebra> {
    if let Some(x) = coassociativity_witness(&c.delta) {
        return Err(Error::AxiomFailure {
            axiom: "coassociativity".into(),
            witness: c.basis[x].clone(),
        });
    }
    let cobracket = c
        .delta
        .iter()
        .map(|terms| {
            terms
                .iter()
                .flat_map(|(a, b, v)| [(*a, *b, v.clone()), (*b, *a, -v)])
                .collect()
        })
        .collect();
    LieCoalgebra::new(LeibnizCoalgebra::new(
        format!("Lie({})", c.name),
        c.basis.clone(),
        cobracket,
    )?)
}

/// `X ⊗ Y` with `Δ(x⊗y) = (x₍₁₎⊗y₍₁₎)⊗(x₍₂₎⊗y₍₂₎)` and `η(x⊗y) = η(x)η(y)`.
pub fn tensor_coalgebra(x: &Coalgebra, y: &Coalgebra) -> Result<Coalgebra> {
    for c in [x, y] {
        c.require_counital()?;
        c.require_axioms()?;
    }
    let dy = y.dim();
    let mut basis = Vec::with_capacity(x.dim() * dy);
    let mut delta = Vec::with_capacity(x.dim() * dy);
    for i in 0..x.dim() {
        for j in 0..dy {
            basis.push(format!("{}|{}", x.basis[i], y.basis[j]));
            let mut terms = Vec::new();
            for (x1, x2, a) in &x.delta[i] {
                for (y1, y2, b) in &y.delta[j] {
                    terms.push((x1 * dy + y1, x2 * dy + y2, a * b));
                }
            }
            delta.push(terms);
        }
    }
    let (ex, ey) = (x.counit.as_ref().expect("counital"), y.counit.as_ref().expect("counital"));
    let counit = ex.iter().flat_map(|a| ey.iter().map(move |b| a * b)).collect();
    Coalgebra::new_checked(format!("{}⊗{}", x.name, y.name), basis, delta, Some(counit))
}

fn one() -> Rational {
    Rational::one()
}

/// The ground field `k` with `Δ(1) = 1⊗1`, `η(1) = 1`.
pub fn trivial() -> Coalgebra {
    Coalgebra::new_checked("k", vec!["1".into()], vec![vec![(0, 0, one())]], Some(vec![one()]))
        .expect("trivial coalgebra is valid")
}

/// Group-like coalgebra `k[ℤ/n]`: `Δ(g) = g⊗g`, `η(g) = 1`.
pub fn group_coalgebra(n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("group order must be ≥ 1".into()));
    }
    Coalgebra::new_checked(
        format!("k[Z/{n}]"),
        (0..n).map(|i| format!("g{i}")).collect(),
        (0..n).map(|i| vec![(i, i, one())]).collect(),
        Some(vec![one(); n]),
    )
}

/// Matrix coalgebra `M_n^c(k)`: `Δ(e_ij) = Σ_a e_ia ⊗ e_aj`, `η(e_ij) = δ_ij`.
pub fn matrix_coalgebra(n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be ≥ 1".into()));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut basis = Vec::with_capacity(n * n);
    let mut delta = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            basis.push(format!("e_{}_{}", i + 1, j + 1));
            delta.push((0..n).map(|a| (idx(i, a), idx(a, j), one())).collect());
            counit.push(if i == j { one() } else { Rational::zero() });
        }
    }
    Coalgebra::new_checked(format!("M_{n}^c(k)"), basis, delta, Some(counit))
}

/// `M_n^c(C) = M_n^c(k) ⊗ C`.
pub fn matrix_over(n: usize, c: &Coalgebra) -> Result<Coalgebra> {
    tensor_coalgebra(&matrix_coalgebra(n)?, c)
}

/// `gl_n^c(C) = Lie(M_n^c(C))`.
pub fn gl_coalgebra(n: usize, c: &Coalgebra) -> Result<LieCoalgebra> {
    lie_of(&matrix_over(n, c)?)
}

/// `gl_n^c(k) = Lie(M_n^c(k))` with the plain `e_i_j` labels.
pub fn gl_coalgebra_k(n: usize) -> Result<LieCoalgebra> {
    lie_of(&matrix_coalgebra(n)?)
}
