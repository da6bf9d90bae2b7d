//! Finite-dimensional duals: `C^∨` with the convolution product and `L^∨`
//! with the dual bracket `[f, g](x) = f(x_[1]) g(x_[2])`.

use std::collections::BTreeMap;

use crate::linalg::{Rational, SparseMatrix, SparseVec};
use crate::report::Report;

use super::{Coalgebra, LeibnizCoalgebra, Structure};

/// Multiplication table on the dual basis: `table[a][b] = f_a · f_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAlgebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    unit: Option<SparseVec>,
}

fn transpose_structure(dim: usize, s: &Structure) -> Vec<Vec<SparseVec>> {
    let mut acc: Vec<Vec<BTreeMap<usize, Rational>>> = vec![vec![BTreeMap::new(); dim]; dim];
    for (x, terms) in s.iter().enumerate() {
        for (a, b, c) in terms {
            acc[*a][*b].insert(x, c.clone());
        }
    }
    acc.into_iter()
        .map(|row| row.into_iter().map(SparseVec::from_map).collect())
        .collect()
}

/// Convolution algebra of a coalgebra; the counit becomes the unit.
pub fn dualize(c: &Coalgebra) -> DualAlgebra {
    DualAlgebra {
        name: format!("{}^∨", c.name()),
        basis: c.basis().iter().map(|b| format!("{b}^∨")).collect(),
        table: transpose_structure(c.dim(), c.delta()),
        unit: c
            .counit()
            .map(|e| SparseVec::from_entries(e.iter().cloned().enumerate())),
    }
}

/// Dual Leibniz (Lie, when `δ` is antisymmetric) algebra.
pub fn dualize_leibniz(l: &LeibnizCoalgebra) -> DualAlgebra {
    DualAlgebra {
        name: format!("{}^∨", l.name()),
        basis: l.basis().iter().map(|b| format!("{b}^∨")).collect(),
        table: transpose_structure(l.dim(), l.cobracket()),
        unit: None,
    }
}

impl DualAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn product(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    /// Bilinear extension of the table.
    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, x) in u.iter() {
            for (b, y) in v.iter() {
                out = out.add_scaled(&self.table[a][b], &(x * y));
            }
        }
        out
    }

    /// Left multiplication by `f_a` as a matrix.
    pub fn left_multiplication(&self, a: usize) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim(), self.table[a].clone())
    }

    fn first_triple<F>(&self, mut bad: F) -> Option<String>
    where
        F: FnMut(&SparseVec, &SparseVec, &SparseVec) -> bool,
    {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (u, v, w) = (SparseVec::unit(a), SparseVec::unit(b), SparseVec::unit(c));
                    if bad(&u, &v, &w) {
                        return Some(format!(
                            "({}, {}, {})",
                            self.basis[a], self.basis[b], self.basis[c]
                        ));
                    }
                }
            }
        }
        None
    }

    /// Associativity and, if present, the unit laws.
    pub fn check_associative(&self) -> Report {
        let mut r = Report::new();
        r.record(
            "associativity",
            None,
            self.first_triple(|u, v, w| self.mul(&self.mul(u, v), w) != self.mul(u, &self.mul(v, w))),
        );
        if let Some(e) = &self.unit {
            let witness = (0..self.dim()).find(|&a| {
                let u = SparseVec::unit(a);
                self.mul(e, &u) != u || self.mul(&u, e) != u
            });
            r.record("unit law", None, witness.map(|a| self.basis[a].clone()));
        }
        r
    }

    /// `[[f,g],h] − [[f,h],g] = [f,[g,h]]`, dual to coJacobi.
    pub fn check_leibniz(&self) -> Report {
        let mut r = Report::new();
        r.record(
            "Leibniz identity",
            None,
            self.first_triple(|u, v, w| {
                let lhs = self.mul(&self.mul(u, v), w).sub(&self.mul(&self.mul(u, w), v));
                lhs != self.mul(u, &self.mul(v, w))
            }),
        );
        r
    }
}
