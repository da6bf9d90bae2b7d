use std::collections::BTreeMap;

use num_traits::Zero;

use super::subspace::Echelon;
use super::{Rational, SparseVec, Subspace};

/// Column-compressed sparse matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        assert!(
            columns.iter().all(|c| c.max_index().map_or(true, |i| i < rows)),
            "column entry out of range"
        );
        Self {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Row-major dense input.
    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|j| {
                SparseVec::from_entries(
                    rows.iter()
                        .enumerate()
                        .map(|(i, r)| (i, r[j].clone())),
                )
            })
            .collect();
        Self {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut per_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) out of range");
            per_col[j].push((i, v));
        }
        Self {
            rows,
            cols,
            columns: per_col.into_iter().map(SparseVec::from_entries).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.columns[j].get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, x) in v.iter() {
            for (i, m) in self.columns[k].iter() {
                *acc.entry(i).or_insert_with(Rational::zero) += m * x;
            }
        }
        SparseVec::from_map(acc)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.assert_same_shape(other);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.add(b))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.assert_same_shape(other);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.sub(b))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    fn assert_same_shape(&self, other: &SparseMatrix) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut per_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col.iter() {
                per_row[i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: per_row
                .into_iter()
                .map(SparseVec::from_sorted_unchecked)
                .collect(),
        }
    }

    /// `self ⊗ id_d` on the lexicographic tensor index `(u, l) ↦ u * d + l`.
    pub fn kron_identity_right(&self, d: usize) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * d);
        for col in &self.columns {
            for l in 0..d {
                columns.push(SparseVec::from_sorted_unchecked(
                    col.iter().map(|(i, v)| (i * d + l, v.clone())).collect(),
                ));
            }
        }
        SparseMatrix {
            rows: self.rows * d,
            cols: self.cols * d,
            columns,
        }
    }

    /// `id_d ⊗ self` on the lexicographic tensor index `(l, u) ↦ l * cols + u`.
    pub fn kron_identity_left(&self, d: usize) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * d);
        for l in 0..d {
            for col in &self.columns {
                columns.push(SparseVec::from_sorted_unchecked(
                    col.iter()
                        .map(|(i, v)| (l * self.rows + i, v.clone()))
                        .collect(),
                ));
            }
        }
        SparseMatrix {
            rows: self.rows * d,
            cols: self.cols * d,
            columns,
        }
    }

    /// First column on which two same-shape matrices differ.
    pub fn first_difference(&self, other: &SparseMatrix) -> Option<usize> {
        self.assert_same_shape(other);
        (0..self.cols).find(|&j| self.columns[j] != other.columns[j])
    }

    pub fn rank(&self) -> usize {
        let mut cols: Vec<&SparseVec> = self.columns.iter().filter(|c| !c.is_zero()).collect();
        cols.sort_by_key(|c| c.nnz());
        let mut ech = Echelon::new(self.rows);
        for c in cols {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    /// Null space `{v : self * v = 0}` in canonical echelon form.
    pub fn kernel(&self) -> Subspace {
        let row_space = Subspace::from_spanning(self.cols, self.transpose().columns);
        let pivots: Vec<usize> = row_space.pivots().collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let neg_one = -Rational::from_integer(1.into());
        let basis = (0..self.cols).filter(|&f| !is_pivot[f]).map(|f| {
            let mut entries = vec![(f, Rational::from_integer(1.into()))];
            for (row, &p) in row_space.basis().iter().zip(&pivots) {
                if let Some(c) = row.get(f) {
                    entries.push((p, c * &neg_one));
                }
            }
            SparseVec::from_entries(entries)
        });
        Subspace::from_spanning(self.cols, basis.collect::<Vec<_>>())
    }

    /// Column span in canonical echelon form.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.rows, self.columns.clone())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c.iter() {
                out[i][j] = v.clone();
            }
        }
        out
    }
}
