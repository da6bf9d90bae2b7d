//! Exact sparse linear algebra over the rationals.
//!
//! Every homology computation in the crate bottoms out here: kernels,
//! images and ranks are computed by exact Gaussian elimination, and
//! subspaces are stored in reduced row-echelon form so that two subspaces
//! are equal exactly when their stored bases are equal.

mod matrix;
mod rational;
mod subspace;
mod vector;

pub use matrix::SparseMatrix;
pub use rational::{parse_rational, Rational};
pub use subspace::{quotient_basis, Subspace};
pub use vector::SparseVec;

use crate::error::{Error, Result};

pub fn kernel(m: &SparseMatrix) -> Subspace {
    m.kernel()
}

pub fn image(m: &SparseMatrix) -> Subspace {
    m.image()
}

/// Dimension of `ker(d_out) / im(d_in)` at a degree whose incoming
/// differential is `d_in` and outgoing differential is `d_out`.
pub fn homology_dim(d_out: &SparseMatrix, d_in: &SparseMatrix) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing differential has {} columns but incoming differential has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotSquareZero { degree: 0 });
    }
    let cycles = d_out.cols() - d_out.rank();
    let boundaries = d_in.rank();
    Ok(cycles - boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn homology_of_zero_maps() {
        let out = SparseMatrix::zeros(3, 5);
        let inc = SparseMatrix::zeros(5, 2);
        assert_eq!(homology_dim(&out, &inc).unwrap(), 5);
    }

    #[test]
    fn homology_with_identity_in() {
        let out = SparseMatrix::zeros(1, 4);
        let inc = SparseMatrix::identity(4);
        assert_eq!(homology_dim(&out, &inc).unwrap(), 0);
    }

    #[test]
    fn homology_middle_of_k_zero_k_one_k() {
        // k --0--> k --1--> k
        let inc = SparseMatrix::zeros(1, 1);
        let out = SparseMatrix::identity(1);
        assert_eq!(homology_dim(&out, &inc).unwrap(), 0);
    }

    #[test]
    fn homology_rejects_nonzero_composite() {
        let m = SparseMatrix::identity(2);
        assert_eq!(
            homology_dim(&m, &m),
            Err(Error::NotSquareZero { degree: 0 })
        );
    }

    #[test]
    fn homology_rejects_shape_mismatch() {
        let out = SparseMatrix::zeros(1, 3);
        let inc = SparseMatrix::zeros(2, 1);
        assert!(matches!(
            homology_dim(&out, &inc),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn homology_invariant_under_base_change() {
        // 0 -> k^2 --[1 1]--> k ; degree-0 space k^2 with d_in = 0
        let d_out = SparseMatrix::from_dense(&[vec![q(1), q(1)]]);
        let d_in = SparseMatrix::zeros(2, 1);
        let p = SparseMatrix::from_dense(&[vec![q(2), q(1)], vec![q(1), q(1)]]);
        let p_inv = SparseMatrix::from_dense(&[vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert_eq!(p.mul(&p_inv), SparseMatrix::identity(2));
        let h0 = homology_dim(&d_out, &d_in).unwrap();
        let h1 = homology_dim(&d_out.mul(&p_inv), &p.mul(&d_in)).unwrap();
        assert_eq!(h0, 1);
        assert_eq!(h0, h1);
    }
}
