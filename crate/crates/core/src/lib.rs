//! Exact chain complexes of finite-dimensional coalgebras.
//!
//! Bar, Hochschild, Chevalley–Eilenberg(–Leibniz), symmetric, reduced and
//! cyclic complexes over ℚ, the operator identities relating them, and the
//! coalgebra form of the Loday–Quillen–Tsygan comparison at finite matrix
//! size.

pub mod cli;
pub mod coalgebra;
pub mod complexes;
pub mod error;
pub mod linalg;
pub mod lqt;
pub mod perm;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
