use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("composite of consecutive differentials is nonzero at degree {degree}")]
    NotSquareZero { degree: usize },

    #[error("{axiom} fails on basis element {witness}")]
    AxiomFailure { axiom: String, witness: String },

    #[error("differential does not preserve the degree-{degree} subspace")]
    NotPreserved { degree: usize },

    #[error("chain map fails to commute with the differentials at degree {degree}")]
    NotChainMap { degree: usize },

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown built-in coalgebra {0:?}")]
    UnknownBuiltin(String),

    #[error("resource guard: {words} ambient basis words exceeds the cap of {cap}")]
    ResourceGuard { words: u128, cap: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
