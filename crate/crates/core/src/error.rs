use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    BadScalar(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arity error: {0}")]
    Arity(String),
    #[error("column space of the subspace is not contained in the ambient space")]
    ContainmentViolation,
    #[error("ingredient check failed: {0}")]
    Ingredient(String),
    #[error("map is not a {side} deformation map (residual nonzero at {witness})")]
    NotDeformationMap { side: &'static str, witness: String },
    #[error("map is not invertible")]
    SingularMap,
    #[error("quasi-twilled algebra has no builder provenance")]
    UnknownKind,
    #[error("invalid quasi-twilled algebra: {0}")]
    InvalidQta(String),
    #[error("cochain does not lie in the abelian block: {0}")]
    Block(String),
    #[error("expected a degree-0 cochain, found arity {0}")]
    Degree(usize),
    #[error("element is not a Maurer-Cartan element")]
    NotMaurerCartan,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
