//! Exact computations for quasi-twilled associative algebras: structure
//! equations, right and left deformation maps, twisting, the derived-bracket
//! (curved) L∞-algebras controlling deformation maps, and the cohomology of
//! deformation maps. All arithmetic is over the rationals.

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod formulas;
pub mod linalg;
pub mod linfty;
pub mod quasi_twilled;
pub mod scalar;

pub use algebra::{
    AssociativeAlgebra, AssociativeRepresentation, Cocycle2, MatchedPairData, RepresentationPair, ResidualReport,
};
pub use cochain::{circle, circle_parts, gerstenhaber, koszul_sign, MultilinearMap, Signature, Space, Split};
pub use cohomology::{cohomology_dims, CochainComplex};
pub use deformation::{Side, TwistResult};
pub use error::{Error, Result};
pub use linalg::{quotient_dim, row_reduce, ExactMatrix};
pub use linfty::{CurvedLInftyStructure, VData};
pub use quasi_twilled::{build_standard, BuilderKind, Component, Ingredients, QuasiTwilledAlgebra};
pub use scalar::Scalar;
