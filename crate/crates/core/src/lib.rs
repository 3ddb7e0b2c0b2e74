//! Exact-arithmetic toolkit for finite-dimensional nonassociative algebras:
//! structure analysis, quaternion and octonion frame discovery, and
//! zero-divisor witnesses.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod forge;
pub mod generators;
pub mod io;
pub mod linalg;
pub mod sampling;
pub mod scalar;

pub use algebra::{Algebra, Element};
pub use forge::{forge, Classification, ForgeOptions, ForgeResult, Frame};
pub use linalg::{Matrix, Subspace};
pub use sampling::Sampling;
pub use scalar::{FieldSpec, Scalar};
