//! Exact computations with depth-two extensions, bialgebroids and (weak) Hopf
//! algebras given by structure constants over the rationals or a prime field.

pub mod algebra;
pub mod bialgebroid;
pub mod depth_two;
pub mod error;
pub mod field;
pub mod galois;
pub mod groups;
pub mod hopf;
pub mod matrix;
pub mod pipeline;
pub mod registry;
pub mod report;
pub mod schema;
pub mod subspace;
pub mod tensor;
pub mod weak_hopf;

pub use algebra::{Extension, StructureAlgebra, Subalgebra};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use report::{Check, CheckSet, Status};
pub use subspace::Subspace;
