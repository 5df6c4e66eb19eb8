//! Exact computation of first Hochschild cohomology of finite-dimensional
//! algebras over prime fields, as a Lie algebra.

pub mod assoc;
pub mod deriv;
pub mod error;
pub mod ffmat;
pub mod groups;
pub mod lie;
pub mod meataxe;
pub mod poly;
pub mod verify;

pub use assoc::AssocAlgebra;
pub use deriv::{hh1, HH1Presentation};
pub use error::{Error, Result};
pub use ffmat::{Matrix, PrimeField, Scalar, Subspace};
pub use groups::{GroupSpec, GroupTable};
pub use lie::{LieAlgebra, SimplicityVerdict};
