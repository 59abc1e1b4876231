//! Exact computations for complex simple Lie algebras: root data, weight
//! systems, Casimir characters, tensor products, Casimir-collision
//! certificates and numeric M-type matrices.

pub mod casimir;
pub mod collisions;
pub mod error;
pub mod matrep;
pub mod rational;
pub mod repdata;
pub mod rootsys;
pub mod tensor;
pub mod weight;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsys::{Family, LieType, RootSystem};
pub use weight::Weight;
