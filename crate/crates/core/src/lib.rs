//! Torus characters, alpha-values and slopes of singular curves, with the
//! intersection-theoretic and GIT computations that cross-check them.
//!
//! All arithmetic is exact.

pub mod character;
pub mod discriminant;
pub mod error;
pub mod expr;
pub mod git;
pub mod intersection;
pub mod rational;
pub mod report;
pub mod semigroup;
mod serde_big;
pub mod singularities;
pub mod suite;
pub mod tables;

pub use character::{alpha_from_lambda_delta, alpha_from_slope, alpha_value, slope, AlphaResult, Character};
pub use error::{Error, Result};
pub use rational::Rational;
pub use semigroup::NumericalSemigroup;
pub use singularities::{AttachmentConfig, Family, SingularityModel};
