use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDenominator,
    #[error("13*chi_1 - chi_2 vanishes for a non-trivial character (chi_delta = 0, chi_lambda != 0)")]
    DegenerateDenominator,
    #[error("chi_lambda is zero; slope undefined")]
    ZeroLambda,
    #[error("delta-degree is zero")]
    ZeroDelta,
    #[error("generators {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("gap sequence is not symmetric")]
    AsymmetricGaps,
    #[error("invalid gap set: {0}")]
    InvalidGaps(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("n - 1 = {n_minus_1} does not divide 2g = {two_g}")]
    DivisibilityViolation { n_minus_1: u64, two_g: u64 },
    #[error("invalid attachment subset: {0}")]
    InvalidSubset(String),
    #[error("no closed form catalogued for {0}")]
    MissingClosedForm(String),
    #[error("discriminant is not weighted homogeneous (degrees {0} and {1})")]
    NotWeightedHomogeneous(i64, i64),
    #[error("genus {0} is 2 mod 3")]
    WrongResidue(u64),
    #[error("no one-parameter family is associated with {0}")]
    NoAssociatedFamily(String),
    #[error("character invariant violated: {0}")]
    InvalidCharacter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}
