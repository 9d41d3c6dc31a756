//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
///
/// Verdicts ("not a coordinate system", "non-rigid", "unknown at cap") are
/// ordinary return values, not errors; only precondition violations and
/// exhausted resource budgets land here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: {dividend} is not a multiple of {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("S-polynomial step budget exceeded ({budget} reductions)")]
    StepBudgetExceeded { budget: u64 },
    #[error("monomial dimension budget exceeded: need {needed}, budget {budget}")]
    DimensionBudgetExceeded { needed: usize, budget: usize },
    #[error("derivation is zero")]
    ZeroDerivation,
    #[error("not in the kernel: derivation image is {image}")]
    NotInKernel { image: String },
    #[error("no local slice of degree <= {degree_cap}")]
    SliceNotFound { degree_cap: u64 },
    #[error("invalid local slice: {0}")]
    InvalidSlice(String),
    #[error("tuple {tuple} is not in Gamma_D at rank {rank}: {reason}")]
    GammaMembershipFailed {
        tuple: usize,
        rank: usize,
        reason: String,
    },
    #[error("line {line}: {msg}")]
    SpecFile { line: usize, msg: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}
