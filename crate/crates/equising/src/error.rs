//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("polynomial modulus is not square-free")]
    NotSquareFree,
    #[error("polynomial modulus is not monic")]
    NotMonic,
    #[error("element is a zero divisor: {0}")]
    ZeroDivisor(String),
    #[error("cannot invert zero")]
    ZeroElement,
    #[error("series is zero up to finite precision; valuation cannot be certified")]
    ValuationBelowPrecision,
    #[error("operands belong to different coefficient rings")]
    RingMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} does not divide the polynomial degree")]
    NotDivisor(usize),
    #[error("degree relations of the expansion basis do not hold")]
    DegreeMismatch,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("resultant is identically zero (common factor)")]
    CommonFactor,
    #[error("input polynomial is not square-free")]
    NotSquareFreeInput,
    #[error("branch parametrization is not primitive")]
    NotPrimitive,
    #[error("lifting precision too low to separate the Weierstrass factor")]
    PrecisionTooLow,
    #[error("edge-data prefix is not valid for this polynomial")]
    InvalidPrefix,
    #[error("edge data list is incomplete (last N is not 1)")]
    IncompleteData,
    #[error("no shift z in 0..=d with F(0,z) != 0")]
    NoValidShift,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
