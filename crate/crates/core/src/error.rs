use thiserror::Error;

/// Errors raised by the permutation, enumeration and algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation word at index {index}: {reason}")]
    InvalidPermutation { index: usize, reason: String },

    #[error("cannot parse permutation {input:?}: {reason}")]
    PermutationSyntax { input: String, reason: String },

    #[error("{what} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("enumeration of size {n} exceeds the bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("invalid class constraint: {0}")]
    InvalidConstraint(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Errors from exact polynomial and series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integer coefficient overflow")]
    Overflow,

    #[error("series constant term is not 1")]
    NonUnitConstant,

    #[error("continued fraction depth {depth} is smaller than the order {order}")]
    InsufficientDepth { depth: usize, order: usize },

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Syntax { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
