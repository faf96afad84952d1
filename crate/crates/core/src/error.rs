use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Variants are grouped loosely by the module that raises them; the CLI maps
/// [`Error::is_infeasible`] to exit code 1 and everything else to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{n} does not divide q - 1 = {q_minus_one}")]
    NotADivisor { n: u64, q_minus_one: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("value {value} is not an element of a field of order {q}")]
    NotAnElement { value: u64, q: u64 },

    // polymat
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("size error: {0}")]
    SizeError(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,

    // skew / matring
    #[error("operands live in different rings")]
    ContextMismatch,
    #[error("length {n} has no root of unity in F_{q}")]
    NoRootOfUnity { n: usize, q: u64 },
    #[error("operation requires the default cyclic automorphism")]
    NotCyclicSigma,
    #[error("index {index} out of range 1..={n}")]
    InvalidIndex { index: usize, n: usize },
    #[error("matrix is not a member of the ring M: {0}")]
    NotInRing(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("generator is not semi-reduced")]
    NotSemiReduced,
    #[error("generator is not basic")]
    NotBasic,
    #[error("generator is not delay-free")]
    NotDelayFree,

    // construct
    #[error("invalid degree specification: {0}")]
    InvalidSpec(String),
    #[error("rook instance has no solution")]
    RookInfeasible,
    #[error("no proved constructive case applies")]
    ConstructiveCaseUnavailable,
    #[error("cycle length mismatch: {0}")]
    CycleLengthMismatch(String),

    // codes
    #[error("state space of {states} states exceeds the limit {limit}")]
    StateSpaceTooLarge { states: u128, limit: u64 },
    #[error("encoder is not minimal")]
    NotMinimal,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Mathematical infeasibility, as opposed to malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::RookInfeasible
                | Error::ConstructiveCaseUnavailable
                | Error::NotBasic
                | Error::NotSemiReduced
                | Error::NotDelayFree
                | Error::RankDeficient
                | Error::NotMinimal
                | Error::StateSpaceTooLarge { .. }
        )
    }

    /// Stable machine-readable identifier.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::NotADivisor { .. } => "NotADivisor",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::NotAnElement { .. } => "NotAnElement",
            Error::BothZero => "BothZero",
            Error::SizeError(_) => "SizeError",
            Error::RankDeficient => "RankDeficient",
            Error::ContextMismatch => "ContextMismatch",
            Error::NoRootOfUnity { .. } => "NoRootOfUnity",
            Error::NotCyclicSigma => "NotCyclicSigma",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::NotInRing(_) => "NotInRing",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::NotSemiReduced => "NotSemiReduced",
            Error::NotBasic => "NotBasic",
            Error::NotDelayFree => "NotDelayFree",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::RookInfeasible => "RookInfeasible",
            Error::ConstructiveCaseUnavailable => "ConstructiveCaseUnavailable",
            Error::CycleLengthMismatch(_) => "CycleLengthMismatch",
            Error::StateSpaceTooLarge { .. } => "StateSpaceTooLarge",
            Error::NotMinimal => "NotMinimal",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
