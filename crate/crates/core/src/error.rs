use thiserror::Error;

/// Errors raised by the arithmetic, ideal and factorization layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported bound 2^16")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("zero ideal where a nonzero one is required")]
    ZeroIdeal,
    #[error("unit ideal where a proper one is required")]
    UnitIdeal,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is not radical")]
    NotRadical,
    #[error("defining polynomial is constant")]
    ConstantCurve,
    #[error("curve is singular (Jacobian ideal is proper)")]
    SingularCurve,
    #[error("exponent must be positive")]
    NonPositiveExponent,
    #[error("residue ring of size q^{dim} is inconsistent with primes of degree {degree}")]
    InconsistentDegree { dim: usize, degree: usize },
    #[error("no splitting element found after {draws} random draws")]
    ProbabilisticFailure { draws: usize },
    #[error("problem size exceeds the brute-force bound: {0}")]
    ScaleExceeded(String),
    #[error("prime enumeration left an unexplained factor of dimension {0}")]
    OracleResidual(usize),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Errors caused by malformed or out-of-contract input, as opposed to
    /// internal failures and exhausted randomized searches.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::ProbabilisticFailure { .. } | Error::OracleResidual(_))
    }
}
