use thiserror::Error;

/// Errors raised by the library.
///
/// `Verification` is special: it means a computed object disagreed with a
/// closed-form table or an independent cross-check, i.e. either the input
/// data or this implementation is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    InexactDivision,
    #[error("divisor must be monic")]
    NonMonicDivisor,
    #[error("{0} is not a squarefree integer >= 2")]
    NotSquarefree(u64),
    #[error("conductor {conductor} is not a multiple of {required}")]
    ConductorMismatch { conductor: u64, required: u64 },
    #[error("elements live in different conductors ({0} and {1})")]
    MixedConductors(u64, u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("exponent {exponent} is not a unit modulo {conductor}")]
    NotAUnit { exponent: i64, conductor: u64 },
    #[error("polynomial does not split over the cyclotomic field of conductor {0}")]
    RootNotInField(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
