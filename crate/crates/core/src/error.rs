use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid range [{lo}, {hi})")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("segment of {len} integers exceeds the budget of {budget}")]
    SegmentOverBudget { len: u64, budget: u64 },

    #[error("limit must be at least {min}, got {got}")]
    LimitTooSmall { got: u64, min: u64 },

    #[error("modulus must be at least 3, got {0}")]
    ModulusTooSmall(u64),

    #[error("unsupported modulus {0}: expected 4 or an odd prime")]
    UnsupportedModulus(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("class {a} is not reduced modulo {q}")]
    NotReducedClass { a: u64, q: u64 },

    #[error("epsilon must be +1 or -1, got {0}")]
    BadEpsilon(i8),

    #[error("logarithmic integral is undefined at {0}")]
    LogintDomain(f64),

    #[error("argument {0} is too close to the logarithmic singularity at 1")]
    SingularArgument(f64),

    #[error("tally covers modulus {got}, expected {want}")]
    TallyModulusMismatch { got: u64, want: u64 },

    #[error("tally frontier is {got}, expected {want}")]
    FrontierMismatch { got: u64, want: u64 },

    #[error("tally starts at {0}; a full tally from 2 is required")]
    TallyNotCanonical(u64),

    #[error("tallies are not adjacent: [{a_lo}, {a_hi}] then [{b_lo}, {b_hi}]")]
    NotAdjacent {
        a_lo: u64,
        a_hi: u64,
        b_lo: u64,
        b_hi: u64,
    },

    #[error("zero table is empty")]
    EmptyZeroTable,

    #[error("zero table line {line}: {reason}")]
    ZeroTable { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
