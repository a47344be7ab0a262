use thiserror::Error;

/// Errors produced by table construction, the defect calculus and the
/// verification suites.
#[derive(Debug, Error)]
pub enum Error {
    /// A sieve was requested over the empty range (limit 0).
    #[error("sieve limit must be at least 1")]
    EmptyRange,

    /// An operation needed table entries beyond the table's limit.
    ///
    /// `needed` saturates at `u64::MAX` when the true requirement does not
    /// fit in 64 bits.
    #[error("table covers 1..={limit} but the operation needs entries up to {needed}")]
    InsufficientTable { needed: u64, limit: u64 },

    /// The largest-value function is undefined for a count of zero ones.
    #[error("no number can be written with zero ones")]
    UndefinedCount,

    /// The integer defect of a symbolic defect is undefined for base 1.
    #[error("integer defect is undefined for a defect with base 1")]
    ExcludedBase,

    /// An exponent tuple did not match a polynomial's variable count.
    #[error("expected {expected} exponents, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// Polynomial constructors require nonzero constants.
    #[error("polynomial constants must be nonzero")]
    ZeroConstant,

    /// The threshold witness family needs at least one affine step.
    #[error("witness depth must be at least 1")]
    DegenerateWitness,

    /// A ranked scan ran out of qualifying values.
    #[error("fewer than {rank_needed} values of complexity at most {k} exist")]
    RankExhausted { k: u32, rank_needed: u64 },

    /// Two classification forms claimed different complexities for one value.
    #[error("classification conflict at {n}: claimed complexities {first} and {second}")]
    ClassificationConflict { n: u64, first: u32, second: u32 },

    /// A sieve cache file failed validation.
    #[error("corrupt cache: {0}")]
    CorruptCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Machine-readable kind tag, stable for scripting against stderr output.
impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyRange => "empty-range",
            Error::InsufficientTable { .. } => "insufficient-table",
            Error::UndefinedCount => "undefined-argument",
            Error::ExcludedBase => "excluded-case",
            Error::ArityMismatch { .. } => "arity-mismatch",
            Error::ZeroConstant => "invalid-constant",
            Error::DegenerateWitness => "degenerate-witness",
            Error::RankExhausted { .. } => "rank-exhausted",
            Error::ClassificationConflict { .. } => "classification-conflict",
            Error::CorruptCache(_) => "corrupt-cache",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
