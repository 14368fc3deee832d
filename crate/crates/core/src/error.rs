use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("monomials live in different universes ({0} vs {1} variables)")]
    UniverseMismatch(usize, usize),

    #[error("truncation needs weight-homogeneous input: {0}")]
    NotHomogeneous(String),

    /// A proved theorem failed on a computed instance. This is always an
    /// engine bug, never a mathematical finding.
    #[error("bound violated ({bound}): computed {computed} > bound {limit} on {config}")]
    BoundViolation {
        bound: &'static str,
        computed: u64,
        limit: u64,
        config: String,
    },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("enumeration of {count} configurations exceeds the cap of {cap}; raise TORICGB_CAP or narrow the sweep")]
    CapExceeded { count: u128, cap: u128 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code for the command-line front end: 2 for bad input, 3 for
    /// internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfiguration(_)
            | Error::InvalidInput(_)
            | Error::CapExceeded { .. }
            | Error::Json(_)
            | Error::Io(_) => 2,
            Error::Overflow(_)
            | Error::UniverseMismatch(..)
            | Error::NotHomogeneous(_)
            | Error::BoundViolation { .. }
            | Error::InvariantViolation(_) => 3,
        }
    }
}
