use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An input is larger than an exhaustive routine is willing to handle.
    #[error("{what} = {value} exceeds the limit of {limit}")]
    Limit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A bound or construction whose hypothesis does not hold for this input.
    #[error("inapplicable: {0}")]
    Inapplicable(String),

    /// A constructed object failed its own certificate check.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Limit { what, value, limit })
    } else {
        Ok(())
    }
}
