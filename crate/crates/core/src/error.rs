//! Error types shared across the crate.

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A distribution was constructed with a parameter outside its range.
    #[error("invalid parameter {name}={value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// An argument lies outside the domain an operation is defined on.
    #[error("domain error: {name}={value} must satisfy {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// A sample with zero observations.
    #[error("empty sample")]
    EmptySample,

    /// A data file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// A data file contained a malformed record.
    #[error("parse error in {path} at line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// A standing assumption of an estimator does not hold for the data.
    #[error("estimator precondition violated: {0}")]
    Precondition(String),

    /// Too few distinct observations for the requested analysis.
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// A simulation or study configuration is unusable.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
