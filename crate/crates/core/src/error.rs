use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{l}, {r}]: endpoints must be finite with l <= r")]
    InvalidInterval { l: f64, r: f64 },

    #[error("interval collection is empty")]
    EmptyCollection,

    #[error(
        "{k}-tuple enumeration needs {combinations} intersections, above the limit of {limit}"
    )]
    CombinatorialLimit {
        k: usize,
        combinations: u128,
        limit: u128,
    },

    #[error("tuple size {k} out of range 1..={n}")]
    InvalidTupleSize { k: usize, n: usize },

    #[error("alpha must lie in (0, 1], got {0}")]
    InvalidAlpha(f64),

    #[error("at least 2 samples are required, got {0}")]
    InvalidSamples(usize),

    #[error("invalid evaluation domain: {0}")]
    InvalidDomain(String),

    #[error("invalid membership function: {0}")]
    InvalidMembership(String),

    #[error("fuzzy set is empty (membership is identically zero)")]
    EmptySet,

    #[error("agreement needs at least 2 sources, got {0}")]
    TooFewSources(usize),

    #[error("support has zero length")]
    EmptySupport,

    #[error("at least 2 alpha cuts are required, got {0}")]
    InvalidCuts(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("interval [{l}, {r}] lies outside the scale [{lo}, {hi}]")]
    OutOfScale { l: f64, r: f64, lo: f64, hi: f64 },

    #[error("participant {participant} answered {term} twice in group {group}")]
    DuplicateResponse {
        group: String,
        participant: String,
        term: String,
    },

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("unknown term {0:?}")]
    UnknownTerm(String),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Strips any line context and returns the underlying error.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }
}
