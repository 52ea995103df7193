use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sentence identifier {0:?}: expected a nonempty token over [A-Za-z0-9_]")]
    InvalidSentenceId(String),

    #[error("unknown sentence {0:?}")]
    UnknownSentence(String),

    #[error("edge ({from}, {to}) names an undeclared sentence")]
    UndeclaredEndpoint { from: String, to: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{what}: {actual} exceeds the ceiling of {limit}")]
    CeilingExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("candidate labelling is not total: missing {0:?}")]
    NotTotal(Vec<String>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
}

impl Error {
    pub fn is_ceiling(&self) -> bool {
        matches!(self, Error::CeilingExceeded { .. })
    }
}
