use thiserror::Error;

/// Errors produced by the engine.
///
/// `NonPolytopal` is deliberately distinct from the input/resource variants:
/// it means a computation *succeeded* and established that the incidence
/// structure cannot be the face lattice of a polytope.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed caller input: bad indices, a selector that names no face,
    /// a file that violates the interchange format, and so on.
    #[error("input error: {0}")]
    Input(String),

    /// A construction precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The incidence structure is demonstrably not a polytope
    /// (grading or diamond property failed, or a sanity gate rejected it).
    #[error("not polytopal: {0}")]
    NonPolytopal(String),

    /// A configured resource cap was exceeded. Never a wrong answer.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// DSL syntax error with a 1-based source position.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn non_polytopal(msg: impl Into<String>) -> Self {
        Error::NonPolytopal(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
