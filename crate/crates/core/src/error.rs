use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Dynkin type {0}")]
    UnsupportedType(String),
    #[error("node {node} of {ty} is neither minuscule nor cominuscule")]
    NotCominuscule { ty: String, node: usize },
    #[error("{0}")]
    UnsupportedSpace(String),
    #[error("cannot parse space identifier `{0}` (expected e.g. E6/P1, A4/P2)")]
    ParseSpace(String),
    #[error("unknown class `{name}` for {space}; valid names: {valid}")]
    UnknownClass {
        space: String,
        name: String,
        valid: String,
    },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("degree {d} out of range 0..={max}")]
    DegreeOutOfRange { d: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("partial table: {0}")]
    Partial(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
