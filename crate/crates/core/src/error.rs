use std::fmt;

/// What went wrong while parsing a text description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVertex(String),
    UnknownArrow(String),
    NotAdmissible(String),
    ShapeMismatch(String),
    Invalid(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(s) => write!(f, "syntax error: {s}"),
            ParseErrorKind::UnknownVertex(s) => write!(f, "unknown vertex `{s}`"),
            ParseErrorKind::UnknownArrow(s) => write!(f, "unknown arrow `{s}`"),
            ParseErrorKind::NotAdmissible(s) => write!(f, "relation is not admissible: {s}"),
            ParseErrorKind::ShapeMismatch(s) => write!(f, "matrix shape mismatch: {s}"),
            ParseErrorKind::Invalid(s) => write!(f, "invalid input: {s}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {col}: {kind}")]
    Parse { line: usize, col: usize, kind: ParseErrorKind },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("ideal does not become finite-codimensional within path length {0}")]
    NotFiniteDimensional(usize),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("module violates relation {0}")]
    RelationViolated(String),
    #[error("maps do not commute with the arrow actions")]
    NotHomomorphism,
    #[error("not a two-sided ideal")]
    NotAnIdeal,
    #[error("{what}: estimated {estimate} exceeds cap {cap}")]
    CapExceeded { what: String, estimate: u128, cap: u128 },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
