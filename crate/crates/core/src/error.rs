use std::fmt;

use thiserror::Error;

/// Position of a problem inside a text input. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceLocation {
    pub line: usize,
    pub column: usize,
    pub excerpt: String,
}

impl fmt::Display for SourceLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if !self.excerpt.is_empty() {
            write!(f, ": `{}`", self.excerpt)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} error at {location}: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Semantic => "semantic" })]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub location: SourceLocation,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("level {level} out of range (valid levels: 0..{levels})")]
    LevelOutOfRange { level: usize, levels: usize },

    #[error("cell {index} of dimension {dim} has no 0-skeleton data")]
    MissingSkeleton { dim: usize, index: usize },

    #[error("walk kind `{kind}` does not apply to this input")]
    KindMismatch { kind: &'static str },

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("enumeration budget of {limit} walks exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown fixture `{0}` (known: fig1, fig2)")]
    UnknownFixture(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
