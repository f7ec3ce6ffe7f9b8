use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("bad rational literal {0:?}")]
    BadRational(String),

    #[error("bad syntax: {0}")]
    BadSyntax(String),

    #[error("least upward jumps rule violated: {0}")]
    RuleViolation(String),

    #[error("constant not admitted: {0}")]
    ConstantNotAdmitted(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unknown model {0:?}")]
    BadModelName(String),

    #[error("not a special 2-flag at the reference point: {0}")]
    NotSpecialFlag(String),

    #[error("degenerate pivot: {0}")]
    DegeneratePivot(String),

    #[error("small flag generator count {count} exceeds cap {cap}")]
    GeneratorBlowup { count: usize, cap: usize },

    #[error("unexpected covariant dimension: {0}")]
    UnexpectedCovariantDimension(String),
}

impl Error {
    /// True for errors coming from the geometry of the input rather than from
    /// malformed user input.
    pub fn is_geometric(&self) -> bool {
        matches!(
            self,
            Error::NotSpecialFlag(_)
                | Error::DegeneratePivot(_)
                | Error::GeneratorBlowup { .. }
                | Error::UnexpectedCovariantDimension(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
