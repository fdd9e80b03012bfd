use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants that correspond to computational outcomes carry a stable
/// machine-readable code (see [`Error::code`]) which the CLI reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("root of unity of order {order} is not available in this field")]
    RootOfUnityUnavailable { order: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("context mismatch: objects live in different categories")]
    ContextMismatch,
    #[error("morphism is not degree-preserving at entry ({row}, {col})")]
    NotDegreePreserving { row: usize, col: usize },
    #[error("invalid group or bicharacter: {0}")]
    InvalidCategory(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has a {dim}-dimensional solution space")]
    NonUnique { dim: usize },
    #[error("projection from the regular comodule block is not surjective (rank {rank} of {quotient_dim})")]
    PiNotSurjective { rank: usize, quotient_dim: usize },
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("antipode routes disagree: {0}")]
    CrossCheckMismatch(String),
    #[error("comparison map is not an isomorphism: {0}")]
    NotIso(String),
    #[error("comodule {0} is not reachable from the diagram")]
    NotReachable(String),
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable code used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch { .. } => "FieldMismatch",
            Error::RootOfUnityUnavailable { .. } => "RootOfUnityUnavailable",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::ContextMismatch => "ContextMismatch",
            Error::NotDegreePreserving { .. } => "NotDegreePreserving",
            Error::InvalidCategory(_) => "InvalidCategory",
            Error::InvalidStructure(_) => "InvalidStructure",
            Error::NoSolution => "NoSolution",
            Error::NonUnique { .. } => "NonUnique",
            Error::PiNotSurjective { .. } => "PiNotSurjective",
            Error::SingularAntipode => "SingularAntipode",
            Error::CrossCheckMismatch(_) => "CrossCheckMismatch",
            Error::NotIso(_) => "NotIso",
            Error::NotReachable(_) => "NotReachable",
            Error::UnknownBuiltin(_) => "UnknownBuiltin",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
