use crate::complex::FaceSet;

/// Errors raised by the library.
///
/// `code()` gives the stable machine-readable identifier used in CLI error
/// objects; `is_budget()` distinguishes enumeration/pivot budget violations
/// (CLI exit code 3) from domain errors (exit code 2).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set needs at least 2 vertices, got {0}")]
    EmptyGround(usize),
    #[error("a listed facet equals the full vertex set; complexes must be proper")]
    FullComplex,
    #[error("vertex {vertex} is outside the ground set 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("subset {0} has weight exactly equal to the threshold")]
    NotGeneric(FaceSet),
    #[error("weights must sum to 1, got {0}")]
    NotNormalized(String),
    #[error("{0}")]
    InvalidWeights(String),
    #[error("point does not lie in H_0 (coordinates must sum to zero)")]
    NotInH0,
    #[error("vector is not in the span of the circuit")]
    NotInSpan,
    #[error("expected a facet (singleton B)")]
    NotFacet,
    #[error("{0} is not a minimal non-face")]
    NotMinimalNonface(FaceSet),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("height vector violates a wall-crossing inequality")]
    WitnessInvalid,
    #[error("two facet cones produced the same vertex: {0}")]
    Degenerate(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGround(_) => "EMPTY_GROUND",
            Error::FullComplex => "FULL_COMPLEX",
            Error::VertexOutOfRange { .. } => "RANGE",
            Error::NotGeneric(_) => "NOT_GENERIC",
            Error::NotNormalized(_) => "NOT_NORMALIZED",
            Error::InvalidWeights(_) => "INVALID_WEIGHTS",
            Error::NotInH0 => "NOT_IN_H0",
            Error::NotInSpan => "NOT_IN_SPAN",
            Error::NotFacet => "NOT_FACET",
            Error::NotMinimalNonface(_) => "NOT_MINIMAL_NONFACE",
            Error::Range(_) => "RANGE",
            Error::Dimension(_) => "DIMENSION",
            Error::WitnessInvalid => "WITNESS_INVALID",
            Error::Degenerate(_) => "DEGENERATE",
            Error::BudgetExceeded(_) => "BUDGET_EXCEEDED",
            Error::Parse(_) => "PARSE",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
