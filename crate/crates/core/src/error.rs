use thiserror::Error;

/// Errors raised by constructions whose preconditions fail.
///
/// Mathematical property failures (a non-associative table, an unfillable
/// horn) are reported through report values instead; these variants cover
/// malformed inputs and violated preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension caps differ: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("dimension {requested} exceeds the available cap {cap}")]
    BeyondCap { requested: usize, cap: usize },

    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },

    #[error("maps do not share a common target")]
    TargetMismatch,

    #[error("`{0}` is not an arrow of the base category")]
    NotAnArrow(String),

    #[error("base enriched category is not discrete")]
    NonDiscreteBase,

    #[error("Grothendieck construction carries no provenance diagram")]
    MissingProvenance,

    #[error("simplicial set is not inner-fillable in dimension 2: {0}")]
    NotInnerFillable(String),

    #[error("enriched category is not locally Kan up to dimension {dim}: {witness}")]
    NotLocallyKan { dim: usize, witness: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid functor: {0}")]
    InvalidFunctor(String),

    #[error("invalid monoidal structure: {0}")]
    InvalidMonoidal(String),

    #[error("sequence level {found} does not match map codomain [{expected}]")]
    LevelMismatch { expected: usize, found: usize },

    #[error("{0}")]
    Counterexample(String),
}

impl Error {
    pub(crate) fn malformed(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Malformed { what, detail: detail.into() }
    }

    pub(crate) fn cap_check(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::CapMismatch { left, right })
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
