use thiserror::Error;

/// Errors raised by the algebra, combinatorics and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the unit ideal is not a proper ideal")]
    UnitIdeal,
    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),
    #[error("ambient ring mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("the void complex has no Stanley-Reisner ideal")]
    VoidComplex,
    #[error("the Alexander dual of the full simplex is void")]
    FullSimplex,
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(String),
    #[error("skeleton index {index} outside -1..={dim}")]
    SkeletonOutOfRange { index: i32, dim: i32 },
    #[error("monomials do not form a regular sequence (supports overlap)")]
    NotRegularSequence,
    #[error("closed form does not apply: {0}")]
    TheoremOutOfScope(&'static str),
    #[error("ideal is not full-supported")]
    NotFullSupported,
    #[error("ideal is not polymatroidal")]
    NotPolymatroidal,
    #[error("expected a {expected}-dimensional complex, got dimension {found}")]
    WrongDimension { expected: i32, found: i32 },
    #[error("complex is not almost Cohen-Macaulay")]
    PreconditionNotACM,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse errors are reported separately from mathematical errors by the CLI.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
