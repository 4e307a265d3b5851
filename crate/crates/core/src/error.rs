//! Error type shared by every module of the crate.

use crate::cox::Subset;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different Coxeter matrices")]
    MatrixMismatch,
    #[error("subset {0} is not spherical")]
    NotSpherical(Subset),
    #[error("subset {0} is not irreducible spherical")]
    NotIrreducibleSpherical(Subset),
    #[error("subset {0} is not maximal spherical")]
    NotMaximalSpherical(Subset),
    #[error("matrix is not of type FC")]
    NotFc,
    #[error("empty subset not allowed here")]
    EmptySubset,
    #[error("the two reflections coincide")]
    SameReflection,
    #[error("element is not a reflection: {0}")]
    NotReflection(String),
    #[error("walls are not disjoint")]
    WallsNotDisjoint,
    #[error("nothing found within radius {radius}")]
    NotFoundWithinRadius { radius: u32 },
    #[error("no valid ordering of the support exists")]
    NoValidOrdering,
    #[error("base validation failed: clause {clause}")]
    BaseValidationFailed { clause: &'static str },
    #[error("standing assumption violated: {0}")]
    StandingAssumption(&'static str),
    #[error("markings with different cores")]
    DifferentCores,
    #[error("half-spaces disagree within one marking class: {0}")]
    InconsistentClass(String),
    #[error("witness pairs disagree for cell refinement: {0}")]
    WitnessDisagreement(String),
    #[error("invalid twist move: {0}")]
    InvalidMove(String),
    #[error("result is inconclusive: {0}")]
    Inconclusive(String),
    #[error("descent did not finish within {steps} steps")]
    StepBudgetExceeded { steps: u32 },
    #[error("no conjugator found within radius {radius}")]
    ConjugatorNotFound { radius: u32 },
    #[error("word exploration budget exceeded")]
    WordBudgetExceeded,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for outcomes that mean "could not decide within the given
    /// bounds" rather than a definite failure.
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            Error::Inconclusive(_)
                | Error::NotFoundWithinRadius { .. }
                | Error::ConjugatorNotFound { .. }
                | Error::StepBudgetExceeded { .. }
                | Error::WordBudgetExceeded
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
