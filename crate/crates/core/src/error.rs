use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not quasihomogeneous: {0}")]
    NotQuasihomogeneous(String),
    #[error("charge q_{index} = {value} is not positive")]
    NonPositiveCharge { index: usize, value: String },
    #[error("polynomial is not invertible: {0}")]
    NotInvertible(String),
    #[error("polynomial admits no decomposition into power/loop/chain summands: {0}")]
    NotNondegenerate(String),
    #[error("group of diagonal symmetries is infinite (exponent matrix has rank < N)")]
    InfiniteGroup,
    #[error("group enumeration exceeds the configured bound of {0} elements")]
    GroupTooLarge(u64),
    #[error("the exponential-grading element J does not lie in the group")]
    JNotInGroup,
    #[error("phase vector is not a symmetry of the polynomial: {0}")]
    NotASymmetry(String),
    #[error("charges do not sum to 1")]
    NotCalabiYau,
    #[error("group is not contained in the determinant-1 subgroup")]
    GroupNotInSl,
    #[error("series division leaves a remainder at degree {degree}; singularity is not isolated")]
    NonPolynomialQuotient { degree: usize },
    #[error("group-averaged multiplicity at degree {degree} is not a nonnegative integer")]
    NonIntegerDimension { degree: usize },
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("duplicate monomial {0}")]
    DuplicateMonomial(String),
    #[error("variable index gap: {0} never occurs")]
    UnknownVariable(String),
    #[error("state spaces differ:\n{0}")]
    Mismatch(String),
    #[error("mirror relation fails:\n{0}")]
    MirrorMismatch(String),
    #[error("diagram cross-check failed: {0}")]
    CrossCheckFailure(String),
    #[error("no degree-preserving matching between internal dots and empty rays: {0}")]
    MatchingImpossible(String),
    #[error("element carries no single degree: {0}")]
    NotApplicable(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code convention of the command-line tool: failed verifications
    /// exit with 2, every other error (usage, parse, validation) with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Mismatch(_)
            | Error::MirrorMismatch(_)
            | Error::CrossCheckFailure(_)
            | Error::MatchingImpossible(_) => 2,
            _ => 1,
        }
    }
}
