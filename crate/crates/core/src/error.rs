use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported field GF({p}^{k}): {reason}")]
    UnsupportedField {
        p: u32,
        k: u32,
        reason: &'static str,
    },
    #[error("no irreducible polynomial of degree {k} found over GF({p})")]
    NoModulus { p: u32, k: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix dimensions or fields do not match")]
    DimensionMismatch,
    #[error("element order exceeds cap {cap}")]
    OrderCapExceeded { cap: u64 },
    #[error("group closure exceeds cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("generators use inconsistent representations: {0}")]
    InconsistentGenerators(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the threshold {threshold} for this operation")]
    ThresholdExceeded { order: usize, threshold: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("no action found: {0}")]
    NoActionFound(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("feature `{0}` is not enabled in this build")]
    FeatureDisabled(&'static str),
    #[error("order sequences have different totals ({left} vs {right})")]
    UnequalTotals { left: u64, right: u64 },
    #[error("implausible order sequence: {0}")]
    Implausible(String),
    #[error("malformed sequence text: {0}")]
    MalformedSequence(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("line {line}: {msg}")]
    Fixture { line: usize, msg: String },
    #[error("corpus error: {0}")]
    Corpus(String),
    #[error("inconsistent classification: {0}")]
    InconsistentClassification(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code: 1 for bad input, 2 when a construction or
    /// computation cannot be carried out.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            NotPrime(_)
            | InvalidParameter { .. }
            | UnknownCatalogName(_)
            | FeatureDisabled(_)
            | UnequalTotals { .. }
            | Implausible(_)
            | MalformedSequence(_)
            | Syntax { .. }
            | Fixture { .. }
            | Corpus(_)
            | Io(_) => 1,
            UnsupportedField { .. }
            | NoModulus { .. }
            | SingularMatrix
            | DimensionMismatch
            | OrderCapExceeded { .. }
            | ClosureCapExceeded { .. }
            | InconsistentGenerators(_)
            | NotNormal
            | ThresholdExceeded { .. }
            | InvalidAction(_)
            | NoActionFound(_)
            | InconsistentClassification(_) => 2,
        }
    }
}
