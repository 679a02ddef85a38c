use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("could not parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("entry at position {position} is zero")]
    ZeroEntry { position: usize },

    #[error("absolute value {value} occurs more than once")]
    DuplicateValue { value: u32 },

    #[error("value {value} lies outside [1, {n}]")]
    OutOfRange { value: i64, n: usize },

    #[error("entry {value} at position {position} is negative; a positive word is required")]
    NegativeEntry { position: usize, value: i64 },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("descent position {position} lies outside [0, {n})")]
    DescentOutOfRange { position: usize, n: usize },

    #[error("instance too large: {what} = {requested} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("Laurent polynomial has negative-degree residue (lowest degree {offset})")]
    NegativeDegreeResidue { offset: i64 },

    #[error("series truncation orders differ ({left} vs {right})")]
    SeriesOrderMismatch { left: usize, right: usize },

    #[error("series divisor must have constant term 1")]
    NonUnitConstant,

    #[error("maximum drop {maxdrop} exceeds the bound k = {k}")]
    MaxDropExceeds { maxdrop: usize, k: usize },

    #[error("k = {k} must be smaller than n = {n}")]
    KNotBelowN { k: usize, n: usize },

    #[error("k = {k} must not exceed n = {n}")]
    KAboveN { k: usize, n: usize },

    #[error("descent {position} of the requested set is not a descent of the permutation")]
    NotADescent { position: usize },

    #[error("element {value} of X lies outside [{lo}, {hi}]")]
    SubsetOutOfRange { value: u32, lo: usize, hi: usize },

    #[error("X must be non-empty")]
    EmptySubset,

    #[error("throw sequence is empty")]
    EmptySequence,

    #[error("throws at positions {first} and {second} land on the same residue {residue}")]
    ResidueCollision {
        first: usize,
        second: usize,
        residue: usize,
    },

    #[error("throw sum {sum} is not divisible by the period {period}")]
    NonIntegerMean { sum: u64, period: usize },

    #[error(
        "throw at position {position} changes color when caught again at position {successor}"
    )]
    ColorBreak { position: usize, successor: usize },

    #[error("sequence juggles {found} balls, expected {expected}")]
    BallCount { expected: usize, found: usize },

    #[error("sequence does not have the ground state for {balls} balls")]
    NotGroundState { balls: usize },

    #[error("absolute throws are not {period}-periodic (position {position} differs)")]
    NotPeriodic { period: usize, position: usize },

    #[error("zero throw at position {position} on a tracked ball path")]
    ZeroThrow { position: usize },

    #[error("unsupported diagram format {0:?}")]
    UnsupportedFormat(String),
}

impl Error {
    /// Resource guards, reported by the CLI with a distinct exit status.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
