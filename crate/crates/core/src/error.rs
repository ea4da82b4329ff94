use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime below 2^31")]
    InvalidModulus(u64),
    #[error("minimal polynomial {0} is reducible")]
    Reducible(String),
    #[error("cannot build a quadratic extension of this field")]
    CannotExtend,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("unsupported field: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("table is not commutative at ({0}, {1})")]
    NotCommutative(usize, usize),
    #[error("algebra must have dimension at least 1")]
    Empty,
    #[error("Miyamoto orbit of the axes spans only {rank} of {dim} dimensions")]
    SpanFailure { rank: usize, dim: usize },
    #[error("Frobenius form verification failed: {0}")]
    InconsistentForm(String),
    #[error("axis {index} failed certification: {failure}")]
    Axis { index: usize, failure: String },
    #[error("orbit closure exceeded the cap of {0} elements")]
    OrbitCapExceeded(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("malformed algebra file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("seed is not an involution: {0:?}")]
    NotInvolution(Vec<usize>),
    #[error("not a 3-transposition class: {d:?} * {e:?} has order {order}")]
    OrderViolation {
        d: Vec<usize>,
        e: Vec<usize>,
        order: usize,
    },
    #[error("class exceeds {0} elements")]
    ClassTooLarge(usize),
    #[error("unknown catalog group {0:?}")]
    UnknownGroup(String),
    #[error("checksum mismatch for group {name}: expected {expected}, computed {computed}")]
    ChecksumMismatch {
        name: String,
        expected: String,
        computed: String,
    },
    #[error("group {name}: expected class size {expected}, found {found}")]
    ClassSizeMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("Matsuo algebras need characteristic different from 2")]
    FieldCharTwo,
    #[error("invalid eta: {0}")]
    InvalidEta(String),
    #[error("malformed group file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("a line needs two distinct axes")]
    SameAxis,
    #[error("line has dimension {0}; no idempotent family")]
    LineDimZeroOrOne(usize),
    #[error("toric basis needs a further quadratic extension")]
    ExtensionInsufficient,
    #[error("toric family parameter must be nonzero")]
    ZeroParameter,
    #[error("operation not applicable to a {0} line")]
    NotApplicable(String),
    #[error("line structure contradicts the classification: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolidityError {
    #[error("solidity methods disagree on line ({i}, {j}): {detail}")]
    MethodDisagreement { i: usize, j: usize, detail: String },
    #[error(transparent)]
    Line(#[from] LineError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("implication violated: {0}")]
    ImplicationViolated(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Solidity(#[from] SolidityError),
}

/// Umbrella error for callers that mix modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Line(#[from] LineError),
    #[error(transparent)]
    Solidity(#[from] SolidityError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
}
