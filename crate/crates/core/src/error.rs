use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a gluing needs at least one chord")]
    Empty,
    #[error("point {0} appears in more than one chord")]
    DuplicateIndex(usize),
    #[error("point {0} is not covered by any chord")]
    MissingIndex(usize),
    #[error("chord joins point {0} to itself")]
    SelfPair(usize),
    #[error("point {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("cannot parse gluing: {0}")]
    Parse(String),
    #[error("diagrams have different sizes (n = {left} and n = {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("rotation by {k} is outside 1..={max}")]
    RotationOutOfRange { k: usize, max: usize },
    #[error("rotation by {0} does not preserve the arc coloring; only even shifts act on color diagrams")]
    OddRotation(usize),
    #[error("inconsistent topology: {0}")]
    InconsistentTopology(String),
    #[error("invalid spin-graph: {0}")]
    InvalidSpin(String),
    #[error("brute force over {required} gluings exceeds the work budget of {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("double factorial is only defined here for odd arguments, got {0}")]
    EvenInput(i64),
    #[error("double factorial of {0} is undefined (argument must be >= -1)")]
    NegativeInput(i64),
    #[error("{divisor} does not divide {value}")]
    NonDivisor { divisor: u64, value: u64 },
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("Burnside sum {sum} is not divisible by the group order {order}")]
    DivisibilityViolation { sum: BigUint, order: u64 },
    #[error("invalid range {from}..={to}")]
    InvalidRange { from: usize, to: usize },
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
