use thiserror::Error;

use crate::markov::RingMat;
use crate::rings::ModelId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("operands live in different models ({0} and {1})")]
    ModelMismatch(ModelId, ModelId),

    #[error("{value} is not an element of {model}")]
    NotMember { model: ModelId, value: String },

    #[error("cannot subtract {subtrahend} from {minuend}")]
    Underflow { minuend: String, subtrahend: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{dividend} has no Euclidean division by {divisor} in {model}")]
    NotEuclidean { model: ModelId, dividend: String, divisor: String },

    #[error("{0} is not integer-valued")]
    NotIntegerValued(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{0} is not in the range of the pairing function")]
    NotAPair(String),

    #[error("index {index} out of range for length {length}")]
    IndexOutOfRange { index: String, length: String },

    #[error("{0} does not code a sequence")]
    NotASequence(String),

    #[error("invalid ur-string: {0}")]
    InvalidUrString(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("operation needs a nonempty string")]
    EmptyString,

    #[error("no editors witness: {0} and its inverse both have a negative entry")]
    NoWitness(Box<RingMat>),

    #[error("{operation} is not supported over {model}")]
    UnsupportedModel { model: ModelId, operation: &'static str },

    #[error("cut out of bounds: {0}")]
    OutOfBounds(String),

    #[error("substituted polynomial must have degree at least 1")]
    DegreeTooLow,

    #[error("partitions are of different base strings")]
    BaseMismatch,

    #[error("no refinement morphism exists")]
    NoMorphism,

    #[error("outside the ur-string domain: {0}")]
    DomainViolation(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("axiom {axiom} is not checked on target {target}")]
    NotApplicable { target: String, axiom: String },
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
