use thiserror::Error;

use crate::attach::RejectionReason;
use crate::axioms::AxiomReport;
use crate::poset::PosetViolation;
use crate::table::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axioms violated:\n{0}")]
    AxiomsViolated(AxiomReport),

    #[error("relation is not a partial order: {0}")]
    NotAPoset(PosetViolation),

    #[error("invalid algebra size {0}")]
    InvalidSize(usize),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("codeword length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("malformed code: {0}")]
    MalformedCode(String),

    #[error("duplicate codeword {0}")]
    DuplicateCodeword(String),

    #[error("code needs at least {needed} words, found {found}")]
    TooFewWords { needed: usize, found: usize },

    #[error("code matrix is not square: {rows} words of length {columns}")]
    NonSquare { rows: usize, columns: usize },

    #[error("map is not an order isomorphism: {0}")]
    NotAnOrderIso(String),

    #[error("order equivalences disagree at ({x}, {y}): {values:?}")]
    EquivalenceBroken {
        x: Element,
        y: Element,
        values: [bool; 4],
    },

    #[error("order {order} exceeds the enumeration limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("catalog entries {first} and {second} of order {order} have isomorphic orders")]
    DuplicateOrderType {
        order: usize,
        first: usize,
        second: usize,
    },

    #[error("no embedding found up to order {0}")]
    NoEmbeddingFound(usize),

    #[error("code rejected: {0}")]
    Rejected(Box<RejectionReason>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
