use thiserror::Error;

use crate::words::Index;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("index {index} out of range 1..={bound} (at byte {pos})")]
    IndexOutOfRange { pos: usize, index: usize, bound: Index },

    #[error("repeated index in letter at byte {pos}")]
    RepeatedIndex { pos: usize },

    #[error("braid letter at byte {pos} needs i < j")]
    Unordered { pos: usize },

    #[error("letter at byte {pos} is not allowed in a {kind} word")]
    UnexpectedLetter { pos: usize, kind: &'static str },

    #[error("strand bound mismatch: {left} vs {right}")]
    BoundMismatch { left: Index, right: Index },

    #[error("word kind mismatch: {left} vs {right}")]
    KindMismatch { left: &'static str, right: &'static str },

    #[error("invalid triple {0:?}")]
    InvalidTriple(Vec<usize>),

    #[error("position {pos} does not hold the selected letter {expected}")]
    NotSelectedLetter { pos: usize, expected: String },

    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
