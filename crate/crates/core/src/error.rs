use thiserror::Error;

use crate::asm::AsmViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("not an alternating sign matrix: {0}")]
    NotAsm(AsmViolation),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid insertion positions: {0}")]
    InvalidPositions(String),

    #[error("closure exceeds {max} elements")]
    ClosureTooLarge { max: usize },

    #[error("closure has no two-sided identity")]
    NoIdentity,

    #[error("closure is not a group: element {index} has no inverse")]
    NotAGroup { index: usize },

    #[error("empty generator list")]
    NoGenerators,

    #[error("frame metadata is missing or inconsistent: {0}")]
    Frame(String),

    #[error("permutation moves odd index {index}; it must fix every odd index")]
    MovesOddIndex { index: usize },

    #[error("n = {n} exceeds the resource guard (maximum {max})")]
    ResourceGuard { n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
