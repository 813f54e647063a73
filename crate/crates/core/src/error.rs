use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the combinatorial and algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition ({partition}) is not {k}-bounded")]
    NotBounded { partition: Partition, k: usize },

    #[error("partition ({partition}) is not a {c}-core")]
    NotCore { partition: Partition, c: usize },

    #[error("partition ({partition}) does not fit inside the {ell}x{k} box")]
    NotInBox {
        partition: Partition,
        ell: usize,
        k: usize,
    },

    #[error("the empty partition has no decomposition")]
    EmptyPartition,

    #[error("{name} = {value} out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        expected: String,
    },

    #[error("partitions ({0}) and ({1}) have different sizes")]
    SizeMismatch(Partition, Partition),

    #[error("degree mismatch: slice has degree {slice}, vector has degree {vector}")]
    DegreeMismatch { slice: usize, vector: usize },

    #[error("k-Schur recursion invariant violated for ({partition}), k = {k}: {detail}")]
    PieriInvariant {
        partition: Partition,
        k: usize,
        detail: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(name: &'static str, value: usize, expected: impl Into<String>) -> Error {
    Error::OutOfRange {
        name,
        value,
        expected: expected.into(),
    }
}
