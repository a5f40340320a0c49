use thiserror::Error;

use crate::combinatorics::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size guard `{name}` exceeded: {value} > {limit} (set REDEI_GUARD_OVERRIDE to raise)")]
    Guard {
        name: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("weight mismatch: |{left}| = {} but |{right}| = {}", left.weight(), right.weight())]
    WeightMismatch { left: Partition, right: Partition },

    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial is not symmetric: residual at exponent {0:?}")]
    NotSymmetric(Vec<u32>),

    #[error("inconsistent results: {0}")]
    Mismatch(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
