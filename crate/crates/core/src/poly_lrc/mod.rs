//! Evaluation codes with locality from good polynomials over coset partitions.

mod construction;
mod partition;

pub use construction::{CodeKind, LrcCode, Repair, Slot, SlotForm};
pub use partition::{coset_partition, good_polynomial, smallest_field, EvaluationPartition, GoodPolyAlgebra};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("GF({p}) has no multiplicative subgroup of order {block_size}")]
    FieldUnsuitable { p: u32, block_size: usize },
    #[error("invalid layout: {0}")]
    Layout(String),
    #[error("polynomial is not good: {0}")]
    NotGood(String),
    #[error("generator has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepairError {
    #[error("word has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("local repair needs exactly one erasure, found {0}")]
    NotSingleErasure(usize),
    #[error("repair of position {position} failed: {reason}")]
    Failed { position: usize, reason: &'static str },
}
