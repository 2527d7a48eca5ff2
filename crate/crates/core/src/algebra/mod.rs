//! Exact arithmetic: prime fields, polynomials, dense matrices.

mod bitmatrix;
mod code;
mod field;
mod matrix;
mod poly;

pub use bitmatrix::{pack_bits, BitMatrix};
pub use code::LinearCode;
pub use field::{is_prime, Field, FieldElement, PrimeField};
pub use matrix::{solve_erasures, Echelon, Matrix};
pub use poly::Poly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("operands from different fields: GF({left}) and GF({right})")]
    MixedFields { left: u32, right: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix entry belongs to a different field")]
    ForeignEntry,
    #[error("bit-packed path needs GF(2), got GF({0})")]
    NotBinary(u32),
    #[error("known symbols are not consistent with any codeword")]
    Inconsistent,
    #[error("erased positions are linearly dependent ({free} free unknowns)")]
    Ambiguous { free: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
