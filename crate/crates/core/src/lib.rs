//! Locally repairable codes.
//!
//! Polynomial evaluation constructions over prime fields, cycle codes of
//! regular graphs with availability two, the distance and rate bounds that
//! govern them, and brute-force oracles that check every claimed property on
//! small instances.
//!
//! The linear algebra is generic over [`algebra::Field`]; the aliases below
//! fix the scalar types used throughout the rest of the crate.

pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod graph_lrc;
pub mod poly_lrc;
pub mod verify;

use num_rational::Ratio;

/// Element of a runtime-selected prime field GF(p).
pub type Fp = algebra::FieldElement;
/// Dense matrix over GF(p).
pub type FpMatrix = algebra::Matrix<Fp>;
/// Polynomial over GF(p).
pub type FpPoly = algebra::Poly<Fp>;
/// Exact rationals for elimination over Q.
pub type Rational = Ratio<i64>;
/// Dense matrix over Q.
pub type QMatrix = algebra::Matrix<Rational>;
/// Nonnegative exact ratio, used for code rates.
pub type Rate = Ratio<u64>;
