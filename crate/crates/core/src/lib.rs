//! Exact-arithmetic toolkit for walk counting and degree-based inequalities on
//! small graphs, digraphs and rational matrices.
//!
//! Everything here is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere, so every verdict (`holds`, `equality`,
//! ordering flags) is exact and reproducible.
//!
//! The crate is organised as a pipeline of small modules:
//!
//! * [`graphs`] — undirected multigraphs and directed graphs, parsing,
//!   degree data and structural classification;
//! * [`matrices`] — square rational matrices with exact multiplication and
//!   fast exponentiation;
//! * [`walks`] — walk-count profiles computed two independent ways (matrix
//!   powers and direct dynamic programming);
//! * [`indices`] — the first and second Zagreb indices and their walk-count
//!   identities;
//! * [`orderings`] — similarly/conversely ordered sequence tests and the
//!   discrete Chebyshev sum inequality;
//! * [`inequalities`] — verdict reports for the comparison theorems that tie
//!   the above together;
//! * [`search`] — exhaustive scans of small graph classes for witnesses and
//!   counterexamples.

pub mod error;
pub mod graphs;
pub mod indices;
pub mod inequalities;
pub mod matrices;
pub mod orderings;
pub mod rational;
pub mod search;
pub mod walks;

pub use error::Error;
pub use rational::{parse_rational, BigInt, Rational};

/// Serializes any value to a deterministic JSON string: object keys are sorted,
/// rationals and big integers are rendered as strings, and the layout is
/// stable across runs and platforms.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value must be serializable");
    serde_json::to_string_pretty(&v).expect("JSON value must stringify")
}
