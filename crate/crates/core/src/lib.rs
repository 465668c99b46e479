//! Construction and verification engine for biregular bipartite labeled
//! multigraphs.
//!
//! The crate builds the objects whose existence the underlying theory
//! guarantees — swap involutions turning an arbitrary biregular instance into
//! a uniform one, balanced edge colorings, perfect matchings in bipartite
//! tensor products — and stress-tests the open questions around them
//! (the Higgins matching question, the ball-swap conjecture, the four-parts
//! bijection conjecture, and a related matrix inequality) against independent
//! brute-force oracles at desk scale.
//!
//! Everything is exact integer or rational arithmetic except the eigenvalue
//! certificate of the square-case inequality, which is explicitly numeric.
//! All values are immutable and all operations are pure; campaign-level scans
//! go data parallel when the `parallel` feature (on by default) is enabled.

pub mod cert;
pub mod checker;
pub mod coloring;
pub mod error;
pub mod exec;
pub mod inequality;
pub mod involution;
pub mod matching;
pub mod model;
pub mod oracle;
pub mod ratio;
pub mod sample;
pub mod tensor;

pub use error::{Error, Result};

/// Compact JSON with stable field order: re-serializing a decoded value
/// reproduces the input byte for byte.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("crate types serialize infallibly")
}
