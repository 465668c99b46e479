//! Crate-wide error type.
//!
//! `LemmaViolation` is special: it means a construction that is *proved* to
//! succeed got stuck, so the offending state is serialized and kept as a
//! research artifact instead of being discarded with a plain error message.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Serialized stuck state of a construction that contradicts a proven lemma.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LemmaArtifact {
    /// Which construction step got stuck (e.g. `"find-triple"`).
    pub lemma: String,
    pub detail: String,
    /// Enough serialized state to replay the failure independently.
    pub payload: serde_json::Value,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a regular multigraph: {0}")]
    NotRegular(String),
    #[error("budget exceeded in {context} after {progress} steps")]
    BudgetExceeded { context: String, progress: u64 },
    #[error("parameters outside the proven classes: {0}")]
    Uncovered(String),
    #[error("construction contradicted lemma `{}`: {}", .0.lemma, .0.detail)]
    LemmaViolation(Box<LemmaArtifact>),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub fn lemma(lemma: &str, detail: impl Into<String>, payload: serde_json::Value) -> Self {
        Error::LemmaViolation(Box::new(LemmaArtifact {
            lemma: lemma.to_string(),
            detail: detail.into(),
            payload,
        }))
    }
}
