//! Library-wide error type.
//!
//! Programming errors (mismatched matrix shapes handed to arithmetic
//! operators, out-of-range indices) panic; everything a caller can trigger
//! with well-typed but invalid *data* is reported through [`Error`].

use thiserror::Error;

/// Errors surfaced by parsing, validation, and the semantic checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A scalar literal could not be parsed as an exact rational.
    #[error("cannot parse rational literal {0:?}")]
    Parse(String),

    /// A JSON document could not be decoded.
    #[error("malformed JSON: {0}")]
    Json(String),

    /// Structurally invalid input data (wrong shapes, bad labels, …).
    #[error("invalid input: {0}")]
    Input(String),

    /// Rejected partition (empty, increasing, zero part, or a single row).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// The admissibility relation fails at the given vertex.
    #[error("representation is not admissible at vertex {vertex}")]
    NotAdmissible { vertex: usize },

    /// The stability condition fails at the given vertex.
    #[error("representation is not stable at vertex {vertex}")]
    NotStable { vertex: usize },

    /// An operation that requires Δ = 0 received a representation with Δ ≠ 0.
    #[error("operation requires Δ = 0, but Δ_{shadow} is nonzero")]
    DeltaNonzero { shadow: usize },

    /// A two-row-only operation received a partition with more rows.
    #[error("operation is defined only for two-row partitions, got {0:?}")]
    NotTwoRow(Vec<usize>),

    /// Flag-side classification requires a flag fixed by the nilpotent.
    #[error("flag is not compatible with the nilpotent (x·F_{level} ⊄ F_{})", .level - 1)]
    NotSpringerFlag { level: usize },

    /// Internal guard: a computed flag step has the wrong dimension.
    #[error("flag space F_{level} has dimension {got}, expected {expected}")]
    FlagDimension {
        level: usize,
        expected: usize,
        got: usize,
    },

    /// A framing composite was requested at a shadow index with d_j = 0.
    #[error("no framing space at shadow index {index} (d = 0)")]
    MissingShadow { index: usize },

    /// An invalid cup diagram (crossing cups, ray under a cup, bad vertices).
    #[error("invalid cup diagram: {0}")]
    BadCupDiagram(String),

    /// The rejection sampler ran out of attempts.
    #[error("sampler exhausted after {attempts} attempts")]
    SamplerExhausted { attempts: usize },
}

/// Convenient alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
