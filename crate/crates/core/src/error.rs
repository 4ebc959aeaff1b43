use thiserror::Error;

use crate::label::LabelSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is not acyclic")]
    NotDag,
    #[error("graph is not trimmed: vertex {vertex} does not lie on any (s,t)-walk")]
    NotTrimmed { vertex: usize },
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("universe mismatch: {left} vs {right} variables")]
    UniverseMismatch { left: usize, right: usize },
    #[error("invalid path: edge at position {position} does not start where the previous edge ends")]
    InvalidPath { position: usize },
    #[error("state budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("edge {edge} carries a label with more than one variable; normalize singletons first")]
    Unnormalized { edge: usize },
    #[error("graph is not write-once: edges {first} and {second} share a label and lie on a common path")]
    NotWriteOnce { first: usize, second: usize },
    #[error("branching program is not monotone: edge {edge} carries a negated literal")]
    NotMonotone { edge: usize },
    #[error("universe of {universe} variables is not pair-indexed")]
    NotPairIndexed { universe: usize },
    #[error("labeling is not closed (edge {edge} changes under closure)")]
    NotClosed { edge: usize },
    #[error("accepted set {set:?} violates the precondition: {reason}")]
    FamilyPrecondition { set: LabelSet, reason: String },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("line {line}, column {column}: {message}")]
    Format {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
