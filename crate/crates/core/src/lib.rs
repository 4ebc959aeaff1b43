//! Transition graphs of Boolean functions.
//!
//! A transition graph is a directed multigraph with an initial vertex, a
//! terminal vertex and subsets of variable indices on its edges. It accepts
//! an assignment when some initial-to-terminal path collects exactly the
//! assignment's set of ones. The crate covers evaluation, equivalence
//! preserving transforms, label closure, the streaming and write-once
//! classes, explicit constructions, branching programs and an exhaustive
//! search for the fewest edges a function needs.

pub mod bp;
pub mod classes;
pub mod closure;
pub mod dot;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod label;
pub mod pairs;
pub mod par;
pub mod random;
pub mod report;
pub mod search;
pub mod semantics;
pub mod structure;
pub mod transform;

pub use error::{Error, Result};
pub use graph::{Edge, PathRef, TransitionGraph};
pub use label::{Assignment, LabelSet};
pub use par::Execution;
pub use semantics::{enumerate_accepted, equivalent, evaluate, AcceptedFamily};
