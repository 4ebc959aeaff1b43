//! Exhaustive search for the smallest transition graph representing a
//! given function.
//!
//! Candidates are enumerated by edge count, then vertex count, then
//! lexicographically by canonical edge code, so the first witness found is
//! the least one in that order. For a fixed vertex count the space is split
//! by the first edge; partitions are independent and run in parallel under
//! [`Execution::Parallel`]. Every partition of a level runs to its own
//! first witness in both modes, so results and statistics do not depend on
//! the execution mode.

mod space;
mod uniform;

use std::sync::atomic::{AtomicBool, AtomicU64};

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::par::{self, Execution};
use crate::semantics::AcceptedFamily;

use space::{label_alphabet, Outcome, Shared, Space, Target};
pub use space::SearchStats;
pub use uniform::{verify_uniform_hardness, SubfamilyVerdict, UniformityReport};

/// Largest universe accepted by the search.
pub const MAX_SEARCH_UNIVERSE: usize = 16;
pub const DEFAULT_LABEL_CAP: usize = 3;
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 2_000_000_000;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub max_edges: usize,
    /// Largest label cardinality tried.
    pub label_cap: usize,
    /// Reject candidates that are not in canonical vertex numbering.
    pub canonicalize: bool,
    pub candidate_budget: u64,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(max_edges: usize) -> Self {
        SearchConfig {
            max_edges,
            label_cap: DEFAULT_LABEL_CAP,
            canonicalize: true,
            candidate_budget: DEFAULT_CANDIDATE_BUDGET,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// A witness of `minimal_size` edges was found.
    Found,
    /// No graph with at most `max_edges` edges represents the target.
    NotFound,
    /// The candidate budget ran out; only `exhausted_up_to` is reliable.
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSearchResult {
    pub target: AcceptedFamily,
    pub label_cap: usize,
    pub status: SearchStatus,
    pub minimal_size: Option<usize>,
    pub witness: Option<TransitionGraph>,
    /// Every candidate with at most this many edges was ruled out.
    pub exhausted_up_to: Option<usize>,
    /// Whether the label cap covers every accepted set, which makes the
    /// candidate space complete.
    pub exact: bool,
    pub stats: SearchStats,
}

/// The least edge count of a transition graph representing `target`,
/// searched up to `config.max_edges`.
pub fn min_dc(target: &AcceptedFamily, config: &SearchConfig) -> Result<MinSearchResult> {
    let universe = target.universe_size();
    if universe > MAX_SEARCH_UNIVERSE {
        return Err(Error::Parameter(format!(
            "search supports universes of at most {MAX_SEARCH_UNIVERSE} variables, got {universe}"
        )));
    }
    let masks: Vec<u64> = target
        .iter()
        .map(|s| s.to_mask().expect("universe fits in a word"))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let t = Target::new(universe, masks);
    let labels = label_alphabet(&t, config.label_cap);
    let mut result = MinSearchResult {
        target: target.clone(),
        label_cap: config.label_cap,
        status: SearchStatus::NotFound,
        minimal_size: None,
        witness: None,
        exhausted_up_to: None,
        exact: t.max_set_len as usize <= config.label_cap,
        stats: SearchStats::default(),
    };

    // no edges: the initial and terminal vertices are distinct, nothing is accepted
    if target.is_empty() {
        result.status = SearchStatus::Found;
        result.minimal_size = Some(0);
        result.witness = Some(TransitionGraph::new(universe, 2, 0, 1));
        return Ok(result);
    }
    result.exhausted_up_to = Some(0);

    let spent = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let shared = Shared {
        budget: config.candidate_budget,
        spent: &spent,
        abort: &abort,
    };

    for k in 1..=config.max_edges {
        for v in 2..=k + 1 {
            let space = Space::new(&t, &labels, v, k, config.canonicalize);
            let firsts = space.first_codes();
            let outcomes = par::map(config.execution, &firsts, |&first| {
                let mut stats = SearchStats::default();
                let outcome = space.explore(first, &shared, &mut stats);
                (outcome, stats)
            });
            let mut found = None;
            let mut aborted = false;
            for (outcome, stats) in outcomes {
                result.stats.merge(&stats);
                match outcome {
                    Outcome::Found(seq) if found.is_none() => found = Some(seq),
                    Outcome::Aborted => aborted = true,
                    _ => {}
                }
            }
            if let Some(seq) = found {
                result.status = SearchStatus::Found;
                result.minimal_size = Some(k);
                result.witness = Some(space.to_graph(&seq));
                return Ok(result);
            }
            if aborted || (spent.load(std::sync::atomic::Ordering::Relaxed) > config.candidate_budget && k < config.max_edges) {
                result.status = SearchStatus::BudgetExceeded;
                return Ok(result);
            }
        }
        result.exhausted_up_to = Some(k);
    }
    Ok(result)
}
