//! What a transition graph computes: evaluation, accepted-set enumeration
//! and equivalence.
//!
//! Semantics are defined on DAGs. A cyclic graph has to go through
//! [`crate::transform::to_dag`] first, which fixes its walk semantics.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::{Assignment, LabelSet};

/// Default cap on visited `(vertex, collected-set)` states.
pub const DEFAULT_STATE_BUDGET: usize = 10_000_000;

/// The set `f^{-1}(1)` of a Boolean function, as unit sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AcceptedFamily {
    universe_size: usize,
    accepted: BTreeSet<LabelSet>,
}

impl AcceptedFamily {
    pub fn empty(universe_size: usize) -> Self {
        AcceptedFamily {
            universe_size,
            accepted: BTreeSet::new(),
        }
    }

    pub fn from_sets(universe_size: usize, sets: impl IntoIterator<Item = LabelSet>) -> Result<Self> {
        let mut f = Self::empty(universe_size);
        for s in sets {
            f.insert(s)?;
        }
        Ok(f)
    }

    /// All assignments over `universe_size` variables satisfying `pred`.
    pub fn from_predicate(universe_size: usize, pred: impl Fn(&LabelSet) -> bool) -> Self {
        assert!(universe_size < 64, "truth-table enumeration limited to 63 variables");
        let accepted = (0..1u64 << universe_size)
            .map(LabelSet::from_mask)
            .filter(|s| pred(s))
            .collect();
        AcceptedFamily {
            universe_size,
            accepted,
        }
    }

    /// Inserts a set; returns whether it was new.
    pub fn insert(&mut self, set: LabelSet) -> Result<bool> {
        if set.bound() > self.universe_size {
            return Err(Error::DimensionMismatch {
                expected: self.universe_size,
                found: set.bound(),
            });
        }
        Ok(self.accepted.insert(set))
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.accepted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accepted.is_empty()
    }

    pub fn contains(&self, set: &LabelSet) -> bool {
        self.accepted.contains(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LabelSet> {
        self.accepted.iter()
    }

    pub fn sets(&self) -> &BTreeSet<LabelSet> {
        &self.accepted
    }

    /// Union of all accepted sets.
    pub fn support(&self) -> LabelSet {
        let mut u = LabelSet::new();
        for s in &self.accepted {
            u.union_with(s);
        }
        u
    }

    /// Members not in `other`, over the same universe.
    pub fn complement_within(&self, other: &AcceptedFamily) -> AcceptedFamily {
        AcceptedFamily {
            universe_size: self.universe_size,
            accepted: self.accepted.difference(&other.accepted).cloned().collect(),
        }
    }

    /// The trivial representation: one `(s,t)` edge per accepted set.
    pub fn trivial_graph(&self) -> TransitionGraph {
        TransitionGraph::trivial(self.universe_size, &self.accepted)
    }
}

impl<'a> IntoIterator for &'a AcceptedFamily {
    type Item = &'a LabelSet;
    type IntoIter = std::collections::btree_set::Iter<'a, LabelSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.accepted.iter()
    }
}

/// Forward propagation of collected label sets in topological order.
///
/// `allow` filters edges; `prune` rejects partial label sets that cannot
/// lead anywhere useful. Returns the label sets that reach the terminal.
fn propagate(
    g: &TransitionGraph,
    budget: usize,
    allow: impl Fn(&LabelSet) -> bool,
    prune: impl Fn(&LabelSet) -> bool,
) -> Result<HashSet<LabelSet>> {
    g.ensure_valid()?;
    let order = g.topological_order().ok_or(Error::NotDag)?;
    let out = g.out_edges();
    let mut states: Vec<HashSet<LabelSet>> = vec![HashSet::new(); g.vertex_count];
    states[g.initial].insert(LabelSet::new());
    let mut visited = 1usize;
    for &v in &order {
        if states[v].is_empty() {
            continue;
        }
        let here = if v == g.terminal {
            states[v].clone()
        } else {
            std::mem::take(&mut states[v])
        };
        for &ei in &out[v] {
            let e = &g.edges[ei];
            if !allow(&e.label) {
                continue;
            }
            for s in &here {
                let next = s.union(&e.label);
                if prune(&next) {
                    continue;
                }
                if states[e.target].insert(next) {
                    visited += 1;
                    if visited > budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                }
            }
        }
    }
    Ok(std::mem::take(&mut states[g.terminal]))
}

/// Whether some `(s,t)`-path of the DAG `g` has label set exactly `U_x`.
///
/// Edges whose label is not contained in `U_x` are ignored, and states
/// `(vertex, collected subset)` are memoized. The worst case is exponential
/// in `|U_x|`; the problem is NP-complete in general.
pub fn evaluate(g: &TransitionGraph, x: &Assignment) -> Result<bool> {
    evaluate_with_budget(g, x, DEFAULT_STATE_BUDGET)
}

pub fn evaluate_with_budget(g: &TransitionGraph, x: &Assignment, budget: usize) -> Result<bool> {
    if x.len() != g.universe_size {
        return Err(Error::DimensionMismatch {
            expected: g.universe_size,
            found: x.len(),
        });
    }
    let units = x.unit_set();
    let reached = propagate(g, budget, |l| l.is_subset(&units), |_| false)?;
    Ok(reached.contains(&units))
}

/// `{ l(P) : P an (s,t)-path }` for a DAG.
pub fn enumerate_accepted(g: &TransitionGraph) -> Result<AcceptedFamily> {
    enumerate_accepted_with_budget(g, DEFAULT_STATE_BUDGET)
}

pub fn enumerate_accepted_with_budget(g: &TransitionGraph, budget: usize) -> Result<AcceptedFamily> {
    let reached = propagate(g, budget, |_| true, |_| false)?;
    Ok(AcceptedFamily {
        universe_size: g.universe_size,
        accepted: reached.into_iter().collect(),
    })
}

/// Whether two graphs represent the same function. Cyclic inputs are
/// converted with [`crate::transform::to_dag`] first.
pub fn equivalent(g1: &TransitionGraph, g2: &TransitionGraph) -> Result<bool> {
    if g1.universe_size != g2.universe_size {
        return Err(Error::UniverseMismatch {
            left: g1.universe_size,
            right: g2.universe_size,
        });
    }
    let f1 = enumerate_accepted(&*as_dag(g1)?)?;
    let f2 = enumerate_accepted(&*as_dag(g2)?)?;
    Ok(f1 == f2)
}

fn as_dag(g: &TransitionGraph) -> Result<std::borrow::Cow<'_, TransitionGraph>> {
    g.ensure_valid()?;
    Ok(if g.is_dag() {
        std::borrow::Cow::Borrowed(g)
    } else {
        std::borrow::Cow::Owned(crate::transform::to_dag(g))
    })
}

/// `g <= f`: every set accepted by `g` is accepted by `f`.
pub fn function_dominates(f: &AcceptedFamily, g: &AcceptedFamily) -> Result<bool> {
    if f.universe_size != g.universe_size {
        return Err(Error::UniverseMismatch {
            left: f.universe_size,
            right: g.universe_size,
        });
    }
    Ok(g.accepted.is_subset(&f.accepted))
}
