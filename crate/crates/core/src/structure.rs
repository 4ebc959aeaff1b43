//! Structural checkers for closed transition graphs over pair-indexed
//! universes.
//!
//! When a closed graph accepts only P3-free label graphs, every edge label
//! is P3-free and the maximal cliques of a path prefix and of the next edge
//! are pairwise disjoint or nested. When it accepts only clique graphs,
//! every edge label and every prefix label is a clique graph and the
//! non-trivial cliques met along a path form a chain under inclusion.
//! These checkers verify those statements path by path under a state
//! budget and return every counterexample found.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::closure::require_closed;
use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::pairs::{vertices_for_universe, LabelGraph};
use crate::semantics::{enumerate_accepted_with_budget, DEFAULT_STATE_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureFamily {
    P3Free,
    Clique,
}

impl fmt::Display for StructureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureFamily::P3Free => "p3f",
            StructureFamily::Clique => "clique",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preconditions {
    Enforce,
    /// Run the structural checks on any trimmed DAG; useful to locate the
    /// offending edge in a graph that fails the preconditions.
    Skip,
}

#[derive(Clone, Copy, Debug)]
pub struct StructureOptions {
    pub preconditions: Preconditions,
    pub budget: usize,
}

impl Default for StructureOptions {
    fn default() -> Self {
        StructureOptions {
            preconditions: Preconditions::Enforce,
            budget: DEFAULT_STATE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    /// An edge label is not of the required shape.
    EdgeLabel { edge: usize, label: LabelSet },
    /// The label set of an `(s,x)`-path is not of the required shape.
    PrefixLabel { path: Vec<usize>, label: LabelSet },
    /// A maximal clique of a prefix and one of the next edge overlap
    /// without being nested (or, for clique graphs, are not nested).
    Incomparable {
        path: Vec<usize>,
        edge: usize,
        prefix_clique: Vec<usize>,
        edge_clique: Vec<usize>,
    },
    /// Two edge cliques on one path are not nested.
    BrokenChain {
        path: Vec<usize>,
        earlier: Vec<usize>,
        later: Vec<usize>,
    },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::EdgeLabel { edge, label } => {
                write!(f, "edge {edge}: label graph {label} has the wrong shape")
            }
            StructureViolation::PrefixLabel { path, label } => {
                write!(f, "prefix {path:?}: label graph {label} has the wrong shape")
            }
            StructureViolation::Incomparable {
                path,
                edge,
                prefix_clique,
                edge_clique,
            } => write!(
                f,
                "prefix {path:?} then edge {edge}: cliques {prefix_clique:?} and {edge_clique:?} are incomparable"
            ),
            StructureViolation::BrokenChain { path, earlier, later } => write!(
                f,
                "path {path:?}: cliques {earlier:?} and {later:?} are not nested"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub family: StructureFamily,
    pub edges_checked: usize,
    pub states_checked: usize,
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_p3free_structure(g: &TransitionGraph) -> Result<StructureReport> {
    check_structure(g, StructureFamily::P3Free, StructureOptions::default())
}

pub fn check_clique_structure(g: &TransitionGraph) -> Result<StructureReport> {
    check_structure(g, StructureFamily::Clique, StructureOptions::default())
}

type Clique = Vec<usize>;

fn cliques_of(n: usize, set: &LabelSet) -> Option<Vec<Clique>> {
    LabelGraph::new(n, set).clique_components().ok()
}

fn shape_ok(family: StructureFamily, cliques: &Option<Vec<Clique>>) -> bool {
    match family {
        StructureFamily::P3Free => cliques.is_some(),
        StructureFamily::Clique => cliques.as_ref().is_some_and(|c| c.len() <= 1),
    }
}

fn nested(a: &[usize], b: &[usize]) -> bool {
    let contains = |big: &[usize], small: &[usize]| small.iter().all(|x| big.binary_search(x).is_ok());
    contains(a, b) || contains(b, a)
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_err())
}

pub fn check_structure(
    g: &TransitionGraph,
    family: StructureFamily,
    opts: StructureOptions,
) -> Result<StructureReport> {
    let order = g.require_trimmed_dag()?;
    let n = vertices_for_universe(g.universe_size).ok_or(Error::NotPairIndexed {
        universe: g.universe_size,
    })?;

    if opts.preconditions == Preconditions::Enforce {
        require_closed(g)?;
        let accepted = enumerate_accepted_with_budget(g, opts.budget)?;
        for set in accepted.iter() {
            let lg = LabelGraph::new(n, set);
            let ok = match family {
                StructureFamily::P3Free => lg.is_p3_free(),
                StructureFamily::Clique => lg.is_clique_graph(),
            };
            if !ok {
                let reason = match family {
                    StructureFamily::P3Free => "label graph contains an induced P3",
                    StructureFamily::Clique => "label graph is not a clique graph",
                };
                return Err(Error::FamilyPrecondition {
                    set: set.clone(),
                    reason: reason.to_string(),
                });
            }
        }
    }

    let mut violations = Vec::new();
    let edge_cliques: Vec<Option<Vec<Clique>>> = g.edges.iter().map(|e| cliques_of(n, &e.label)).collect();
    for (i, e) in g.edges.iter().enumerate() {
        if !shape_ok(family, &edge_cliques[i]) {
            violations.push(StructureViolation::EdgeLabel {
                edge: i,
                label: e.label.clone(),
            });
        }
    }

    // State: prefix label plus, for the chain condition, the edge cliques
    // met so far. Each state keeps the first path that reached it.
    type Key = (LabelSet, BTreeSet<Clique>);
    let out = g.out_edges();
    let mut states: Vec<HashMap<Key, Vec<usize>>> = vec![HashMap::new(); g.vertex_count];
    states[g.initial].insert((LabelSet::new(), BTreeSet::new()), Vec::new());
    let mut visited = 1usize;
    let mut bad_prefixes: BTreeSet<LabelSet> = BTreeSet::new();

    for &v in &order {
        let here = std::mem::take(&mut states[v]);
        let mut here: Vec<(Key, Vec<usize>)> = here.into_iter().collect();
        here.sort();
        for ((prefix, seen), path) in here {
            let prefix_cliques = cliques_of(n, &prefix);
            if !shape_ok(family, &prefix_cliques) {
                if bad_prefixes.insert(prefix.clone()) {
                    violations.push(StructureViolation::PrefixLabel {
                        path: path.clone(),
                        label: prefix.clone(),
                    });
                }
                continue;
            }
            let prefix_cliques = prefix_cliques.unwrap_or_default();
            for &ei in &out[v] {
                let e = &g.edges[ei];
                let Some(ecl) = &edge_cliques[ei] else { continue };
                for pc in &prefix_cliques {
                    for ec in ecl {
                        let ok = match family {
                            StructureFamily::P3Free => disjoint(pc, ec) || nested(pc, ec),
                            StructureFamily::Clique => nested(pc, ec),
                        };
                        if !ok {
                            violations.push(StructureViolation::Incomparable {
                                path: path.clone(),
                                edge: ei,
                                prefix_clique: pc.clone(),
                                edge_clique: ec.clone(),
                            });
                        }
                    }
                }
                let mut next_seen = seen.clone();
                if family == StructureFamily::Clique {
                    for ec in ecl {
                        let mut next_path = path.clone();
                        next_path.push(ei);
                        if let Some(earlier) = seen.iter().find(|a| !nested(a, ec)) {
                            violations.push(StructureViolation::BrokenChain {
                                path: next_path,
                                earlier: earlier.clone(),
                                later: ec.clone(),
                            });
                        }
                        next_seen.insert(ec.clone());
                    }
                }
                let key = (prefix.union(&e.label), next_seen);
                if let std::collections::hash_map::Entry::Vacant(slot) = states[e.target].entry(key) {
                    let mut next_path = path.clone();
                    next_path.push(ei);
                    slot.insert(next_path);
                    visited += 1;
                    if visited > opts.budget {
                        return Err(Error::BudgetExceeded { budget: opts.budget });
                    }
                }
            }
        }
    }

    Ok(StructureReport {
        family,
        edges_checked: g.edges.len(),
        states_checked: visited,
        violations,
    })
}
