//! The closure of a labeling function.
//!
//! `closure(e)` for `e = (u,v)` adds to `l(e)` every variable that occurs on
//! every `(s,u)`-path and every variable that occurs on every `(v,t)`-path.
//! A variable `a` occurs on every `(s,u)`-path exactly when `u` becomes
//! unreachable from `s` once all edges carrying `a` are deleted, so each
//! variable costs two reachability sweeps.

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::par::{self, Execution};

/// Per-edge variables forced by the prefix or suffix of every path through it.
fn forced_labels(g: &TransitionGraph, exec: Execution) -> Result<Vec<LabelSet>> {
    g.require_trimmed_dag()?;
    let mut vars = LabelSet::new();
    for e in &g.edges {
        vars.union_with(&e.label);
    }
    let vars: Vec<usize> = vars.iter().collect();
    let per_var = par::map(exec, &vars, |&a| {
        let fwd = g.reachable_from(g.initial, |ei| !g.edges[ei].label.contains(a));
        let bwd = g.reaching(g.terminal, |ei| !g.edges[ei].label.contains(a));
        g.edges
            .iter()
            .map(|e| !fwd[e.source] || !bwd[e.target])
            .collect::<Vec<bool>>()
    });
    let mut out: Vec<LabelSet> = g.edges.iter().map(|e| e.label.clone()).collect();
    for (&a, forced) in vars.iter().zip(per_var) {
        for (label, f) in out.iter_mut().zip(forced) {
            if f {
                label.insert(a);
            }
        }
    }
    Ok(out)
}

/// Same vertices and edges with every label replaced by its closure.
///
/// The input must be a trimmed DAG; on dead or unreachable vertices the
/// universal quantification over paths would be vacuous.
pub fn closure(g: &TransitionGraph) -> Result<TransitionGraph> {
    closure_with(g, Execution::default())
}

pub fn closure_with(g: &TransitionGraph, exec: Execution) -> Result<TransitionGraph> {
    let labels = forced_labels(g, exec)?;
    let mut out = g.clone();
    for (e, l) in out.edges.iter_mut().zip(labels) {
        e.label = l;
    }
    Ok(out)
}

/// The first edge whose label changes under closure, if any.
pub fn first_unclosed_edge(g: &TransitionGraph) -> Result<Option<usize>> {
    let labels = forced_labels(g, Execution::Sequential)?;
    Ok(g.edges.iter().zip(&labels).position(|(e, l)| &e.label != l))
}

pub fn is_closed(g: &TransitionGraph) -> Result<bool> {
    Ok(first_unclosed_edge(g)?.is_none())
}

pub(crate) fn require_closed(g: &TransitionGraph) -> Result<()> {
    match first_unclosed_edge(g)? {
        Some(edge) => Err(Error::NotClosed { edge }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain01() -> TransitionGraph {
        let mut g = TransitionGraph::new(2, 3, 0, 2);
        g.add_edge(0, 1, LabelSet::from([0]));
        g.add_edge(1, 2, LabelSet::from([1]));
        g
    }

    #[test]
    fn chain_labels_merge() {
        let c = closure(&chain01()).unwrap();
        assert!(c.edges.iter().all(|e| e.label == LabelSet::from([0, 1])));
        assert!(!is_closed(&chain01()).unwrap());
        assert!(is_closed(&c).unwrap());
    }

    #[test]
    fn parallel_edges_unchanged() {
        let g = TransitionGraph::trivial(2, &[LabelSet::from([0]), LabelSet::from([1])]);
        assert_eq!(closure(&g).unwrap(), g);
    }

    #[test]
    fn single_edge_is_closed() {
        let g = TransitionGraph::trivial(1, &[LabelSet::from([0])]);
        assert!(is_closed(&g).unwrap());
    }

    #[test]
    fn idempotent_on_example() {
        let g = crate::generators::threshold_graph(4, 2).unwrap();
        let c = closure(&g).unwrap();
        assert_eq!(closure(&c).unwrap(), c);
    }

    #[test]
    fn refuses_untrimmed_or_cyclic() {
        let mut g = chain01();
        g.vertex_count = 4;
        assert_eq!(closure(&g), Err(Error::NotTrimmed { vertex: 3 }));
        let mut c = chain01();
        c.add_edge(1, 0, LabelSet::new());
        assert_eq!(closure(&c), Err(Error::NotDag));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = crate::generators::eq_graph(2).unwrap();
        assert_eq!(
            closure_with(&g, Execution::Sequential).unwrap(),
            closure_with(&g, Execution::Parallel).unwrap()
        );
    }
}
