//! Equivalence-preserving rewrites of transition graphs.

use crate::graph::TransitionGraph;
use crate::label::LabelSet;

/// Removes vertices that lie on no `(s,t)`-walk, together with their edges.
///
/// Surviving vertex ids are compacted in increasing order. The initial and
/// terminal vertices are always kept; if the terminal is unreachable the
/// result has no edges.
pub fn trim(g: &TransitionGraph) -> TransitionGraph {
    let fwd = g.reachable_from(g.initial, |_| true);
    let bwd = g.reaching(g.terminal, |_| true);
    let keep: Vec<bool> = (0..g.vertex_count)
        .map(|v| (fwd[v] && bwd[v]) || v == g.initial || v == g.terminal)
        .collect();
    let mut remap = vec![usize::MAX; g.vertex_count];
    let mut next = 0;
    for v in 0..g.vertex_count {
        if keep[v] {
            remap[v] = next;
            next += 1;
        }
    }
    let mut out = TransitionGraph::new(g.universe_size, next, remap[g.initial], remap[g.terminal]);
    for e in &g.edges {
        if fwd[e.source] && bwd[e.target] {
            out.add_edge(remap[e.source], remap[e.target], e.label.clone());
        }
    }
    out
}

/// Replaces every label with two or more variables by a chain of singleton
/// edges in increasing variable order.
///
/// Edges that need no change keep their relative order; the chain edges
/// follow in creation order, with fresh vertices appended after existing ids.
pub fn normalize_singletons(g: &TransitionGraph) -> TransitionGraph {
    let mut out = TransitionGraph::new(g.universe_size, g.vertex_count, g.initial, g.terminal);
    let mut chains = Vec::new();
    for e in &g.edges {
        if e.label.len() <= 1 {
            out.add_edge(e.source, e.target, e.label.clone());
        } else {
            chains.push(e);
        }
    }
    for e in chains {
        let vars: Vec<usize> = e.label.iter().collect();
        let mut at = e.source;
        for (k, &a) in vars.iter().enumerate() {
            let to = if k + 1 == vars.len() {
                e.target
            } else {
                out.add_vertex()
            };
            out.add_edge(at, to, LabelSet::singleton(a));
            at = to;
        }
    }
    out
}

/// The walk-length bound used by [`to_dag`]: `(|U| + 1) * |V|`.
pub fn walk_bound(g: &TransitionGraph) -> usize {
    (g.universe_size + 1) * g.vertex_count
}

/// An equivalent acyclic graph accepting the label sets of all `(s,t)`-walks.
///
/// Cyclic input is unrolled into `L + 1` layers, `L` = [`walk_bound`], with
/// every edge copied between consecutive layers and empty skip edges between
/// consecutive copies of the terminal; the result is then trimmed. Acyclic
/// input is only trimmed.
pub fn to_dag(g: &TransitionGraph) -> TransitionGraph {
    if g.is_dag() {
        return trim(g);
    }
    let n = g.vertex_count;
    let layers = walk_bound(g);
    let id = |v: usize, k: usize| k * n + v;
    let mut out = TransitionGraph::new(g.universe_size, (layers + 1) * n, id(g.initial, 0), id(g.terminal, layers));
    for k in 0..layers {
        for e in &g.edges {
            out.add_edge(id(e.source, k), id(e.target, k + 1), e.label.clone());
        }
        out.add_edge(id(g.terminal, k), id(g.terminal, k + 1), LabelSet::new());
    }
    trim(&out)
}
