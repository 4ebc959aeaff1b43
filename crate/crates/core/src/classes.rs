//! Restricted graph classes: streaming, adaptively streaming, write-once.
//!
//! All checks expect a trimmed DAG whose labels are empty or singletons, so
//! that "some `(s,t)`-path uses `e1` and later `e2`" reduces to "the head
//! of `e1` reaches the tail of `e2`".

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::{Assignment, LabelSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_streaming_under_identity_order: bool,
    /// A variable order under which the graph is streaming, if one exists.
    pub adaptive_order: Option<Vec<usize>>,
    pub is_write_once: bool,
}

/// Max path-label cardinality from `s`; `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingFunction {
    pub values: Vec<Option<usize>>,
}

impl CountingFunction {
    pub fn value(&self, v: usize) -> Option<usize> {
        self.values[v]
    }
}

/// Per-edge variable of a normalized graph, after the usual checks.
struct Prepared<'a> {
    g: &'a TransitionGraph,
    order: Vec<usize>,
    vars: Vec<Option<usize>>,
    /// reach[v] = vertices reachable from v, v included
    reach: Vec<LabelSet>,
}

impl<'a> Prepared<'a> {
    fn new(g: &'a TransitionGraph) -> Result<Self> {
        let order = g.require_trimmed_dag()?;
        let mut vars = Vec::with_capacity(g.edges.len());
        for (i, e) in g.edges.iter().enumerate() {
            if e.label.len() > 1 {
                return Err(Error::Unnormalized { edge: i });
            }
            vars.push(e.label.iter().next());
        }
        let out = g.out_edges();
        let mut reach = vec![LabelSet::new(); g.vertex_count];
        for &v in order.iter().rev() {
            let mut r = LabelSet::singleton(v);
            for &ei in &out[v] {
                r.union_with(&reach[g.edges[ei].target]);
            }
            reach[v] = r;
        }
        Ok(Prepared { g, order, vars, reach })
    }

    /// Some path uses edge `a` and later edge `b`.
    fn before(&self, a: usize, b: usize) -> bool {
        a != b && self.reach[self.g.edges[a].target].contains(self.g.edges[b].source)
    }

    fn labeled_edges(&self) -> Vec<(usize, usize)> {
        self.vars
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| (i, v)))
            .collect()
    }

    fn write_once_conflict(&self) -> Option<(usize, usize)> {
        let labeled = self.labeled_edges();
        for (k, &(a, va)) in labeled.iter().enumerate() {
            for &(b, vb) in &labeled[k + 1..] {
                if va == vb && (self.before(a, b) || self.before(b, a)) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Whether no `(s,t)`-path carries the same variable twice.
pub fn is_write_once(g: &TransitionGraph) -> Result<bool> {
    Ok(Prepared::new(g)?.write_once_conflict().is_none())
}

pub fn classify(g: &TransitionGraph) -> Result<ClassificationReport> {
    let p = Prepared::new(g)?;
    let labeled = p.labeled_edges();
    let u = g.universe_size;

    let mut streaming = true;
    let mut arcs = vec![vec![false; u]; u];
    for &(a, va) in &labeled {
        for &(b, vb) in &labeled {
            if p.before(a, b) {
                arcs[va][vb] = true;
                if va >= vb {
                    streaming = false;
                }
            }
        }
    }

    // smallest-index-first topological order of the occurs-before digraph
    let mut indeg = vec![0usize; u];
    let mut self_arc = false;
    for (i, row) in arcs.iter().enumerate() {
        for (j, &arc) in row.iter().enumerate() {
            if arc {
                if i == j {
                    self_arc = true;
                } else {
                    indeg[j] += 1;
                }
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..u).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(u);
    while let Some(Reverse(i)) = heap.pop() {
        order.push(i);
        for j in 0..u {
            if arcs[i][j] && i != j {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
    }
    let write_once = p.write_once_conflict().is_none();
    let adaptive_order = (!self_arc && write_once && order.len() == u).then_some(order);

    Ok(ClassificationReport {
        is_streaming_under_identity_order: streaming,
        adaptive_order,
        is_write_once: write_once,
    })
}

/// A graph verified to be write-once, ready for repeated polynomial-time
/// evaluation.
pub struct WriteOnceGraph<'a> {
    prepared: Prepared<'a>,
}

impl<'a> WriteOnceGraph<'a> {
    pub fn new(g: &'a TransitionGraph) -> Result<Self> {
        let prepared = Prepared::new(g)?;
        if let Some((first, second)) = prepared.write_once_conflict() {
            return Err(Error::NotWriteOnce { first, second });
        }
        Ok(WriteOnceGraph { prepared })
    }

    /// The max-plus recurrence `#(s) = 0`, `#(v) = max (#(u) + |l(u,v)|)`
    /// over edges whose label lies inside `restriction`.
    pub fn counting_function(&self, restriction: &LabelSet) -> CountingFunction {
        let g = self.prepared.g;
        let mut values: Vec<Option<usize>> = vec![None; g.vertex_count];
        values[g.initial] = Some(0);
        let out = g.out_edges();
        for &v in &self.prepared.order {
            let Some(here) = values[v] else { continue };
            for &ei in &out[v] {
                let e = &g.edges[ei];
                if !e.label.is_subset(restriction) {
                    continue;
                }
                let cand = here + e.label.len();
                let slot = &mut values[e.target];
                if slot.is_none_or(|old| old < cand) {
                    *slot = Some(cand);
                }
            }
        }
        CountingFunction { values }
    }

    pub fn evaluate(&self, x: &Assignment) -> Result<bool> {
        let g = self.prepared.g;
        if x.len() != g.universe_size {
            return Err(Error::DimensionMismatch {
                expected: g.universe_size,
                found: x.len(),
            });
        }
        let units = x.unit_set();
        Ok(self.counting_function(&units).value(g.terminal) == Some(units.len()))
    }
}

pub fn counting_function(g: &TransitionGraph, restriction: &LabelSet) -> Result<CountingFunction> {
    Ok(WriteOnceGraph::new(g)?.counting_function(restriction))
}

/// Polynomial-time evaluation of a write-once graph: accept iff the
/// counting function restricted to `U_x` reaches `|U_x|` at the terminal.
pub fn evaluate_write_once(g: &TransitionGraph, x: &Assignment) -> Result<bool> {
    WriteOnceGraph::new(g)?.evaluate(x)
}
