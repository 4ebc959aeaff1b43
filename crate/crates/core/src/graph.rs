//! The transition graph data model.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::label::LabelSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: LabelSet,
}

impl Edge {
    pub fn new(source: usize, target: usize, label: LabelSet) -> Self {
        Edge {
            source,
            target,
            label,
        }
    }
}

/// A directed multigraph with an initial vertex, a terminal vertex and
/// subset-valued edge labels. Its size is the number of edge records.
///
/// Edge order is significant: it is the identity of parallel edges and
/// fixes the order of every traversal and of the printed form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransitionGraph {
    pub universe_size: usize,
    pub vertex_count: usize,
    pub initial: usize,
    pub terminal: usize,
    pub edges: Vec<Edge>,
}

/// A sequence of indices into a graph's edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathRef {
    pub edge_indices: Vec<usize>,
}

impl PathRef {
    pub fn new(edge_indices: Vec<usize>) -> Self {
        PathRef { edge_indices }
    }
}

/// A broken invariant found by [`TransitionGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InitialOutOfRange { initial: usize },
    TerminalOutOfRange { terminal: usize },
    EdgeVertexOutOfRange { edge: usize, vertex: usize },
    LabelOutOfRange { edge: usize, index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitialOutOfRange { initial } => {
                write!(f, "initial vertex {initial} out of range")
            }
            Violation::TerminalOutOfRange { terminal } => {
                write!(f, "terminal vertex {terminal} out of range")
            }
            Violation::EdgeVertexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge} references vertex {vertex} out of range")
            }
            Violation::LabelOutOfRange { edge, index } => {
                write!(f, "edge {edge} label contains variable {index} out of range")
            }
        }
    }
}

impl TransitionGraph {
    pub fn new(universe_size: usize, vertex_count: usize, initial: usize, terminal: usize) -> Self {
        TransitionGraph {
            universe_size,
            vertex_count,
            initial,
            terminal,
            edges: Vec::new(),
        }
    }

    /// The graph with one `(s,t)` edge per member of `sets`, labeled by it.
    pub fn trivial<'a>(universe_size: usize, sets: impl IntoIterator<Item = &'a LabelSet>) -> Self {
        let mut g = TransitionGraph::new(universe_size, 2, 0, 1);
        for set in sets {
            g.add_edge(0, 1, set.clone());
        }
        g
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, source: usize, target: usize, label: LabelSet) -> usize {
        self.edges.push(Edge::new(source, target, label));
        self.edges.len() - 1
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.initial >= self.vertex_count {
            out.push(Violation::InitialOutOfRange {
                initial: self.initial,
            });
        }
        if self.terminal >= self.vertex_count {
            out.push(Violation::TerminalOutOfRange {
                terminal: self.terminal,
            });
        }
        for (i, e) in self.edges.iter().enumerate() {
            for v in [e.source, e.target] {
                if v >= self.vertex_count {
                    out.push(Violation::EdgeVertexOutOfRange { edge: i, vertex: v });
                }
            }
            if let Some(index) = e.label.iter().find(|&a| a >= self.universe_size) {
                out.push(Violation::LabelOutOfRange { edge: i, index });
            }
        }
        out
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::Invalid(v.to_string())),
        }
    }

    pub fn label_set_of_path(&self, path: &PathRef) -> Result<LabelSet> {
        let mut out = LabelSet::new();
        let mut at: Option<usize> = None;
        for (position, &ei) in path.edge_indices.iter().enumerate() {
            let e = self
                .edges
                .get(ei)
                .ok_or(Error::InvalidPath { position })?;
            if at.is_some_and(|v| v != e.source) {
                return Err(Error::InvalidPath { position });
            }
            out.union_with(&e.label);
            at = Some(e.target);
        }
        Ok(out)
    }

    pub fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.source].push(i);
        }
        adj
    }

    pub fn in_edges(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.target].push(i);
        }
        adj
    }

    /// Kahn's algorithm; `None` if the graph has a cycle (loops included).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertex_count];
        for e in &self.edges {
            indeg[e.target] += 1;
        }
        let out = self.out_edges();
        let mut queue: VecDeque<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &ei in &out[v] {
                let w = self.edges[ei].target;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    pub fn is_dag(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices reachable from `from` using edges accepted by `keep`.
    pub fn reachable_from(&self, from: usize, keep: impl Fn(usize) -> bool) -> Vec<bool> {
        sweep(self.vertex_count, from, &self.out_edges(), |ei| {
            keep(ei).then_some(self.edges[ei].target)
        })
    }

    /// Vertices from which `to` is reachable using edges accepted by `keep`.
    pub fn reaching(&self, to: usize, keep: impl Fn(usize) -> bool) -> Vec<bool> {
        sweep(self.vertex_count, to, &self.in_edges(), |ei| {
            keep(ei).then_some(self.edges[ei].source)
        })
    }

    /// The first vertex other than `s` and `t` that lies on no
    /// `(s,t)`-walk, if any. The endpoints are exempt so that a graph
    /// accepting nothing can still be trimmed.
    pub fn first_untrimmed_vertex(&self) -> Option<usize> {
        let fwd = self.reachable_from(self.initial, |_| true);
        let bwd = self.reaching(self.terminal, |_| true);
        (0..self.vertex_count)
            .find(|&v| v != self.initial && v != self.terminal && !(fwd[v] && bwd[v]))
    }

    pub fn is_trimmed(&self) -> bool {
        self.first_untrimmed_vertex().is_none()
    }

    /// Checks validity, acyclicity and trimness, returning a topological order.
    pub(crate) fn require_trimmed_dag(&self) -> Result<Vec<usize>> {
        self.ensure_valid()?;
        let order = self.topological_order().ok_or(Error::NotDag)?;
        if let Some(vertex) = self.first_untrimmed_vertex() {
            return Err(Error::NotTrimmed { vertex });
        }
        Ok(order)
    }

    pub fn max_label_len(&self) -> usize {
        self.edges.iter().map(|e| e.label.len()).max().unwrap_or(0)
    }
}

fn sweep(
    n: usize,
    start: usize,
    adj: &[Vec<usize>],
    step: impl Fn(usize) -> Option<usize>,
) -> Vec<bool> {
    let mut seen = vec![false; n];
    if start >= n {
        return seen;
    }
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &ei in &adj[v] {
            if let Some(w) = step(ei) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen
}
