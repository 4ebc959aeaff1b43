//! Nondeterministic branching programs with literal-labeled edges.

use std::fmt;

use crate::error::{Error, Result};
use crate::label::Assignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn holds(&self, x: &Assignment) -> bool {
        x.get(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.positive { '+' } else { '-' }, self.var)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpEdge {
    pub source: usize,
    pub target: usize,
    pub literal: Literal,
}

/// A DAG whose edges are switched on by literals; it accepts `x` when the
/// switched-on edges connect the initial vertex to the terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingProgram {
    pub variable_count: usize,
    pub vertex_count: usize,
    pub initial: usize,
    pub terminal: usize,
    pub edges: Vec<BpEdge>,
}

impl BranchingProgram {
    pub fn new(variable_count: usize, vertex_count: usize, initial: usize, terminal: usize) -> Self {
        BranchingProgram {
            variable_count,
            vertex_count,
            initial,
            terminal,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, source: usize, target: usize, literal: Literal) {
        self.edges.push(BpEdge {
            source,
            target,
            literal,
        });
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.initial >= self.vertex_count || self.terminal >= self.vertex_count {
            return Err(Error::Invalid("initial or terminal vertex out of range".into()));
        }
        let mut indeg = vec![0usize; self.vertex_count];
        let mut out = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if e.source >= self.vertex_count || e.target >= self.vertex_count {
                return Err(Error::Invalid(format!("edge {i} references a vertex out of range")));
            }
            if e.literal.var >= self.variable_count {
                return Err(Error::Invalid(format!("edge {i} references variable {} out of range", e.literal.var)));
            }
            indeg[e.target] += 1;
            out[e.source].push(e.target);
        }
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if seen != self.vertex_count {
            return Err(Error::NotDag);
        }
        Ok(())
    }
}

/// Reachability of the terminal in the assignment graph `G_x`.
pub fn bp_evaluate(b: &BranchingProgram, x: &Assignment) -> Result<bool> {
    b.validate()?;
    if x.len() != b.variable_count {
        return Err(Error::DimensionMismatch {
            expected: b.variable_count,
            found: x.len(),
        });
    }
    let mut out = vec![Vec::new(); b.vertex_count];
    for e in &b.edges {
        if e.literal.holds(x) {
            out[e.source].push(e.target);
        }
    }
    let mut seen = vec![false; b.vertex_count];
    seen[b.initial] = true;
    let mut stack = vec![b.initial];
    while let Some(v) = stack.pop() {
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(seen[b.terminal])
}

pub fn bp_is_monotone(b: &BranchingProgram) -> bool {
    b.edges.iter().all(|e| e.literal.positive)
}
