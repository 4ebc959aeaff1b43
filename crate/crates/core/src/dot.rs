//! Graphviz export.
//!
//! The initial vertex is drawn as a box and the terminal as a double
//! circle; only those two get node lines. Output depends on nothing but
//! the input, so it is stable byte for byte.

use std::fmt::Write;

use crate::bp::BranchingProgram;
use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::pairs::{pair_of, vertices_for_universe};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LabelNaming {
    /// `{0,2,5}`
    #[default]
    Indices,
    /// `{0-1},{1-2}`: each variable as the vertex pair it stands for.
    Pairs,
}

struct Namer {
    pairs: Option<usize>,
}

impl Namer {
    fn new(universe: usize, naming: LabelNaming) -> Result<Self> {
        let pairs = match naming {
            LabelNaming::Indices => None,
            LabelNaming::Pairs => Some(vertices_for_universe(universe).ok_or(Error::NotPairIndexed { universe })?),
        };
        Ok(Namer { pairs })
    }

    fn variable(&self, i: usize) -> String {
        match self.pairs {
            Some(n) => {
                let (a, b) = pair_of(n, i);
                format!("{{{a}-{b}}}")
            }
            None => i.to_string(),
        }
    }

    fn label(&self, l: &LabelSet) -> String {
        let parts: Vec<String> = l.iter().map(|i| self.variable(i)).collect();
        match self.pairs {
            Some(_) if parts.is_empty() => "{}".into(),
            Some(_) => parts.join(","),
            None => format!("{{{}}}", parts.join(",")),
        }
    }
}

fn endpoints(out: &mut String, initial: usize, terminal: usize) {
    if initial == terminal {
        writeln!(out, "  {initial} [label=\"s=t\", shape=doubleoctagon];").unwrap();
    } else {
        writeln!(out, "  {initial} [label=\"s\", shape=box];").unwrap();
        writeln!(out, "  {terminal} [label=\"t\", shape=doublecircle];").unwrap();
    }
}

pub fn export_dot(g: &TransitionGraph, naming: LabelNaming) -> Result<String> {
    let namer = Namer::new(g.universe_size, naming)?;
    let mut out = String::from("digraph tg {\n");
    endpoints(&mut out, g.initial, g.terminal);
    for e in &g.edges {
        writeln!(out, "  {} -> {} [label=\"{}\"];", e.source, e.target, namer.label(&e.label)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn export_bp_dot(b: &BranchingProgram, naming: LabelNaming) -> Result<String> {
    let namer = Namer::new(b.variable_count, naming)?;
    let mut out = String::from("digraph nbp {\n");
    endpoints(&mut out, b.initial, b.terminal);
    for e in &b.edges {
        let sign = if e.literal.positive { "" } else { "¬" };
        writeln!(
            out,
            "  {} -> {} [label=\"{sign}x{}\"];",
            e.source,
            e.target,
            namer.variable(e.literal.var)
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
