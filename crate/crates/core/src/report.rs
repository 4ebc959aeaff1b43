//! Construction sizes next to accepted-set counts for the named families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::classes::classify;
use crate::error::{Error, Result};
use crate::generators::{
    clique_indicator_graph, eq_graph, not_p3f_graph, p3f_branching_program, slice_graph,
    symmetric_graph, threshold_graph, xor_graph,
};
use crate::graph::TransitionGraph;
use crate::pairs::pair_universe;
use crate::transform::{normalize_singletons, trim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportFamily {
    Xor,
    Threshold(usize),
    Slice(usize),
    Symmetric(BTreeSet<usize>),
    Eq,
    Clique,
    NotP3f,
    P3fBp,
}

impl FromStr for ReportFamily {
    type Err = Error;

    /// `xor`, `thr:k`, `slice:k`, `sym:c1,c2,...`, `eq`, `clique`,
    /// `not-p3f`, `p3f-bp`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unknown family `{s}`"));
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let number = |a: Option<&str>| -> Result<usize> { a.and_then(|a| a.parse().ok()).ok_or_else(bad) };
        Ok(match name {
            "xor" if arg.is_none() => ReportFamily::Xor,
            "eq" if arg.is_none() => ReportFamily::Eq,
            "clique" if arg.is_none() => ReportFamily::Clique,
            "not-p3f" if arg.is_none() => ReportFamily::NotP3f,
            "p3f-bp" if arg.is_none() => ReportFamily::P3fBp,
            "thr" => ReportFamily::Threshold(number(arg)?),
            "slice" => ReportFamily::Slice(number(arg)?),
            "sym" => {
                let arg = arg.ok_or_else(bad)?;
                let counts = if arg.is_empty() {
                    BTreeSet::new()
                } else {
                    arg.split(',')
                        .map(|c| c.parse().map_err(|_| bad()))
                        .collect::<Result<_>>()?
                };
                ReportFamily::Symmetric(counts)
            }
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for ReportFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportFamily::Xor => write!(f, "xor"),
            ReportFamily::Threshold(k) => write!(f, "thr:{k}"),
            ReportFamily::Slice(k) => write!(f, "slice:{k}"),
            ReportFamily::Symmetric(c) => {
                let list: Vec<String> = c.iter().map(|c| c.to_string()).collect();
                write!(f, "sym:{}", list.join(","))
            }
            ReportFamily::Eq => write!(f, "eq"),
            ReportFamily::Clique => write!(f, "clique"),
            ReportFamily::NotP3f => write!(f, "not-p3f"),
            ReportFamily::P3fBp => write!(f, "p3f-bp"),
        }
    }
}

/// Class flags of a transition graph after normalization. Branching
/// programs have none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFlags {
    pub streaming: bool,
    pub adaptive: bool,
    pub write_once: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub family: ReportFamily,
    pub n: usize,
    pub universe: usize,
    /// Edge count of the construction.
    pub size: usize,
    /// `|f^{-1}(1)|`, from a closed form.
    pub accepted: u128,
    pub classes: Option<ClassFlags>,
}

impl ReportRow {
    pub const HEADER: &'static str = "family\tn\tuniverse\tsize\taccepted\tstreaming\tadaptive\twrite_once";
}

impl fmt::Display for ReportRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.family, self.n, self.universe, self.size, self.accepted
        )?;
        match &self.classes {
            Some(c) => write!(f, "\t{}\t{}\t{}", c.streaming, c.adaptive, c.write_once),
            None => write!(f, "\t-\t-\t-"),
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Set partitions of an `n`-element set, i.e. P3-free graphs on `n` vertices.
fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

fn flags(g: &TransitionGraph) -> Result<ClassFlags> {
    let c = classify(&trim(&normalize_singletons(g)))?;
    Ok(ClassFlags {
        streaming: c.is_streaming_under_identity_order,
        adaptive: c.adaptive_order.is_some(),
        write_once: c.is_write_once,
    })
}

/// Largest universe whose accepted count still fits in a `u128`.
const MAX_REPORT_UNIVERSE: usize = 127;

pub fn upper_bound_report(family: &ReportFamily, n: usize) -> Result<ReportRow> {
    let (graph, universe, size, accepted) = match family {
        ReportFamily::Xor => {
            let g = xor_graph(n)?;
            (Some(g.clone()), n, g.size(), if n == 0 { 0 } else { 1u128 << (n - 1) })
        }
        ReportFamily::Threshold(k) => {
            let g = threshold_graph(n, *k)?;
            (Some(g.clone()), n, g.size(), (*k..=n).map(|j| binomial(n, j)).sum())
        }
        ReportFamily::Slice(k) => {
            let g = slice_graph(n, *k)?;
            (Some(g.clone()), n, g.size(), binomial(n, *k))
        }
        ReportFamily::Symmetric(counts) => {
            let g = symmetric_graph(n, counts)?;
            (Some(g.clone()), n, g.size(), counts.iter().map(|&c| binomial(n, c)).sum())
        }
        ReportFamily::Eq => {
            let g = eq_graph(n)?;
            (Some(g.clone()), 4 * n, g.size(), binomial(2 * n, n))
        }
        ReportFamily::Clique => {
            let g = clique_indicator_graph(n)?;
            (Some(g.clone()), pair_universe(n), g.size(), (1u128 << n) - n as u128)
        }
        ReportFamily::NotP3f => {
            let u = pair_universe(n);
            if u > MAX_REPORT_UNIVERSE {
                return Err(Error::Parameter(format!("n = {n} is too large to count")));
            }
            let g = not_p3f_graph(n)?;
            (Some(g.clone()), u, g.size(), (1u128 << u) - bell(n))
        }
        ReportFamily::P3fBp => {
            let b = p3f_branching_program(n)?;
            (None, pair_universe(n), b.size(), bell(n))
        }
    };
    let classes = graph.as_ref().map(flags).transpose()?;
    Ok(ReportRow {
        family: family.clone(),
        n,
        universe,
        size,
        accepted,
        classes,
    })
}
