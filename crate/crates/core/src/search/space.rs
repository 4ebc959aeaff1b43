//! Candidate space for exhaustive minimal-size search.
//!
//! A candidate with `V` vertices is a trimmed DAG numbered in topological
//! order, initial vertex `0`, terminal `V - 1`. Edges are codes
//! `(source, target, label)` sorted lexicographically, so a candidate is a
//! non-decreasing code sequence. In such a numbering a DAG is trimmed iff
//! every vertex but the initial has an in-edge and every vertex but the
//! terminal has an out-edge; the enumerator enforces this while it extends
//! the sequence.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::graph::TransitionGraph;
use crate::label::LabelSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Code {
    pub source: u8,
    pub target: u8,
    /// index into [`Space::labels`]
    pub label: u16,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Structurally valid candidates generated.
    pub candidates: u64,
    /// Candidates discarded before evaluation (non-canonical or bounded out).
    pub pruned: u64,
    /// Candidates whose accepted family was computed.
    pub evaluated: u64,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.candidates += other.candidates;
        self.pruned += other.pruned;
        self.evaluated += other.evaluated;
    }
}

/// Everything the enumerator needs about the target, as bitmasks.
pub(crate) struct Target {
    pub universe: usize,
    /// sorted accepted masks
    pub accepted: Vec<u64>,
    /// `downset[m]`: `m` is contained in some accepted mask
    pub downset: Vec<bool>,
    pub max_set_len: u32,
}

impl Target {
    pub fn new(universe: usize, accepted: Vec<u64>) -> Self {
        let mut downset = vec![false; 1 << universe];
        for &a in &accepted {
            // enumerate submasks of a
            let mut sub = a;
            loop {
                downset[sub as usize] = true;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & a;
            }
        }
        let max_set_len = accepted.iter().map(|a| a.count_ones()).max().unwrap_or(0);
        Target {
            universe,
            accepted,
            downset,
            max_set_len,
        }
    }
}

pub(crate) struct Space<'t> {
    pub target: &'t Target,
    pub vertices: usize,
    pub edges: usize,
    pub labels: Vec<u64>,
    pub codes: Vec<Code>,
    pub canonicalize: bool,
    /// interior vertex permutations for the canonicity test
    perms: Vec<Vec<u8>>,
}

/// Labels usable by some edge: subsets of accepted sets with at most
/// `label_cap` elements, ordered by size then mask.
pub(crate) fn label_alphabet(target: &Target, label_cap: usize) -> Vec<u64> {
    let mut labels: Vec<u64> = (0..1u64 << target.universe)
        .filter(|&m| target.downset[m as usize] && m.count_ones() as usize <= label_cap)
        .collect();
    labels.sort_by_key(|&m| (m.count_ones(), m));
    labels
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

const BUDGET_BATCH: u64 = 64;

pub(crate) enum Outcome {
    Found(Vec<Code>),
    Exhausted,
    Aborted,
}

pub(crate) struct Shared<'a> {
    pub budget: u64,
    pub spent: &'a AtomicU64,
    pub abort: &'a AtomicBool,
}

impl<'t> Space<'t> {
    pub fn new(target: &'t Target, labels: &[u64], vertices: usize, edges: usize, canonicalize: bool) -> Self {
        let mut codes = Vec::new();
        for u in 0..vertices {
            for v in u + 1..vertices {
                for l in 0..labels.len() {
                    codes.push(Code {
                        source: u as u8,
                        target: v as u8,
                        label: l as u16,
                    });
                }
            }
        }
        let interior: Vec<u8> = (1..vertices.saturating_sub(1) as u8).collect();
        let perms = if canonicalize && vertices > 3 {
            permutations(&interior)
                .into_iter()
                .filter(|p| p.iter().enumerate().any(|(i, &x)| x != interior[i]))
                .collect()
        } else {
            Vec::new()
        };
        Space {
            target,
            vertices,
            edges,
            labels: labels.to_vec(),
            codes,
            canonicalize,
            perms,
        }
    }

    /// Indices of the codes that may start a candidate (source `0`).
    pub fn first_codes(&self) -> Vec<usize> {
        (0..self.codes.len()).filter(|&i| self.codes[i].source == 0).collect()
    }

    /// Explores all candidates whose first code is `codes[first]`, in
    /// lexicographic order, stopping at the first witness.
    pub fn explore(&self, first: usize, shared: &Shared<'_>, stats: &mut SearchStats) -> Outcome {
        let mut seq = Vec::with_capacity(self.edges);
        let mut indeg = vec![0u8; self.vertices];
        let code = self.codes[first];
        seq.push(code);
        indeg[code.target as usize] += 1;
        let before = stats.candidates;
        let outcome = self.dfs(first, &mut seq, &mut indeg, shared, stats);
        // candidates are charged in batches; flush the rest
        shared.spent.fetch_add((stats.candidates - before) % BUDGET_BATCH, Ordering::Relaxed);
        outcome
    }

    fn dfs(
        &self,
        from: usize,
        seq: &mut Vec<Code>,
        indeg: &mut [u8],
        shared: &Shared<'_>,
        stats: &mut SearchStats,
    ) -> Outcome {
        let last_source = seq.last().map(|c| c.source as usize).unwrap_or(0);
        if seq.len() == self.edges {
            if last_source + 2 != self.vertices {
                return Outcome::Exhausted;
            }
            stats.candidates += 1;
            if stats.candidates.is_multiple_of(BUDGET_BATCH) {
                if shared.abort.load(Ordering::Relaxed) {
                    return Outcome::Aborted;
                }
                let spent = shared.spent.fetch_add(BUDGET_BATCH, Ordering::Relaxed) + BUDGET_BATCH;
                if spent > shared.budget {
                    shared.abort.store(true, Ordering::Relaxed);
                    return Outcome::Aborted;
                }
            }
            return match self.check(seq, stats) {
                true => Outcome::Found(seq.clone()),
                false => Outcome::Exhausted,
            };
        }
        let remaining = self.edges - seq.len();
        for ci in from..self.codes.len() {
            let code = self.codes[ci];
            let u = code.source as usize;
            if u > last_source + 1 {
                break;
            }
            if u == last_source + 1 && indeg[u] == 0 {
                break;
            }
            // every source vertex after u still needs an out-edge
            if remaining < self.vertices - 1 - u {
                continue;
            }
            seq.push(code);
            indeg[code.target as usize] += 1;
            let r = self.dfs(ci, seq, indeg, shared, stats);
            indeg[code.target as usize] -= 1;
            seq.pop();
            match r {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    fn is_canonical(&self, seq: &[Code]) -> bool {
        let last = (self.vertices - 1) as u8;
        let mut relabeled = Vec::with_capacity(seq.len());
        'perm: for p in &self.perms {
            let map = |v: u8| if v == 0 || v == last { v } else { p[v as usize - 1] };
            relabeled.clear();
            for c in seq {
                let (s, t) = (map(c.source), map(c.target));
                if s >= t {
                    continue 'perm;
                }
                relabeled.push(Code {
                    source: s,
                    target: t,
                    label: c.label,
                });
            }
            relabeled.sort_unstable();
            if relabeled.as_slice() < seq {
                return false;
            }
        }
        true
    }

    /// Upper bound on the size of any path label: the heaviest path with
    /// edge weight `|label|`.
    fn heaviest_path(&self, seq: &[Code]) -> u32 {
        let mut best = vec![0u32; self.vertices];
        for c in seq {
            let w = best[c.source as usize] + self.labels[c.label as usize].count_ones();
            let slot = &mut best[c.target as usize];
            *slot = (*slot).max(w);
        }
        best[self.vertices - 1]
    }

    fn check(&self, seq: &[Code], stats: &mut SearchStats) -> bool {
        if self.canonicalize && !self.is_canonical(seq) {
            stats.pruned += 1;
            return false;
        }
        if self.heaviest_path(seq) < self.target.max_set_len {
            stats.pruned += 1;
            return false;
        }
        stats.evaluated += 1;
        let mut sets: Vec<Vec<u64>> = vec![Vec::new(); self.vertices];
        sets[0].push(0);
        let mut i = 0;
        for u in 0..self.vertices - 1 {
            let here = std::mem::take(&mut sets[u]);
            while i < seq.len() && seq[i].source as usize == u {
                let c = seq[i];
                let label = self.labels[c.label as usize];
                for &m in &here {
                    let next = m | label;
                    // a trimmed prefix extends to an accepted path, so its
                    // label must fit inside some accepted set
                    if !self.target.downset[next as usize] {
                        return false;
                    }
                    let slot = &mut sets[c.target as usize];
                    if !slot.contains(&next) {
                        slot.push(next);
                    }
                }
                i += 1;
            }
        }
        let reached = &mut sets[self.vertices - 1];
        reached.sort_unstable();
        *reached == self.target.accepted
    }

    pub fn to_graph(&self, seq: &[Code]) -> TransitionGraph {
        let mut g = TransitionGraph::new(self.target.universe, self.vertices, 0, self.vertices - 1);
        for c in seq {
            g.add_edge(c.source as usize, c.target as usize, LabelSet::from_mask(self.labels[c.label as usize]));
        }
        g
    }
}
