//! Seeded random instances for property suites.
//!
//! All generators take a caller-owned RNG; [`rng`] builds the one used
//! throughout from a 64-bit seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bp::{BranchingProgram, Literal};
use crate::generators::CnfFormula;
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::semantics::AcceptedFamily;
use crate::transform::trim;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each variable independently with probability `p`.
pub fn random_label<R: Rng>(rng: &mut R, universe: usize, p: f64) -> LabelSet {
    (0..universe).filter(|_| rng.gen_bool(p)).collect()
}

/// A trimmed DAG numbered in topological order with `s = 0`. A random
/// `(s,t)`-path is laid down first so the result is rarely empty; the
/// remaining edges go between random ordered vertex pairs.
pub fn random_trimmed_dag<R: Rng>(
    rng: &mut R,
    universe: usize,
    vertices: usize,
    edges: usize,
    label_density: f64,
) -> TransitionGraph {
    assert!(vertices >= 2);
    let mut g = TransitionGraph::new(universe, vertices, 0, vertices - 1);
    let mut at = 0;
    while at + 1 < vertices && g.size() < edges {
        let next = rng.gen_range(at + 1..vertices);
        g.add_edge(at, next, random_label(rng, universe, label_density));
        at = next;
    }
    while g.size() < edges {
        let u = rng.gen_range(0..vertices - 1);
        let v = rng.gen_range(u + 1..vertices);
        g.add_edge(u, v, random_label(rng, universe, label_density));
    }
    trim(&g)
}

/// Any directed multigraph: self-loops, cycles, `s = t` all allowed.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    universe: usize,
    vertices: usize,
    edges: usize,
    label_density: f64,
) -> TransitionGraph {
    assert!(vertices >= 1);
    let mut g = TransitionGraph::new(universe, vertices, rng.gen_range(0..vertices), rng.gen_range(0..vertices));
    for _ in 0..edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        g.add_edge(u, v, random_label(rng, universe, label_density));
    }
    g
}

/// A trimmed write-once DAG with empty or singleton labels.
///
/// Labels are assigned to the edges of a random trimmed DAG in random
/// order, each avoiding the variables already used on edges that share a
/// path with it; with probability `p_empty`, or when nothing is left, the
/// label is empty.
pub fn random_write_once<R: Rng>(
    rng: &mut R,
    universe: usize,
    vertices: usize,
    edges: usize,
    p_empty: f64,
) -> TransitionGraph {
    let mut g = random_trimmed_dag(rng, universe, vertices, edges, 0.0);
    let n = g.vertex_count;
    // reach[u][v]: v reachable from u, reflexive
    let mut reach = vec![vec![false; n]; n];
    let order = g.topological_order().expect("acyclic");
    let out = g.out_edges();
    for &u in order.iter().rev() {
        reach[u][u] = true;
        for &ei in &out[u] {
            let v = g.edges[ei].target;
            let row = reach[v].clone();
            for (dst, src) in reach[u].iter_mut().zip(row) {
                *dst |= src;
            }
        }
    }
    let mut idx: Vec<usize> = (0..g.edges.len()).collect();
    idx.shuffle(rng);
    let mut var: Vec<Option<usize>> = vec![None; g.edges.len()];
    for &e in &idx {
        if rng.gen_bool(p_empty) {
            continue;
        }
        let (s, t) = (g.edges[e].source, g.edges[e].target);
        let mut used = vec![false; universe];
        for (f, v) in var.iter().enumerate() {
            if let Some(v) = *v {
                let (fs, ft) = (g.edges[f].source, g.edges[f].target);
                if reach[ft][s] || reach[t][fs] {
                    used[v] = true;
                }
            }
        }
        let free: Vec<usize> = (0..universe).filter(|&v| !used[v]).collect();
        var[e] = free.choose(rng).copied();
    }
    for (e, v) in var.into_iter().enumerate() {
        g.edges[e].label = v.map(LabelSet::singleton).unwrap_or_default();
    }
    g
}

/// A layered branching program: `depth` layers of up to `width` vertices
/// between the initial and the terminal vertex, each possible edge between
/// consecutive layers present with probability `density`. With
/// `monotone`, every literal is positive.
pub fn random_bp<R: Rng>(
    rng: &mut R,
    variables: usize,
    depth: usize,
    width: usize,
    density: f64,
    monotone: bool,
) -> BranchingProgram {
    assert!(variables >= 1 && width >= 1);
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    let mut next = 1;
    for _ in 0..depth {
        let w = rng.gen_range(1..=width);
        layers.push((next..next + w).collect());
        next += w;
    }
    layers.push(vec![next]);
    let mut b = BranchingProgram::new(variables, next + 1, 0, next);
    for pair in layers.windows(2) {
        for &u in &pair[0] {
            for &v in &pair[1] {
                if rng.gen_bool(density) {
                    let var = rng.gen_range(0..variables);
                    let positive = monotone || rng.gen_bool(0.5);
                    b.add_edge(u, v, Literal { var, positive });
                }
            }
        }
    }
    b
}

/// Clauses of one to `max_len` distinct-variable literals.
pub fn random_cnf<R: Rng>(rng: &mut R, variables: usize, clauses: usize, max_len: usize) -> CnfFormula {
    assert!(variables >= 1 && max_len >= 1);
    let mut out = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let len = rng.gen_range(1..=max_len.min(variables));
        let mut vars: Vec<i64> = (1..=variables as i64).collect();
        vars.shuffle(rng);
        out.push(
            vars[..len]
                .iter()
                .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                .collect(),
        );
    }
    CnfFormula::new(variables, out).expect("literals in range")
}

/// Each of the `2^universe` sets independently with probability `p`.
pub fn random_family<R: Rng>(rng: &mut R, universe: usize, p: f64) -> AcceptedFamily {
    assert!(universe < 24, "random families enumerate every set");
    let sets: Vec<LabelSet> = (0..1u64 << universe)
        .filter(|_| rng.gen_bool(p))
        .map(LabelSet::from_mask)
        .collect();
    AcceptedFamily::from_sets(universe, sets).expect("sets in range")
}
