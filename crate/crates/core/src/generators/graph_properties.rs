//! Graph-property functions over pair-indexed universes.

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::pairs::{clique_pairs, pair_index, pair_universe, LabelGraph};
use crate::semantics::AcceptedFamily;

/// Largest `n` for which the P3-free family is enumerated by brute force.
pub const MAX_P3F_VERTICES: usize = 7;

/// Clique graphs on `n` vertices: the pair set of every vertex subset.
/// Subsets of size at most one all give the empty graph, so the family has
/// `2^n - n` members.
pub fn clique_family(n: usize) -> Result<AcceptedFamily> {
    if !(2..=20).contains(&n) {
        return Err(Error::Parameter(format!("clique family needs 2 <= n <= 20, got {n}")));
    }
    let mut f = AcceptedFamily::empty(pair_universe(n));
    for mask in 0u32..1 << n {
        let vertices: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        f.insert(clique_pairs(n, &vertices))?;
    }
    Ok(f)
}

/// The trivial one-edge-per-accepted-set graph for the clique indicator.
pub fn clique_indicator_graph(n: usize) -> Result<TransitionGraph> {
    Ok(clique_family(n)?.trivial_graph())
}

/// All P3-free graphs on `n` vertices, by induced-P3 search over every
/// assignment.
pub fn p3f_family(n: usize) -> Result<AcceptedFamily> {
    if !(2..=MAX_P3F_VERTICES).contains(&n) {
        return Err(Error::Parameter(format!(
            "p3f family needs 2 <= n <= {MAX_P3F_VERTICES}, got {n}"
        )));
    }
    Ok(AcceptedFamily::from_predicate(pair_universe(n), |s| {
        LabelGraph::new(n, s).induced_p3().is_none()
    }))
}

/// A polynomial-size graph accepting exactly the label graphs that contain
/// an induced P3.
///
/// It guesses a centre `j` and endpoints `i < k`, writes `{i,j}` and
/// `{j,k}`, then walks a choice chain that may write any pair except
/// `{i,k}`. One chain per skipped pair is shared by all centres.
pub fn not_p3f_graph(n: usize) -> Result<TransitionGraph> {
    if n < 3 {
        return Err(Error::Parameter(format!("not_p3f_graph needs n >= 3, got {n}")));
    }
    let u = pair_universe(n);
    let mut g = TransitionGraph::new(u, 2, 0, 1);
    let (s, t) = (0, 1);
    let mut chain_start = vec![0usize; u];
    for (skip, start) in chain_start.iter_mut().enumerate() {
        let others: Vec<usize> = (0..u).filter(|&p| p != skip).collect();
        *start = g.add_vertex();
        let mut at = *start;
        for (k, &p) in others.iter().enumerate() {
            let next = if k + 1 == others.len() { t } else { g.add_vertex() };
            g.add_edge(at, next, LabelSet::new());
            g.add_edge(at, next, LabelSet::singleton(p));
            at = next;
        }
    }
    for j in 0..n {
        for i in 0..n {
            for k in i + 1..n {
                if i == j || k == j {
                    continue;
                }
                let mid = g.add_vertex();
                g.add_edge(s, mid, LabelSet::singleton(pair_index(n, i, j)));
                g.add_edge(mid, chain_start[pair_index(n, i, k)], LabelSet::singleton(pair_index(n, j, k)));
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{enumerate_accepted, evaluate};
    use crate::label::Assignment;

    #[test]
    fn clique3_has_five_members() {
        let f = clique_family(3).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.contains(&LabelSet::from([0, 1, 2])));
        assert_eq!(clique_indicator_graph(3).unwrap().size(), 5);
    }

    #[test]
    fn clique4_rejects_two_disjoint_edges() {
        let n = 4;
        let f = clique_family(n).unwrap();
        assert_eq!(f.len(), 12);
        let two = LabelSet::from([pair_index(n, 0, 1), pair_index(n, 2, 3)]);
        assert!(!f.contains(&two));
    }

    #[test]
    fn p3f3_equals_clique3() {
        assert_eq!(p3f_family(3).unwrap(), clique_family(3).unwrap());
    }

    #[test]
    fn not_p3f_accepts_path() {
        let n = 3;
        let g = not_p3f_graph(n).unwrap();
        let path = LabelSet::from([pair_index(n, 0, 1), pair_index(n, 1, 2)]);
        assert!(evaluate(&g, &Assignment::from_unit_set(3, &path)).unwrap());
        let complement = AcceptedFamily::from_predicate(3, |s| !LabelGraph::new(n, s).is_p3_free());
        assert_eq!(enumerate_accepted(&g).unwrap(), complement);
    }
}
