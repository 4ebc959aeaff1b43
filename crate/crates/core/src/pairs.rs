//! Pair-indexed universes: a variable per unordered pair `{i,j}`, `i < j`,
//! over `[0, n)`, at the lexicographic rank of `(i,j)`. A unit set over such
//! a universe is read as an undirected "label graph" on `n` vertices.

use crate::label::LabelSet;

pub fn pair_universe(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of `{i,j}`; argument order does not matter.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i != j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_of(n: usize, index: usize) -> (usize, usize) {
    let mut rest = index;
    for i in 0..n {
        let row = n - i - 1;
        if rest < row {
            return (i, i + 1 + rest);
        }
        rest -= row;
    }
    panic!("pair index {index} out of range for n = {n}");
}

/// The `n >= 2` with `n(n-1)/2 == universe`, if any.
pub fn vertices_for_universe(universe: usize) -> Option<usize> {
    (2..).take_while(|&n| pair_universe(n) <= universe).find(|&n| pair_universe(n) == universe)
}

/// The pair set of the complete graph on `vertices`.
pub fn clique_pairs(n: usize, vertices: &[usize]) -> LabelSet {
    let mut s = LabelSet::new();
    for (a, &i) in vertices.iter().enumerate() {
        for &j in &vertices[a + 1..] {
            s.insert(pair_index(n, i, j));
        }
    }
    s
}

/// Dense adjacency view of a label graph.
#[derive(Clone, Debug)]
pub struct LabelGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl LabelGraph {
    pub fn new(n: usize, set: &LabelSet) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for p in set.iter() {
            let (i, j) = pair_of(n, p);
            adj[i][j] = true;
            adj[j][i] = true;
        }
        LabelGraph { n, adj }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// Some `(i, j, k)` with `{i,j}` and `{j,k}` present and `{i,k}` absent.
    pub fn induced_p3(&self) -> Option<(usize, usize, usize)> {
        for j in 0..self.n {
            for i in 0..self.n {
                if i == j || !self.adj[i][j] {
                    continue;
                }
                for k in i + 1..self.n {
                    if k != j && self.adj[j][k] && !self.adj[i][k] {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Vertex sets of the connected components with at least two vertices.
    pub fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in (0..self.n).filter(|&w| self.adj[v][w]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            if comp.len() > 1 {
                comp.sort_unstable();
                out.push(comp);
            }
        }
        out
    }

    fn is_complete_on(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &i)| vertices[a + 1..].iter().all(|&j| self.adj[i][j]))
    }

    /// The non-trivial maximal cliques, if the graph is a disjoint union of
    /// cliques; otherwise the first component that is not complete.
    pub fn clique_components(&self) -> Result<Vec<Vec<usize>>, Vec<usize>> {
        let comps = self.nontrivial_components();
        match comps.iter().find(|c| !self.is_complete_on(c)) {
            Some(bad) => Err(bad.clone()),
            None => Ok(comps),
        }
    }

    pub fn is_p3_free(&self) -> bool {
        self.clique_components().is_ok()
    }

    /// One complete graph plus isolated vertices (or no edges at all).
    pub fn is_clique_graph(&self) -> bool {
        matches!(self.clique_components(), Ok(c) if c.len() <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_lexicographic() {
        let n = 5;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(n, i, j), k);
                assert_eq!(pair_index(n, j, i), k);
                assert_eq!(pair_of(n, k), (i, j));
                k += 1;
            }
        }
        assert_eq!(k, pair_universe(n));
    }

    #[test]
    fn universe_inverse() {
        assert_eq!(vertices_for_universe(1), Some(2));
        assert_eq!(vertices_for_universe(6), Some(4));
        assert_eq!(vertices_for_universe(7), None);
        assert_eq!(vertices_for_universe(0), None);
    }

    #[test]
    fn p3_detection_routes_agree() {
        // every graph on 5 vertices
        let n = 5;
        for mask in 0u64..1 << pair_universe(n) {
            let g = LabelGraph::new(n, &LabelSet::from_mask(mask));
            assert_eq!(g.induced_p3().is_none(), g.is_p3_free(), "mask {mask:b}");
        }
    }

    #[test]
    fn clique_graph_shapes() {
        let n = 4;
        let tri = LabelGraph::new(n, &clique_pairs(n, &[0, 1, 2]));
        assert!(tri.is_clique_graph());
        let two = clique_pairs(n, &[0, 1]).union(&clique_pairs(n, &[2, 3]));
        let two = LabelGraph::new(n, &two);
        assert!(two.is_p3_free());
        assert!(!two.is_clique_graph());
        assert!(LabelGraph::new(n, &LabelSet::new()).is_clique_graph());
        let path = LabelSet::from([pair_index(n, 0, 1), pair_index(n, 1, 2)]);
        assert_eq!(LabelGraph::new(n, &path).induced_p3(), Some((0, 1, 2)));
    }
}
