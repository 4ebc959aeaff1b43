//! Constructions linking branching programs and transition graphs.

use crate::bp::{bp_is_monotone, BranchingProgram, Literal};
use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::pairs::{pair_index, pair_universe};

/// Simulates a monotone branching program.
///
/// The program's edges keep their variables as singleton labels; a chain
/// `t = v_0, ..., v_n` with an empty and a `{i}` edge per step then lets any
/// superset of a path's variables be completed. Size is `|b| + 2n`.
pub fn from_monotone_bp(b: &BranchingProgram) -> Result<TransitionGraph> {
    b.validate()?;
    if !bp_is_monotone(b) {
        let edge = b.edges.iter().position(|e| !e.literal.positive).unwrap_or(0);
        return Err(Error::NotMonotone { edge });
    }
    let n = b.variable_count;
    let mut g = TransitionGraph::new(n, b.vertex_count, b.initial, b.terminal);
    for e in &b.edges {
        g.add_edge(e.source, e.target, LabelSet::singleton(e.literal.var));
    }
    let mut at = b.terminal;
    for i in 0..n {
        let next = g.add_vertex();
        g.add_edge(at, next, LabelSet::new());
        g.add_edge(at, next, LabelSet::singleton(i));
        at = next;
    }
    g.terminal = at;
    Ok(g)
}

/// Ordered triples of distinct vertices in lexicographic order.
pub fn ordered_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |p| {
        (0..n).flat_map(move |q| (0..n).map(move |r| (p, q, r)))
    })
    .filter(|&(p, q, r)| p != q && q != r && p != r)
}

/// The P3-free indicator as a chain over all `n(n-1)(n-2)` ordered triples
/// `(p,q,r)`, each link offering `not x_pq`, `not x_qr` or `x_rp`.
pub fn p3f_branching_program(n: usize) -> Result<BranchingProgram> {
    if n < 3 {
        return Err(Error::Parameter(format!("p3f branching program needs n >= 3, got {n}")));
    }
    let triples: Vec<_> = ordered_triples(n).collect();
    let mut b = BranchingProgram::new(pair_universe(n), triples.len() + 1, 0, triples.len());
    for (i, &(p, q, r)) in triples.iter().enumerate() {
        b.add_edge(i, i + 1, Literal::neg(pair_index(n, p, q)));
        b.add_edge(i, i + 1, Literal::neg(pair_index(n, q, r)));
        b.add_edge(i, i + 1, Literal::pos(pair_index(n, r, p)));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::bp_evaluate;
    use crate::label::Assignment;
    use crate::semantics::{enumerate_accepted, AcceptedFamily};

    #[test]
    fn conjunction() {
        let mut b = BranchingProgram::new(2, 3, 0, 2);
        b.add_edge(0, 1, Literal::pos(0));
        b.add_edge(1, 2, Literal::pos(1));
        let g = from_monotone_bp(&b).unwrap();
        assert_eq!(g.size(), 2 + 4);
        let f = enumerate_accepted(&g).unwrap();
        assert_eq!(f, AcceptedFamily::from_sets(2, [LabelSet::from([0, 1])]).unwrap());
    }

    #[test]
    fn disjunction_matches_bp() {
        let mut b = BranchingProgram::new(2, 2, 0, 1);
        b.add_edge(0, 1, Literal::pos(0));
        b.add_edge(0, 1, Literal::pos(1));
        let f = enumerate_accepted(&from_monotone_bp(&b).unwrap()).unwrap();
        let oracle = AcceptedFamily::from_predicate(2, |s| bp_evaluate(&b, &Assignment::from_unit_set(2, s)).unwrap());
        assert_eq!(f, oracle);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn negated_input_is_refused() {
        let mut b = BranchingProgram::new(1, 2, 0, 1);
        b.add_edge(0, 1, Literal::neg(0));
        assert_eq!(from_monotone_bp(&b), Err(Error::NotMonotone { edge: 0 }));
    }

    #[test]
    fn p3f_program_size() {
        for n in 3..6 {
            assert_eq!(p3f_branching_program(n).unwrap().size(), 3 * n * (n - 1) * (n - 2));
        }
        assert!(p3f_branching_program(2).is_err());
    }
}
