//! SAT as an evaluation problem on chain-shaped transition graphs.

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::{Assignment, LabelSet};

/// A CNF formula with DIMACS-style literals: `v` or `-v` for `v` in
/// `1..=variable_count`. Empty clauses are allowed and unsatisfiable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i64>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(Error::Parameter(format!(
                        "clause {j}: literal {lit} out of range for {variable_count} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    /// `values[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&lit| values[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    /// Tries all `2^n` assignments.
    pub fn brute_force_satisfiable(&self) -> bool {
        assert!(self.variable_count < 32, "brute force limited to 31 variables");
        (0u64..1 << self.variable_count).any(|m| {
            let values: Vec<bool> = (0..self.variable_count).map(|i| m >> i & 1 == 1).collect();
            self.satisfied_by(&values)
        })
    }
}

/// Chain `x_0 -> ... -> x_n` over universe `[0, m)`, `m` the clause count.
/// Variable `i` contributes two parallel edges, for false then true, each
/// labeled by the clauses that value satisfies. The formula is satisfiable
/// iff the all-ones assignment is accepted.
pub fn sat_reduction(c: &CnfFormula) -> (TransitionGraph, Assignment) {
    let n = c.variable_count;
    let m = c.clauses.len();
    let mut g = TransitionGraph::new(m, n + 1, 0, n);
    for i in 1..=n {
        for positive in [false, true] {
            let label: LabelSet = c
                .clauses
                .iter()
                .enumerate()
                .filter(|(_, cl)| cl.iter().any(|&lit| lit.unsigned_abs() as usize == i && (lit > 0) == positive))
                .map(|(j, _)| j)
                .collect();
            g.add_edge(i - 1, i, label);
        }
    }
    (g, Assignment::ones(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::evaluate;

    #[test]
    fn example_edges() {
        let cnf = CnfFormula::new(2, vec![vec![1, 2], vec![-1]]).unwrap();
        let (g, x) = sat_reduction(&cnf);
        let labels: Vec<LabelSet> = g.edges.iter().map(|e| e.label.clone()).collect();
        assert_eq!(
            labels,
            vec![LabelSet::from([1]), LabelSet::from([0]), LabelSet::new(), LabelSet::from([0])]
        );
        assert!(evaluate(&g, &x).unwrap());
        assert!(cnf.brute_force_satisfiable());
    }

    #[test]
    fn contradiction() {
        let cnf = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        let (g, x) = sat_reduction(&cnf);
        assert!(!evaluate(&g, &x).unwrap());
    }

    #[test]
    fn no_clauses_is_true() {
        let cnf = CnfFormula::new(2, vec![]).unwrap();
        let (g, x) = sat_reduction(&cnf);
        assert_eq!(x.len(), 0);
        assert!(evaluate(&g, &x).unwrap());
    }

    #[test]
    fn empty_clause_is_unsatisfiable() {
        let cnf = CnfFormula::new(1, vec![vec![1], vec![]]).unwrap();
        let (g, x) = sat_reduction(&cnf);
        assert!(!evaluate(&g, &x).unwrap());
        assert!(!cnf.brute_force_satisfiable());
    }

    #[test]
    fn literal_range_checked() {
        assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![0]]).is_err());
    }
}
