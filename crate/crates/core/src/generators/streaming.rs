//! Streaming algorithms as layered transition graphs, and the function
//! families built from them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::TransitionGraph;
use crate::label::LabelSet;
use crate::transform::trim;

/// A one-pass nondeterministic streaming algorithm reading one bit per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamingAlgorithmSpec {
    pub state_count: usize,
    pub initial: usize,
    pub accepting: BTreeSet<usize>,
    /// `(from, to, bit)`: on reading `bit` in state `from`, move to `to`.
    pub transitions: Vec<(usize, usize, bool)>,
    pub input_length: usize,
}

impl StreamingAlgorithmSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str, q: usize| {
            Err(Error::Parameter(format!(
                "{what} state {q} out of range for {} states",
                self.state_count
            )))
        };
        if self.initial >= self.state_count {
            return bad("initial", self.initial);
        }
        if let Some(&q) = self.accepting.iter().find(|&&q| q >= self.state_count) {
            return bad("accepting", q);
        }
        for &(a, b, _) in &self.transitions {
            if a >= self.state_count {
                return bad("transition", a);
            }
            if b >= self.state_count {
                return bad("transition", b);
            }
        }
        Ok(())
    }

    /// Runs the algorithm directly on `input`; the reference semantics.
    pub fn accepts(&self, input: &[bool]) -> bool {
        let mut current = vec![false; self.state_count];
        current[self.initial] = true;
        for &bit in input {
            let mut next = vec![false; self.state_count];
            for &(a, b, t) in &self.transitions {
                if t == bit && current[a] {
                    next[b] = true;
                }
            }
            current = next;
        }
        self.accepting.iter().any(|&q| current[q])
    }
}

/// Layered graph reading input position `i` as variable `i`.
pub fn from_streaming_algorithm(spec: &StreamingAlgorithmSpec) -> Result<TransitionGraph> {
    let order: Vec<usize> = (0..spec.input_length).collect();
    from_streaming_algorithm_in_order(spec, &order)
}

/// Layered graph reading input position `i` as variable `order[i]`.
///
/// Vertices are `(q, i)` for every state and layer plus a terminal; every
/// transition is copied between each pair of consecutive layers, labeled by
/// the variable read when the bit is 1, and each accepting state of the last
/// layer gets an empty edge to the terminal. The result is trimmed.
pub fn from_streaming_algorithm_in_order(
    spec: &StreamingAlgorithmSpec,
    order: &[usize],
) -> Result<TransitionGraph> {
    spec.validate()?;
    let n = spec.input_length;
    if order.len() != n || order.iter().collect::<BTreeSet<_>>().len() != n || order.iter().any(|&v| v >= n) {
        return Err(Error::Parameter(format!(
            "variable order must be a permutation of 0..{n}"
        )));
    }
    let q = spec.state_count;
    let id = |state: usize, layer: usize| layer * q + state;
    let terminal = (n + 1) * q;
    let mut g = TransitionGraph::new(n, terminal + 1, id(spec.initial, 0), terminal);
    for layer in 1..=n {
        for &(a, b, bit) in &spec.transitions {
            let label = if bit {
                LabelSet::singleton(order[layer - 1])
            } else {
                LabelSet::new()
            };
            g.add_edge(id(a, layer - 1), id(b, layer), label);
        }
    }
    for &acc in &spec.accepting {
        g.add_edge(id(acc, n), terminal, LabelSet::new());
    }
    Ok(trim(&g))
}

/// Parity, tracked with one bit of state.
pub fn xor_graph(n: usize) -> Result<TransitionGraph> {
    if n == 0 {
        return Err(Error::Parameter("xor_graph needs n >= 1".into()));
    }
    let spec = StreamingAlgorithmSpec {
        state_count: 2,
        initial: 0,
        accepting: BTreeSet::from([1]),
        transitions: vec![(0, 0, false), (0, 1, true), (1, 1, false), (1, 0, true)],
        input_length: n,
    };
    from_streaming_algorithm(&spec)
}

/// Counter automaton over states `0..=n` accepting the given final counts.
pub fn counter_algorithm(n: usize, accepting: BTreeSet<usize>) -> StreamingAlgorithmSpec {
    let mut transitions = Vec::with_capacity(2 * n + 1);
    for c in 0..=n {
        transitions.push((c, c, false));
        if c < n {
            transitions.push((c, c + 1, true));
        }
    }
    StreamingAlgorithmSpec {
        state_count: n + 1,
        initial: 0,
        accepting,
        transitions,
        input_length: n,
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::Parameter(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

/// At least `k` ones.
pub fn threshold_graph(n: usize, k: usize) -> Result<TransitionGraph> {
    check_k(n, k)?;
    from_streaming_algorithm(&counter_algorithm(n, (k..=n).collect()))
}

/// Exactly `k` ones.
pub fn slice_graph(n: usize, k: usize) -> Result<TransitionGraph> {
    check_k(n, k)?;
    from_streaming_algorithm(&counter_algorithm(n, BTreeSet::from([k])))
}

/// The symmetric function accepting exactly the listed numbers of ones.
pub fn symmetric_graph(n: usize, accepted_counts: &BTreeSet<usize>) -> Result<TransitionGraph> {
    if let Some(&c) = accepted_counts.iter().find(|&&c| c > n) {
        return Err(Error::Parameter(format!("count {c} exceeds n = {n}")));
    }
    from_streaming_algorithm(&counter_algorithm(n, accepted_counts.clone()))
}

/// Flat index of `x_i` (`i` zero-based) in the `Eq_n` universe.
pub fn eq_x_var(n: usize, i: usize) -> usize {
    debug_assert!(i < 2 * n);
    i
}

/// Flat index of `y_i` (`i` zero-based) in the `Eq_n` universe.
pub fn eq_y_var(n: usize, i: usize) -> usize {
    2 * n + i
}

/// `Eq_n` over `4n` variables: words `x`, `y` of length `2n` with `x = y`
/// and `x` of weight exactly `n`.
///
/// Built from a counter that reads the variables in alternating order
/// `x_1, y_1, x_2, y_2, ...` and remembers the last `x` bit until the
/// matching `y` bit arrives.
pub fn eq_graph(n: usize) -> Result<TransitionGraph> {
    if n == 0 {
        return Err(Error::Parameter("eq_graph needs n >= 1".into()));
    }
    const IDLE: usize = 0;
    const SAW0: usize = 1;
    const SAW1: usize = 2;
    let state = |count: usize, pending: usize| count * 3 + pending;
    let mut transitions = Vec::new();
    for c in 0..=n {
        transitions.push((state(c, IDLE), state(c, SAW0), false));
        if c < n {
            transitions.push((state(c, IDLE), state(c + 1, SAW1), true));
        }
        transitions.push((state(c, SAW0), state(c, IDLE), false));
        transitions.push((state(c, SAW1), state(c, IDLE), true));
    }
    let spec = StreamingAlgorithmSpec {
        state_count: 3 * (n + 1),
        initial: state(0, IDLE),
        accepting: BTreeSet::from([state(n, IDLE)]),
        transitions,
        input_length: 4 * n,
    };
    let order: Vec<usize> = (0..2 * n)
        .flat_map(|i| [eq_x_var(n, i), eq_y_var(n, i)])
        .collect();
    from_streaming_algorithm_in_order(&spec, &order)
}
