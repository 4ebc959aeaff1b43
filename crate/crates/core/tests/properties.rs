use proptest::prelude::*;

use dcgraph::bp::{bp_evaluate, BranchingProgram, Literal};
use dcgraph::classes::classify;
use dcgraph::closure::{closure, closure_with};
use dcgraph::format::{
    parse_dimacs, parse_nbp, parse_tg, parse_tt, print_dimacs, print_nbp, print_tg, print_tt,
};
use dcgraph::generators::{from_monotone_bp, CnfFormula};
use dcgraph::random::{random_bp, random_trimmed_dag, random_write_once, rng};
use dcgraph::search::{min_dc, SearchConfig};
use dcgraph::semantics::{enumerate_accepted, equivalent, evaluate};
use dcgraph::transform::{normalize_singletons, to_dag, trim};
use dcgraph::{AcceptedFamily, Assignment, Execution, LabelSet, TransitionGraph};

fn label(universe: usize) -> impl Strategy<Value = LabelSet> {
    prop::collection::btree_set(0..universe.max(1), 0..=universe.min(3))
        .prop_map(move |s| s.into_iter().filter(|&i| i < universe).collect())
}

/// Arbitrary graphs, cyclic ones included.
fn graph(max_universe: usize, max_vertices: usize, max_edges: usize) -> impl Strategy<Value = TransitionGraph> {
    (0..=max_universe, 1..=max_vertices).prop_flat_map(move |(u, v)| {
        (
            Just(u),
            Just(v),
            0..v,
            0..v,
            prop::collection::vec((0..v, 0..v, label(u)), 0..=max_edges),
        )
            .prop_map(|(u, v, s, t, edges)| {
                let mut g = TransitionGraph::new(u, v, s, t);
                for (a, b, l) in edges {
                    g.add_edge(a, b, l);
                }
                g
            })
    })
}

fn dag(max_universe: usize) -> impl Strategy<Value = TransitionGraph> {
    (any::<u64>(), 1..=max_universe, 2usize..=6, 1usize..=10)
        .prop_map(|(seed, u, v, e)| random_trimmed_dag(&mut rng(seed), u, v, e, 0.3))
}

fn family(max_universe: usize, max_sets: usize) -> impl Strategy<Value = AcceptedFamily> {
    (0..=max_universe).prop_flat_map(move |u| {
        prop::collection::btree_set(0u64..1 << u, 0..=max_sets.min(1 << u)).prop_map(move |sets| {
            AcceptedFamily::from_sets(u, sets.into_iter().map(LabelSet::from_mask)).unwrap()
        })
    })
}

fn cnf() -> impl Strategy<Value = CnfFormula> {
    (1usize..=6).prop_flat_map(|n| {
        let lit = (1..=n as i64, any::<bool>()).prop_map(|(v, pos)| if pos { v } else { -v });
        prop::collection::vec(prop::collection::vec(lit, 0..=4), 0..=8)
            .prop_map(move |clauses| CnfFormula::new(n, clauses).unwrap())
    })
}

/// Renumbers vertices by `perm`.
fn relabel(g: &TransitionGraph, perm: &[usize]) -> TransitionGraph {
    let mut h = TransitionGraph::new(g.universe_size, g.vertex_count, perm[g.initial], perm[g.terminal]);
    for e in &g.edges {
        h.add_edge(perm[e.source], perm[e.target], e.label.clone());
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transforms_preserve_the_function(g in graph(4, 5, 9)) {
        let base = to_dag(&g);
        let f = enumerate_accepted(&base).unwrap();
        prop_assert_eq!(enumerate_accepted(&to_dag(&trim(&g))).unwrap(), f.clone());
        prop_assert_eq!(enumerate_accepted(&to_dag(&normalize_singletons(&g))).unwrap(), f);
    }

    #[test]
    fn pipeline_is_idempotent(g in graph(3, 5, 8)) {
        let once = trim(&normalize_singletons(&to_dag(&g)));
        let twice = trim(&normalize_singletons(&to_dag(&once)));
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn normalization_leaves_small_labels(g in graph(4, 4, 8)) {
        let n = normalize_singletons(&g);
        prop_assert!(n.edges.iter().all(|e| e.label.len() <= 1));
        prop_assert!(equivalent(&g, &n).unwrap());
    }

    #[test]
    fn trim_is_idempotent_and_trimmed(g in graph(3, 6, 10)) {
        let t = trim(&g);
        prop_assert!(t.is_trimmed());
        prop_assert_eq!(trim(&t), t);
    }

    #[test]
    fn closure_laws(g in dag(5)) {
        let c = closure(&g).unwrap();
        prop_assert_eq!(enumerate_accepted(&c).unwrap(), enumerate_accepted(&g).unwrap());
        prop_assert_eq!(closure(&c).unwrap(), c.clone());
        prop_assert_eq!(closure_with(&g, Execution::Sequential).unwrap(), c);
    }

    #[test]
    fn class_chain_and_relabeling(seed in any::<u64>(), u in 1usize..=5, v in 2usize..=7, e in 1usize..=10) {
        let g = trim(&normalize_singletons(&random_trimmed_dag(&mut rng(seed), u, v, e, 0.25)));
        let c = classify(&g).unwrap();
        if c.is_streaming_under_identity_order {
            prop_assert!(c.adaptive_order.is_some());
        }
        if c.adaptive_order.is_some() {
            prop_assert!(c.is_write_once);
        }
        let perm: Vec<usize> = (0..g.vertex_count).rev().collect();
        prop_assert_eq!(classify(&relabel(&g, &perm)).unwrap(), c);
    }

    #[test]
    fn write_once_generator_classifies(seed in any::<u64>()) {
        let g = random_write_once(&mut rng(seed), 4, 6, 9, 0.3);
        prop_assert!(classify(&g).unwrap().is_write_once);
    }

    #[test]
    fn monotone_programs_simulated(seed in any::<u64>(), vars in 1usize..=5) {
        let b = random_bp(&mut rng(seed), vars, 3, 3, 0.4, true);
        let g = from_monotone_bp(&b).unwrap();
        prop_assert_eq!(g.size(), b.size() + 2 * vars);
        for m in 0..1u64 << vars {
            let x = Assignment::from_index(vars, m);
            prop_assert_eq!(evaluate(&g, &x).unwrap(), bp_evaluate(&b, &x).unwrap());
        }
    }

    #[test]
    fn search_witness_is_sound(f in family(3, 4)) {
        let mut cfg = SearchConfig::new(f.len());
        cfg.execution = Execution::Sequential;
        let r = min_dc(&f, &cfg).unwrap();
        let k = r.minimal_size.unwrap();
        prop_assert!(k <= f.len());
        let w = r.witness.unwrap();
        prop_assert_eq!(w.size(), k);
        prop_assert_eq!(enumerate_accepted(&w).unwrap(), f);
    }

    #[test]
    fn tg_round_trip(g in graph(8, 6, 12)) {
        let text = print_tg(&g);
        let back = parse_tg(&text).unwrap();
        prop_assert_eq!(print_tg(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn tt_round_trip(f in family(6, 12)) {
        let text = print_tt(&f);
        let back = parse_tt(&text).unwrap();
        prop_assert_eq!(print_tt(&back), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn nbp_round_trip(seed in any::<u64>(), vars in 1usize..=6) {
        let b = random_bp(&mut rng(seed), vars, 3, 3, 0.5, false);
        let text = print_nbp(&b);
        let back = parse_nbp(&text).unwrap();
        prop_assert_eq!(print_nbp(&back), text);
        prop_assert_eq!(back, b);
    }

    #[test]
    fn dimacs_round_trip(c in cnf()) {
        let text = print_dimacs(&c);
        prop_assert_eq!(parse_dimacs(&text).unwrap(), c);
    }

    #[test]
    fn literal_printing(var in 0usize..100, positive in any::<bool>()) {
        let mut b = BranchingProgram::new(100, 2, 0, 1);
        b.add_edge(0, 1, Literal { var, positive });
        prop_assert_eq!(parse_nbp(&print_nbp(&b)).unwrap(), b);
    }
}
