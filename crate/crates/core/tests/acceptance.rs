//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Reference answers come from oracles written here against the
//! definitions (walk search over `(vertex, collected set)` states,
//! brute-force predicates, literal-by-literal branching program runs), not
//! from the library code under test.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

use dcgraph::bp::BranchingProgram;
use dcgraph::classes::{classify, counting_function, evaluate_write_once, is_write_once};
use dcgraph::closure::closure;
use dcgraph::format::{parse_nbp, parse_tg, parse_tt, print_nbp, print_tg, print_tt};
use dcgraph::generators::{
    clique_family, eq_graph, eq_x_var, eq_y_var, from_streaming_algorithm, not_p3f_graph,
    p3f_branching_program, p3f_family, sat_reduction, slice_graph, symmetric_graph,
    threshold_graph, xor_graph, StreamingAlgorithmSpec,
};
use dcgraph::random::{
    random_bp, random_cnf, random_family, random_graph, random_trimmed_dag, random_write_once, rng,
};
use dcgraph::search::{min_dc, verify_uniform_hardness, SearchConfig, SearchStatus};
use dcgraph::semantics::{enumerate_accepted, evaluate};
use dcgraph::structure::{
    check_clique_structure, check_p3free_structure, check_structure, Preconditions, StructureFamily,
    StructureOptions,
};
use dcgraph::transform::{normalize_singletons, to_dag, trim};
use dcgraph::{AcceptedFamily, Assignment, Error, LabelSet, TransitionGraph};
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn mask_of(l: &LabelSet) -> u64 {
    l.iter().fold(0, |m, i| m | 1 << i)
}

/// Accepted masks of a possibly cyclic graph: breadth-first search over
/// `(vertex, collected)` states, one walk step per round. A walk that
/// collects `c` distinct sets needs at most `(c + 1) * |V|` steps between
/// growth events, so the search stops there and checks the frontier is
/// empty.
fn walk_oracle(g: &TransitionGraph) -> BTreeSet<u64> {
    let bound = (g.universe_size + 1) * g.vertex_count.max(1) + 1;
    let mut seen: HashSet<(usize, u64)> = HashSet::new();
    let mut frontier = vec![(g.initial, 0u64)];
    seen.insert((g.initial, 0));
    let mut steps = 0;
    while !frontier.is_empty() {
        assert!(steps <= bound, "walk oracle did not settle within {bound} steps");
        let mut next = Vec::new();
        for &(v, m) in &frontier {
            for e in g.edges.iter().filter(|e| e.source == v) {
                let s = (e.target, m | mask_of(&e.label));
                if seen.insert(s) {
                    next.push(s);
                }
            }
        }
        frontier = next;
        steps += 1;
    }
    seen.into_iter().filter(|&(v, _)| v == g.terminal).map(|(_, m)| m).collect()
}

fn family_masks(f: &AcceptedFamily) -> BTreeSet<u64> {
    f.iter().map(mask_of).collect()
}

fn predicate_masks(n: usize, pred: impl Fn(u64) -> bool) -> BTreeSet<u64> {
    (0..1u64 << n).filter(|&m| pred(m)).collect()
}

/// Rank of the pair `{i,j}` among all pairs of `[n]` in lexicographic order.
fn rank(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    (0..i).map(|a| n - 1 - a).sum::<usize>() + (j - i - 1)
}

fn has_induced_p3(n: usize, m: u64) -> bool {
    let adj = |i: usize, j: usize| m >> rank(n, i, j) & 1 == 1;
    for j in 0..n {
        for i in 0..n {
            for k in i + 1..n {
                if i != j && k != j && adj(i, j) && adj(j, k) && !adj(i, k) {
                    return true;
                }
            }
        }
    }
    false
}

fn bp_oracle(b: &BranchingProgram, bits: &[bool]) -> bool {
    let mut reached = vec![false; b.vertex_count];
    reached[b.initial] = true;
    let mut queue = VecDeque::from([b.initial]);
    while let Some(v) = queue.pop_front() {
        for e in &b.edges {
            if e.source == v && bits[e.literal.var] == e.literal.positive && !reached[e.target] {
                reached[e.target] = true;
                queue.push_back(e.target);
            }
        }
    }
    reached[b.terminal]
}

fn bits_of(n: usize, m: u64) -> Vec<bool> {
    (0..n).map(|i| m >> i & 1 == 1).collect()
}

// ------------------------------------------------------------- criteria

fn closure_laws() -> Outcome {
    let mut r = rng(1);
    for case in 0..1000 {
        let universe = r.gen_range(1..=6);
        let vertices = r.gen_range(2..=7);
        let edges = r.gen_range(1..=12);
        let g = random_trimmed_dag(&mut r, universe, vertices, edges, 0.3);
        let c = closure(&g).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(walk_oracle(&c) == walk_oracle(&g), "case {case}: closure changed the function");
        let cc = closure(&c).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(cc == c, "case {case}: closure is not idempotent");
        for (a, b) in g.edges.iter().zip(&c.edges) {
            ensure!(a.label.is_subset(&b.label), "case {case}: closure shrank a label");
        }
    }
    Ok("1000 random trimmed DAGs".into())
}

fn transform_equivalence() -> Outcome {
    let mut r = rng(2);
    let mut cyclic = 0;
    for case in 0..1000 {
        let universe = r.gen_range(1..=5);
        let vertices = r.gen_range(1..=8);
        let edges = r.gen_range(0..=14);
        let g = random_graph(&mut r, universe, vertices, edges, 0.3);
        if !g.is_dag() {
            cyclic += 1;
        }
        let want = walk_oracle(&g);
        ensure!(walk_oracle(&trim(&g)) == want, "case {case}: trim");
        ensure!(walk_oracle(&normalize_singletons(&g)) == want, "case {case}: normalize");
        let d = to_dag(&g);
        ensure!(d.is_dag(), "case {case}: to_dag output is cyclic");
        let got = enumerate_accepted(&d).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(family_masks(&got) == want, "case {case}: to_dag");
    }
    Ok(format!("1000 random graphs, {cyclic} cyclic"))
}

fn write_once_evaluator() -> Outcome {
    let mut r = rng(3);
    let mut checks = 0u64;
    for case in 0..500 {
        let universe = r.gen_range(1..=8);
        let vertices = r.gen_range(2..=9);
        let edges = r.gen_range(1..=14);
        let g = random_write_once(&mut r, universe, vertices, edges, 0.25);
        ensure!(is_write_once(&g) == Ok(true), "case {case}: generator produced a non-write-once graph");
        let want = walk_oracle(&g);
        for m in 0..1u64 << universe {
            let x = Assignment::from_index(universe, m);
            let fast = evaluate_write_once(&g, &x).map_err(|e| format!("case {case}: {e}"))?;
            let slow = evaluate(&g, &x).map_err(|e| format!("case {case}: {e}"))?;
            ensure!(fast == slow && slow == want.contains(&m), "case {case}: disagreement on {m:b}");
            let cf = counting_function(&g, &x.unit_set()).map_err(|e| e.to_string())?;
            for e in g.edges.iter().filter(|e| e.label.is_subset(&x.unit_set())) {
                if let Some(u) = cf.value(e.source) {
                    ensure!(
                        cf.value(e.target).is_some_and(|v| v >= u + e.label.len()),
                        "case {case}: counting function not monotone"
                    );
                }
            }
            checks += 1;
        }
    }
    Ok(format!("500 write-once graphs, {checks} assignments"))
}

fn generator_fidelity() -> Outcome {
    let accepted = |g: &TransitionGraph| -> Result<BTreeSet<u64>, String> {
        enumerate_accepted(g).map(|f| family_masks(&f)).map_err(|e| e.to_string())
    };
    for n in 1..=12 {
        let want = predicate_masks(n, |m| m.count_ones() % 2 == 1);
        ensure!(accepted(&xor_graph(n).unwrap())? == want, "xor n={n}");
    }
    for n in 1..=10 {
        for k in 0..=n {
            let thr = predicate_masks(n, |m| m.count_ones() as usize >= k);
            ensure!(accepted(&threshold_graph(n, k).unwrap())? == thr, "thr n={n} k={k}");
            let slice = predicate_masks(n, |m| m.count_ones() as usize == k);
            ensure!(accepted(&slice_graph(n, k).unwrap())? == slice, "slice n={n} k={k}");
        }
    }
    let mut r = rng(4);
    for _ in 0..10 {
        let n = r.gen_range(1..=10);
        let counts: BTreeSet<usize> = (0..=n).filter(|_| r.gen_bool(0.4)).collect();
        let want = predicate_masks(n, |m| counts.contains(&(m.count_ones() as usize)));
        ensure!(accepted(&symmetric_graph(n, &counts).unwrap())? == want, "sym n={n} {counts:?}");
    }
    for n in 1..=3 {
        let want = predicate_masks(4 * n, |m| {
            let x: Vec<bool> = (0..2 * n).map(|i| m >> eq_x_var(n, i) & 1 == 1).collect();
            let y: Vec<bool> = (0..2 * n).map(|i| m >> eq_y_var(n, i) & 1 == 1).collect();
            x == y && x.iter().filter(|&&b| b).count() == n
        });
        ensure!(accepted(&eq_graph(n).unwrap())? == want, "eq n={n}");
    }
    for n in 3..=5 {
        let b = p3f_branching_program(n).unwrap();
        let u = n * (n - 1) / 2;
        for m in 0..1u64 << u {
            ensure!(bp_oracle(&b, &bits_of(u, m)) == !has_induced_p3(n, m), "p3f bp n={n} at {m:b}");
        }
    }
    let want = predicate_masks(6, |m| has_induced_p3(4, m));
    ensure!(accepted(&not_p3f_graph(4).unwrap())? == want, "not_p3f n=4");
    let (sat, unsat) = sat_suite()?;
    Ok(format!("all families exact; sat suite {sat} sat / {unsat} unsat"))
}

/// The 300-formula suite shared by generator fidelity and the reduction
/// check: returns (satisfiable, unsatisfiable) counts.
fn sat_suite() -> Result<(usize, usize), String> {
    let mut r = rng(8);
    let (mut sat, mut unsat) = (0, 0);
    for case in 0..300 {
        let vars = r.gen_range(1..=8);
        let clauses = r.gen_range(1..=12);
        let c = random_cnf(&mut r, vars, clauses, 3);
        let brute = (0..1u64 << vars).any(|m| {
            c.clauses()
                .iter()
                .all(|cl| cl.iter().any(|&l| (m >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0)))
        });
        let (g, x) = sat_reduction(&c);
        ensure!(g.size() == 2 * vars, "case {case}: reduction has {} edges", g.size());
        ensure!(x == Assignment::ones(clauses), "case {case}: target is not all ones");
        let got = evaluate(&g, &x).map_err(|e| e.to_string())?;
        ensure!(got == brute, "case {case}: reduction says {got}, brute force {brute}");
        if brute {
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    Ok((sat, unsat))
}

fn classes_and_bounds() -> Outcome {
    let mut r = rng(5);
    for case in 0..100 {
        let states = r.gen_range(1..=4);
        let n = r.gen_range(1..=6);
        let transitions: Vec<(usize, usize, bool)> = (0..r.gen_range(1..=8))
            .map(|_| (r.gen_range(0..states), r.gen_range(0..states), r.gen_bool(0.5)))
            .collect();
        let spec = StreamingAlgorithmSpec {
            state_count: states,
            initial: 0,
            accepting: (0..states).filter(|_| r.gen_bool(0.5)).collect(),
            transitions,
            input_length: n,
        };
        let g = from_streaming_algorithm(&spec).map_err(|e| e.to_string())?;
        let c = classify(&g).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(c.is_streaming_under_identity_order, "case {case}: not streaming");
        ensure!(c.adaptive_order.is_some() && c.is_write_once, "case {case}: class chain broken");
    }
    for n in 1..=4 {
        let c = classify(&eq_graph(n).unwrap()).map_err(|e| e.to_string())?;
        ensure!(c.adaptive_order.is_some(), "eq n={n} is not adaptive");
        ensure!(n == 1 || !c.is_streaming_under_identity_order, "eq n={n} streams in block order");
    }
    for n in 1..=16 {
        let s = xor_graph(n).unwrap().size();
        ensure!(s <= 4 * n + 1, "|xor_graph({n})| = {s}");
    }
    let eq8 = eq_graph(8).unwrap().size();
    ensure!(eq8 < 12870, "|eq_graph(8)| = {eq8}");
    for n in 3..=7 {
        let s = p3f_branching_program(n).unwrap().size();
        ensure!(s == 3 * n * (n - 1) * (n - 2), "|p3f bp({n})| = {s}");
    }
    Ok(format!("|eq_graph(8)| = {eq8} < 12870"))
}

fn structural_propositions() -> Outcome {
    let p3f = closure(&p3f_family(4).unwrap().trivial_graph()).map_err(|e| e.to_string())?;
    let rp = check_p3free_structure(&p3f).map_err(|e| e.to_string())?;
    ensure!(rp.passed(), "p3f(4): {:?}", rp.violations);
    let cl = closure(&clique_family(4).unwrap().trivial_graph()).map_err(|e| e.to_string())?;
    let rc = check_clique_structure(&cl).map_err(|e| e.to_string())?;
    ensure!(rc.passed(), "clique(4): {:?}", rc.violations);

    let p3: LabelSet = [rank(4, 0, 1), rank(4, 1, 2)].into_iter().collect();
    for (family, g) in [(StructureFamily::P3Free, &p3f), (StructureFamily::Clique, &cl)] {
        let mut bad = g.clone();
        bad.edges[0].label = p3.clone();
        let enforced = check_structure(&bad, family, StructureOptions::default());
        ensure!(
            matches!(enforced, Err(Error::FamilyPrecondition { ref set, .. }) if *set == p3),
            "{family}: injected P3 passed the preconditions: {enforced:?}"
        );
        let opts = StructureOptions {
            preconditions: Preconditions::Skip,
            ..Default::default()
        };
        let r = check_structure(&bad, family, opts).map_err(|e| e.to_string())?;
        ensure!(!r.passed(), "{family}: injected P3 not reported");
    }
    Ok(format!(
        "{} + {} states checked, injected P3 caught",
        rp.states_checked, rc.states_checked
    ))
}

fn exact_minima() -> Outcome {
    let parity = AcceptedFamily::from_sets(2, [LabelSet::from([0]), LabelSet::from([1])]).unwrap();
    let r = min_dc(&parity, &SearchConfig::new(4)).map_err(|e| e.to_string())?;
    ensure!(r.status == SearchStatus::Found && r.minimal_size == Some(2), "parity n=2: {:?}", r.minimal_size);
    let w = r.witness.unwrap();
    ensure!(family_masks(&parity) == walk_oracle(&w), "parity witness is wrong");

    let c3 = clique_family(3).unwrap();
    let r = min_dc(&c3, &SearchConfig::new(5)).map_err(|e| e.to_string())?;
    ensure!(r.status == SearchStatus::Found, "clique(3): {:?}", r.status);
    ensure!(r.minimal_size == Some(5), "clique(3): minimal size {:?}", r.minimal_size);
    ensure!(r.exhausted_up_to >= Some(4) && r.label_cap == 3 && r.exact, "clique(3): search not exhaustive");
    ensure!(family_masks(&c3) == walk_oracle(&r.witness.unwrap()), "clique(3) witness is wrong");

    let u = verify_uniform_hardness(&c3, &SearchConfig::new(5)).map_err(|e| e.to_string())?;
    ensure!(u.subfamilies_total == 32, "expected 32 subfamilies, got {}", u.subfamilies_total);
    ensure!(u.unverified().count() == 0, "{} subfamilies unverified", u.unverified().count());
    ensure!(u.uniformly_hard(), "violations: {:?}", u.violations().collect::<Vec<_>>());
    Ok(format!(
        "parity 2, clique(3) 5, 32/32 subfamilies hard, {} candidates",
        r.stats.candidates + u.stats.candidates
    ))
}

fn sat_reduction_check() -> Outcome {
    let (sat, unsat) = sat_suite()?;
    Ok(format!("300 formulas ({sat} sat, {unsat} unsat), size = 2 * vars"))
}

fn format_round_trips() -> Outcome {
    let mut r = rng(9);
    for case in 0..1000 {
        let (universe, vertices, edges) = (r.gen_range(0..=8), r.gen_range(1..=8), r.gen_range(0..=14));
        let g = random_graph(&mut r, universe, vertices, edges, 0.3);
        let text = print_tg(&g);
        let back = parse_tg(&text).map_err(|e| format!("tg case {case}: {e}"))?;
        ensure!(back == g && print_tg(&back) == text, "tg case {case}");

        let (vars, depth) = (r.gen_range(1..=8), r.gen_range(0..=4));
        let b = random_bp(&mut r, vars, depth, 3, 0.5, false);
        let text = print_nbp(&b);
        let back = parse_nbp(&text).map_err(|e| format!("nbp case {case}: {e}"))?;
        ensure!(back == b && print_nbp(&back) == text, "nbp case {case}");

        let universe = r.gen_range(0..=6);
        let f = random_family(&mut r, universe, 0.3);
        let text = print_tt(&f);
        let back = parse_tt(&text).map_err(|e| format!("tt case {case}: {e}"))?;
        ensure!(back == f && print_tt(&back) == text, "tt case {case}");
    }
    Ok("1000 each of tg, nbp, tt".into())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 9] = [
        ("closure laws", closure_laws, Duration::from_secs(60)),
        ("transform equivalence", transform_equivalence, Duration::from_secs(120)),
        ("write-once evaluator", write_once_evaluator, Duration::from_secs(120)),
        ("generator fidelity", generator_fidelity, Duration::from_secs(300)),
        ("class chain and size bounds", classes_and_bounds, Duration::from_secs(300)),
        ("structural propositions", structural_propositions, Duration::from_secs(300)),
        ("exact minima", exact_minima, Duration::from_secs(600)),
        ("sat reduction", sat_reduction_check, Duration::from_secs(300)),
        ("format round trips", format_round_trips, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {}s target", limit.as_secs())),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{}] {name} ({} ms): {detail}", i + 1, took.as_millis());
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
