use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use dcgraph::closure::closure_with;
use dcgraph::generators::{clique_family, p3f_family};
use dcgraph::random::{random_trimmed_dag, rng};
use dcgraph::search::{min_dc, verify_uniform_hardness, SearchConfig};
use dcgraph::{AcceptedFamily, Execution, LabelSet};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn config(max_edges: usize, execution: Execution) -> SearchConfig {
    let mut c = SearchConfig::new(max_edges);
    c.execution = execution;
    c
}

fn bench_min_dc(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_dc");
    group.sample_size(10);
    let targets = [
        ("clique3", clique_family(3).unwrap(), 5),
        (
            "four_singletons",
            AcceptedFamily::from_sets(4, (0..4).map(LabelSet::singleton)).unwrap(),
            4,
        ),
    ];
    for (name, f, k) in &targets {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(*name, mode), f, |b, f| {
                b.iter(|| min_dc(black_box(f), &config(*k, exec)).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_uniform(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_uniform");
    group.sample_size(10);
    let f = clique_family(3).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new("clique3", mode), |b| {
            b.iter(|| verify_uniform_hardness(black_box(&f), &config(5, exec)).unwrap())
        });
    }
    group.finish();
}

fn bench_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    let g = closure_with(&p3f_family(5).unwrap().trivial_graph(), Execution::Sequential).unwrap();
    let dag = random_trimmed_dag(&mut rng(11), 40, 60, 400, 0.1);
    for (name, g) in [("p3f5_trivial", &g), ("random_dag", &dag)] {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, mode), g, |b, g| {
                b.iter(|| closure_with(black_box(g), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_min_dc, bench_uniform, bench_closure);
criterion_main!(benches);
