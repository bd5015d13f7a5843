use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tsr_bench::random_pair_from;
use tsr_core::generators::gen_lower_bound;
use tsr_core::oracle::{bfs_reconfigurable, IntervalView};
use tsr_core::{decide_and_construct, reconfigure_to_extreme};

fn lower_bound_family(c: &mut Criterion) {
    let mut group = c.benchmark_group("lower_bound_decide");
    for &(m, k) in &[(2, 2), (4, 3), (8, 4), (16, 6)] {
        let inst = gen_lower_bound(m, k);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("m{m}_k{k}")),
            &inst,
            |b, inst| {
                b.iter(|| {
                    decide_and_construct(black_box(&inst.graph), k, &inst.initial, &inst.target).unwrap()
                })
            },
        );
    }
    group.finish();
}

fn random_canonicalize(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_canonicalize");
    for &n in &[20usize, 50, 100] {
        let k = 4;
        let (g, i, _) = random_pair_from(n, k, 11);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, i), |b, (g, i)| {
            b.iter(|| reconfigure_to_extreme(black_box(g), k, i).unwrap())
        });
    }
    group.finish();
}

fn oracle_vs_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("small_instance");
    let (g, i, j) = random_pair_from(10, 3, 5);
    let view = IntervalView::new(&g);
    let (si, sj) = (view.state(&i), view.state(&j));
    group.bench_function("solver", |b| {
        b.iter(|| decide_and_construct(black_box(&g), 3, &i, &j).unwrap())
    });
    group.bench_function("bfs_oracle", |b| {
        b.iter(|| bfs_reconfigurable(black_box(&view.graph), &si, &sj).unwrap())
    });
    group.finish();
}

criterion_group!(benches, lower_bound_family, random_canonicalize, oracle_vs_solver);
criterion_main!(benches);
