use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mlsub_bench::{random_multi, random_weighted};
use mlsub_core::matching::two_layer_matching_solve;
use mlsub_core::props::forbidden::named;
use mlsub_core::solve::kernel::{reduce_to_2chs, search_tree_solve, sunflower_kernelize};
use mlsub_core::solve::{brute_force_solve, partition_solve};
use mlsub_core::{max_weight_matching, Instance, Patterns, PropertySpec};

fn brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force");
    for n in [10, 14, 18] {
        let inst = Instance::new(
            random_multi(1, n, 3, 0.4),
            PropertySpec::Connectivity,
            n / 2,
            2,
        )
        .unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| brute_force_solve(black_box(inst)))
        });
    }
    group.finish();
}

fn partition(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition");
    for n in [50, 100, 120] {
        for pi in [
            PropertySpec::Connectivity,
            PropertySpec::CCore(2),
            PropertySpec::CTruss(3),
        ] {
            let inst = Instance::new(random_multi(2, n, 4, 0.08), pi.clone(), n / 4, 2).unwrap();
            group.bench_with_input(BenchmarkId::new(pi.to_string(), n), &inst, |b, inst| {
                b.iter(|| partition_solve(black_box(inst)).unwrap())
            });
        }
    }
    group.finish();
}

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching");
    for m in [20, 60, 120] {
        let g = random_weighted(3, m, 0.2);
        group.bench_with_input(BenchmarkId::new("max_weight", m), &g, |b, g| {
            b.iter(|| max_weight_matching(black_box(g)))
        });
    }
    for n in [20, 60, 120] {
        let g = random_multi(4, n, 2, 0.1);
        group.bench_with_input(BenchmarkId::new("two_layer", n), &g, |b, g| {
            b.iter(|| two_layer_matching_solve(g.layer(0), g.layer(1), n / 2).unwrap())
        });
    }
    group.finish();
}

fn kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("forbidden");
    let pi = PropertySpec::ForbiddenInduced(Patterns::new(vec![named::path(3)]).unwrap());
    for n in [8, 12, 16] {
        let inst = Instance::new(random_multi(5, n, 2, 0.3), pi.clone(), n - 3, 2).unwrap();
        group.bench_with_input(BenchmarkId::new("search_tree", n), &inst, |b, inst| {
            b.iter(|| search_tree_solve(black_box(inst)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("kernelize", n), &inst, |b, inst| {
            b.iter(|| sunflower_kernelize(&reduce_to_2chs(black_box(inst)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, brute, partition, matching, kernel);
criterion_main!(benches);
