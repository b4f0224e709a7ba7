use std::hint::black_box;
use std::num::NonZeroU64;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subtuple_bench::SCALING;
use subtuple_core::{
    pvalue_exhaustive, pvalue_fast, pvalue_montecarlo, pvalue_naive, Budget, ProblemInstance,
    RemainderPoolMode,
};

fn fast_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("pvalue_fast");
    group.sample_size(10);
    for (n, x, y, z) in SCALING {
        let inst = ProblemInstance::new(n, x, y, z).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(inst), &inst, |b, inst| {
            b.iter(|| pvalue_fast(black_box(inst), RemainderPoolMode::Corrected))
        });
    }
    group.finish();
}

fn routes_small(c: &mut Criterion) {
    let inst = ProblemInstance::new(6, 10, 4, 2).unwrap();
    let mut group = c.benchmark_group("routes_n6_x10_y4_z2");
    group.bench_function("fast", |b| {
        b.iter(|| pvalue_fast(black_box(&inst), RemainderPoolMode::Corrected))
    });
    group.bench_function("naive", |b| {
        b.iter(|| {
            pvalue_naive(
                black_box(&inst),
                RemainderPoolMode::Corrected,
                Budget::DEFAULT,
            )
            .unwrap()
        })
    });
    group.bench_function("exhaustive", |b| {
        b.iter(|| pvalue_exhaustive(black_box(&inst), Budget::DEFAULT).unwrap())
    });
    group.bench_function("montecarlo_10k", |b| {
        b.iter(|| pvalue_montecarlo(black_box(&inst), NonZeroU64::new(10_000).unwrap(), 7))
    });
    group.finish();
}

criterion_group!(benches, fast_scaling, routes_small);
criterion_main!(benches);
