use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gabi_core::exactalg::{FieldSpec, Matrix};
use gabi_core::fixtures;
use gabi_core::gabi::{search_gabi, EpsChoice};
use gabi_core::modcat::{normality_check_with, regular_module};
use gabi_core::settheory::{search_monoid_gabi, Level};
use gabi_core::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn gabi_search(c: &mut Criterion) {
    let f2 = FieldSpec::PrimeField(2);
    let a = fixtures::cyclic_group_algebra(f2, 3);
    let eps = Matrix::from_i64(f2, &[&[1, 1, 1]]);
    let mut group = c.benchmark_group("search_gabi/F2[C3]");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| search_gabi(&a, EpsChoice::Given(eps.clone()), u128::MAX, exec).unwrap())
        });
    }
    group.finish();
}

fn monoid_search(c: &mut Criterion) {
    let m = fixtures::symmetric_group3();
    let mut group = c.benchmark_group("search_monoid_gabi/S3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| search_monoid_gabi(&m, Level::FullLift, u128::MAX, exec).unwrap())
        });
    }
    group.finish();
}

fn normality(c: &mut Criterion) {
    let g = fixtures::sweedler_h4_gabi();
    let extra = [regular_module(g.algebra()).renamed("regular-2")];
    let mut group = c.benchmark_group("normality_check/H4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| b.iter(|| normality_check_with(&g, &extra, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, gabi_search, monoid_search, normality);
criterion_main!(benches);
