use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use superperm_core::{build_m, search_minimal, verify, Family};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_m");
    for n in [6usize, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| build_m(black_box(n)).unwrap()));
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    for n in [7usize, 8, 9] {
        let m = build_m(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| verify(black_box(m)).unwrap()));
    }
    group.finish();
}

fn bench_family(c: &mut Criterion) {
    let f = Family::new(7).unwrap();
    let index = f.count() - 1u32;
    c.bench_function("family_get_n7_last", |b| b.iter(|| f.get(black_box(&index)).unwrap()));
    let f8 = Family::new(8).unwrap();
    let index8: BigUint = f8.count() / 3u32;
    c.bench_function("family_get_n8", |b| b.iter(|| f8.get(black_box(&index8)).unwrap()));
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_minimal");
    group.sample_size(10);
    for n in [3usize, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| search_minimal(n, None).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_build, bench_verify, bench_family, bench_search);
criterion_main!(benches);
