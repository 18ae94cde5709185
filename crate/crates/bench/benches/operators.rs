use criterion::{black_box, criterion_group, criterion_main, Criterion};

use schubcurve::dual::{enumerate_chains, esh, ev};
use schubcurve::ktheory::{k_coeff, parity_scan};
use schubcurve::monodromy::{preset_orbits, with_box, OrderingPreset};
use schubcurve::osculating::minor_identity_check;
use schubcurve::Partition;
use schubcurve_bench::{g38, g49};

fn chains(c: &mut Criterion) {
    let (types, rect) = g38();
    let boxed = with_box(&types, 2);
    c.bench_function("enumerate_chains g38", |b| {
        b.iter(|| enumerate_chains(&Partition::empty(), &rect.full(), black_box(&boxed)))
    });
    let set = enumerate_chains(&Partition::empty(), &rect.full(), &boxed);
    c.bench_function("esh_3 on g38 chains", |b| {
        b.iter(|| set.iter().map(|d| esh(d, 3).unwrap()).collect::<Vec<_>>())
    });
    c.bench_function("ev_5 on g38 chains", |b| {
        b.iter(|| set.iter().map(|d| ev(d, 5).unwrap()).collect::<Vec<_>>())
    });
}

fn monodromy(c: &mut Criterion) {
    let (types, rect) = g38();
    c.bench_function("box-second orbits g38", |b| {
        b.iter(|| preset_orbits(black_box(&types), rect, &OrderingPreset::BoxSecond).unwrap())
    });
}

fn ktheory(c: &mut Criterion) {
    let (a, be, g, rect) = g49();
    let mut group = c.benchmark_group("ktheory");
    group.sample_size(10);
    group.bench_function("k_coeff g49", |b| {
        b.iter(|| k_coeff(&a, &be, &g, rect).unwrap())
    });
    group.bench_function("parity_scan 2x4", |b| {
        b.iter(|| parity_scan(schubcurve::Rectangle::new(2, 4).unwrap()).unwrap())
    });
    group.finish();
}

fn osculating(c: &mut Criterion) {
    let mut group = c.benchmark_group("osculating");
    group.sample_size(10);
    group.bench_function("minor identity n=6", |b| {
        b.iter(|| minor_identity_check(6, 1, 10))
    });
    group.finish();
}

criterion_group!(benches, chains, monodromy, ktheory, osculating);
criterion_main!(benches);
