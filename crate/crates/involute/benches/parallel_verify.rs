//! Compares the rayon-backed verification checks against their
//! sequential twins, and the two triple-based algorithms against each
//! other, on a mid-size fixture.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use involute::engine::{gerdt, vargerdt, CriteriaConfig};
use involute::poly::Polynomial;
use involute::sysfile::parse_system;
use involute::verify;

fn load_fixture(name: &str) -> Vec<Polynomial> {
    let path = format!("{}/fixtures/{name}.sys", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_system(&text).unwrap().polynomials
}

fn bench_verification(c: &mut Criterion) {
    let system = load_fixture("noon4");
    let basis = vargerdt(&system, &CriteriaConfig::c1_c2(), None)
        .unwrap()
        .basis;

    let mut group = c.benchmark_group("theorem5_certificate");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| assert!(verify::theorem5_certificate(&basis)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| assert!(verify::theorem5_certificate_sequential(&basis)))
    });
    group.finish();

    let mut group = c.benchmark_group("spoly_reductions");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| assert!(verify::spolys_reduce_to_zero(&basis)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| assert!(verify::spolys_reduce_to_zero_sequential(&basis)))
    });
    group.finish();
}

fn bench_algorithms(c: &mut Criterion) {
    let system = load_fixture("noon4");
    let cfg = CriteriaConfig::c1_c2();

    let mut group = c.benchmark_group("noon4_basis");
    group.sample_size(10);
    group.bench_function("vargerdt", |b| {
        b.iter_batched(
            || system.clone(),
            |sys| vargerdt(&sys, &cfg, None).unwrap(),
            BatchSize::LargeInput,
        )
    });
    group.bench_function("gerdt", |b| {
        b.iter_batched(
            || system.clone(),
            |sys| gerdt(&sys, &cfg, None).unwrap(),
            BatchSize::LargeInput,
        )
    });
    group.finish();
}

criterion_group!(benches, bench_verification, bench_algorithms);
criterion_main!(benches);
