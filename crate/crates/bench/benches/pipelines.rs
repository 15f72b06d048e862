use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use d2lab_bench::{constructs, extension, pair, weak, EXTENSIONS, PAIRS, WEAK};
use d2lab_core::depth_two::is_d2;
use d2lab_core::pipeline;
use d2lab_core::weak_hopf::{reconstruct_antipode, self_galois};

fn depth_two(c: &mut Criterion) {
    let mut group = c.benchmark_group("depth_two");
    for name in EXTENSIONS {
        let cs = constructs(name);
        group.bench_with_input(BenchmarkId::new("quasibases", name), &cs, |b, cs| b.iter(|| is_d2(black_box(cs)).unwrap()));
    }
    group.finish();
}

fn analyze(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze_extension");
    for name in EXTENSIONS {
        let ext = extension(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &ext, |b, ext| {
            b.iter(|| pipeline::analyze_extension(name, black_box(ext)).unwrap())
        });
    }
    group.finish();
}

fn normality(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_normal");
    for name in PAIRS {
        let (h, k) = pair(name);
        group.bench_function(*name, |b| b.iter(|| pipeline::check_normal(name, black_box(&h), black_box(&k)).unwrap()));
    }
    group.finish();
}

fn weak_hopf(c: &mut Criterion) {
    let mut group = c.benchmark_group("weak_hopf");
    for name in WEAK {
        let w = weak(name);
        group.bench_with_input(BenchmarkId::new("self_galois", name), &w, |b, w| b.iter(|| self_galois(black_box(w)).unwrap()));
        group.bench_with_input(BenchmarkId::new("reconstruct", name), &w, |b, w| b.iter(|| reconstruct_antipode(black_box(w)).unwrap()));
    }
    group.finish();
}

fn config() -> Criterion {
    Criterion::default().configure_from_args().warm_up_time(Duration::from_secs(1)).measurement_time(Duration::from_secs(5)).sample_size(10)
}

criterion_group! {
    name = benches;
    config = config();
    targets = depth_two, analyze, normality, weak_hopf
}
criterion_main!(benches);
