use braidforge::compiler::{compile_gate, density_probe, SearchConfig, TargetGate};
use braidforge_bench::jones_b3;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn compile(c: &mut Criterion) {
    let rm = jones_b3();
    let target = TargetGate::haar_su2_seeded(7);
    let mut group = c.benchmark_group("compile_gate");
    group.sample_size(10);
    for depth in [6, 8, 10] {
        let cfg = SearchConfig::with_depth(depth);
        group.bench_with_input(BenchmarkId::from_parameter(depth), &cfg, |b, cfg| {
            b.iter(|| compile_gate(black_box(&target), &rm, cfg).unwrap())
        });
    }
    group.finish();
}

fn probe(c: &mut Criterion) {
    let rm = jones_b3();
    let mut group = c.benchmark_group("density_probe");
    group.sample_size(10);
    group.bench_function("100_targets_depth_8", |b| {
        b.iter(|| density_probe(&rm, 100, black_box(8), 0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, compile, probe);
criterion_main!(benches);
