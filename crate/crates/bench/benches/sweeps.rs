use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use whalg::builders::{build_a_g_omega, build_b_g_omega};
use whalg::double::sharp_iso;
use whalg::exactmath::Cyclotomic;
use whalg::groups::standard_cocycle;
use whalg::skeleton::pointed_skeleton;
use whalg::wha::{verify_antipode, verify_quasitriangular, verify_weak_bialgebra_with, Sweep};
use whalg_bench::sweep_inputs;

fn cyclotomic(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclotomic");
    for n in [3u32, 8, 12] {
        let x = Cyclotomic::root(n, 1) + Cyclotomic::from_int(n, 2);
        let y = Cyclotomic::root(n, 2) + Cyclotomic::root(n, n as i64 - 1);
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |b, _| b.iter(|| black_box(&x) * black_box(&y)));
        group.bench_with_input(BenchmarkId::new("inverse", n), &n, |b, _| b.iter(|| black_box(&x).inverse()));
    }
    group.finish();
}

fn builders(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for (name, omega) in sweep_inputs(4) {
        group.bench_with_input(BenchmarkId::new("b_g_omega", &name), &omega, |b, w| b.iter(|| build_b_g_omega(w).unwrap()));
        group.bench_with_input(BenchmarkId::new("a_g_omega", &name), &omega, |b, w| b.iter(|| build_a_g_omega(w).unwrap()));
    }
    group.finish();
}

fn verifiers(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, omega) in sweep_inputs(3) {
        let (a, r) = build_a_g_omega(&omega).unwrap();
        for (mode, sweep) in [("pruned", Sweep::Pruned), ("exhaustive", Sweep::Exhaustive)] {
            group.bench_with_input(BenchmarkId::new(format!("bialgebra_{mode}"), &name), &a, |b, a| {
                b.iter(|| verify_weak_bialgebra_with(a, sweep))
            });
        }
        group.bench_with_input(BenchmarkId::new("antipode", &name), &a, |b, a| b.iter(|| verify_antipode(a)));
        group.bench_with_input(BenchmarkId::new("quasitriangular", &name), &a, |b, a| {
            b.iter_batched(|| r.clone(), |r| verify_quasitriangular(a, &r), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn double(c: &mut Criterion) {
    let mut group = c.benchmark_group("double");
    group.sample_size(10);
    for p in 0..2 {
        let cat = pointed_skeleton(&standard_cocycle(2, p).unwrap());
        group.bench_with_input(BenchmarkId::new("sharp_iso/z2", p), &cat, |b, cat| b.iter(|| sharp_iso(cat).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, cyclotomic, builders, verifiers, double);
criterion_main!(benches);
