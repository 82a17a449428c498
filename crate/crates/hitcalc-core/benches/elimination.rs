//! Sequential vs data-parallel comparison of the elimination core on
//! representative quotient computations.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hitcalc_core::quotient::{HitCalc, HitCalcConfig, Strategy, DEFAULT_COLUMN_CAP};
use hitcalc_core::ExecMode;

fn engine(mode: ExecMode, strategy: Strategy) -> HitCalc {
    HitCalc::with_config(HitCalcConfig {
        column_cap: DEFAULT_COLUMN_CAP,
        mode,
        strategy,
    })
}

fn bench_quotient(c: &mut Criterion) {
    let cases = [(4usize, 15u64), (5usize, 14u64), (5usize, 20u64)];
    let mut group = c.benchmark_group("quotient_basis");
    group.sample_size(10);
    for (t, n) in cases {
        group.bench_with_input(
            BenchmarkId::new("sequential", format!("t{t}_n{n}")),
            &(t, n),
            |b, &(t, n)| {
                b.iter(|| {
                    let e = engine(ExecMode::Sequential, Strategy::Blocked);
                    e.quotient_basis(t, n).unwrap().dim()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", format!("t{t}_n{n}")),
            &(t, n),
            |b, &(t, n)| {
                b.iter(|| {
                    let e = engine(ExecMode::Parallel, Strategy::Blocked);
                    e.quotient_basis(t, n).unwrap().dim()
                })
            },
        );
    }
    group.finish();
}

fn bench_direct_vs_blocked(c: &mut Criterion) {
    let mut group = c.benchmark_group("strategy");
    group.sample_size(10);
    for (t, n) in [(4usize, 12u64), (5usize, 14u64)] {
        group.bench_with_input(
            BenchmarkId::new("direct", format!("t{t}_n{n}")),
            &(t, n),
            |b, &(t, n)| {
                b.iter(|| {
                    let e = engine(ExecMode::default(), Strategy::Direct);
                    e.quotient_basis(t, n).unwrap().dim()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("blocked", format!("t{t}_n{n}")),
            &(t, n),
            |b, &(t, n)| {
                b.iter(|| {
                    let e = engine(ExecMode::default(), Strategy::Blocked);
                    e.quotient_basis(t, n).unwrap().dim()
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_quotient, bench_direct_vs_blocked);
criterion_main!(benches);
