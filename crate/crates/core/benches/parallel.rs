//! Parallel-versus-sequential benchmarks for the two bulk workloads:
//! rasterization and the theorem-versus-oracle sweep.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selfaffine::criteria::CollinearDigitSet;
use selfaffine::render::{rasterize, rasterize_seq, RasterConfig};
use selfaffine::sweep::{theorem_oracle_sweep, theorem_oracle_sweep_seq, SweepRange};
use selfaffine::Quadratic;

fn bench_rasterize(c: &mut Criterion) {
    let mut group = c.benchmark_group("rasterize");
    group.sample_size(10);
    for (b, cc, m, size) in [(-10i64, 24i64, 15i64, 384usize), (6, 12, 7, 384)] {
        let quad = Quadratic::new(b, cc);
        let digits = CollinearDigitSet::consecutive(m).unwrap();
        let config = RasterConfig {
            size,
            ..RasterConfig::default()
        };
        let label = format!("b{b}_c{cc}_m{m}_{size}px");
        group.bench_with_input(BenchmarkId::new("parallel", &label), &(), |bench, ()| {
            bench.iter(|| rasterize(quad, &digits, &config).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &(), |bench, ()| {
            bench.iter(|| rasterize_seq(quad, &digits, &config).unwrap())
        });
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let range = SweepRange {
        b_min: -6,
        b_max: 6,
        c_min: -20,
        c_max: 20,
        m_max: None,
    };
    group.bench_function("parallel", |bench| {
        bench.iter(|| theorem_oracle_sweep(&range))
    });
    group.bench_function("sequential", |bench| {
        bench.iter(|| theorem_oracle_sweep_seq(&range))
    });
    group.finish();
}

criterion_group!(benches, bench_rasterize, bench_sweep);
criterion_main!(benches);
