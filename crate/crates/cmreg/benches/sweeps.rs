//! Throughput benchmarks over realistic parameter sweeps.
//!
//! The `rank-table-rows` group drives the same per-row kernel two ways —
//! a sequential iterator and a rayon parallel iterator — so the two can be
//! compared directly. The remaining benchmarks measure the public batch
//! APIs, whose internal strategy follows the crate's `parallel` feature
//! (rebuild with `--no-default-features` to measure the sequential core).

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::prelude::*;

use cmreg::beilinson;
use cmreg::bounds;
use cmreg::projection::VarietySpec;

/// A box of scroll specs paired with every admissible projection target:
/// a few hundred rows of rank-table work.
fn sweep_rows() -> Vec<(VarietySpec, usize)> {
    let mut rows = Vec::new();
    for n in 2..=4usize {
        for r in (n + 2)..=10usize {
            for g in 0..=2i64 {
                for extra in 0..=2i64 {
                    let d = (r + 1 - n) as i64 + (n as i64) * g + extra;
                    let name = format!("scroll-{n}-{r}-g{g}-e{extra}");
                    let spec = VarietySpec::scroll(name, n, d, g, r)
                        .expect("sweep parameters are valid");
                    for m in (n + 1)..=r {
                        rows.push((spec.clone(), m));
                    }
                }
            }
        }
    }
    rows
}

fn bench_row_sweep(c: &mut Criterion) {
    let rows = sweep_rows();
    let mut group = c.benchmark_group("rank-table-rows");
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let results: Vec<_> = rows
                .iter()
                .map(|(spec, m)| bounds::rank_table_bound(black_box(spec), *m))
                .collect();
            black_box(results)
        })
    });
    group.bench_function("rayon", |b| {
        b.iter(|| {
            let results: Vec<_> = rows
                .par_iter()
                .map(|(spec, m)| bounds::rank_table_bound(black_box(spec), *m))
                .collect();
            black_box(results)
        })
    });
    group.finish();
}

fn bench_bound_table(c: &mut Criterion) {
    let spec = VarietySpec::scroll("bench-scroll", 4, 19, 3, 10).expect("valid scroll");
    c.bench_function("bound-table-api", |b| {
        b.iter(|| black_box(bounds::bound_table(black_box(&spec), None, false)))
    });
}

fn bench_coefficient_identity(c: &mut Criterion) {
    c.bench_function("coefficient-identity-16x10", |b| {
        b.iter(|| black_box(beilinson::verify_coefficient_identity(16, 10)))
    });
}

criterion_group!(
    benches,
    bench_row_sweep,
    bench_bound_table,
    bench_coefficient_identity
);
criterion_main!(benches);
