use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use ss2zeta::oracle::brute_counts;
use ss2zeta::zeta::count_points;
use ss2zeta::FieldCtx;
use ss2zeta_bench::sample_curves;

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_points");
    for m in [5u32, 8, 12, 16, 20] {
        let ctx = FieldCtx::new(m).unwrap();
        let curves = sample_curves(&ctx, 64);
        group.bench_with_input(BenchmarkId::from_parameter(m), &curves, |b, curves| {
            b.iter(|| {
                for cv in curves {
                    black_box(count_points(&ctx, cv).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_counts");
    group.sample_size(10);
    for m in [5u32, 6, 8] {
        let ctx = FieldCtx::new(m).unwrap();
        let curves = sample_curves(&ctx, 8);
        group.bench_with_input(BenchmarkId::from_parameter(m), &curves, |b, curves| {
            b.iter(|| {
                for cv in curves {
                    black_box(brute_counts(&ctx, cv).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, closed_form, brute_force);
criterion_main!(benches);
