use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lagcore::atlas::{pullback_residual, symplecto_entry};
use lagcore::lagrangians::{set_equal, t_af, t_ep};
use std::hint::black_box;

fn pullback_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("pullback_sweep");
    g.sample_size(20);
    for id in ["phi1", "PsiP", "ThetaQ"] {
        let e = symplecto_entry(id).unwrap();
        for (label, parallel) in [("sequential", false), ("parallel", true)] {
            g.bench_with_input(BenchmarkId::new(label, id), &e, |b, e| {
                b.iter(|| black_box(pullback_residual(e, 2000, 7, parallel)))
            });
        }
    }
    g.finish();
}

fn set_equality(c: &mut Criterion) {
    let mut g = c.benchmark_group("set_equal");
    g.sample_size(20);
    let (a, b) = (t_af(), t_ep());
    for (label, parallel) in [("sequential", false), ("parallel", true)] {
        g.bench_function(label, |bch| bch.iter(|| black_box(set_equal(&a, &b, 5000, 7, parallel))));
    }
    g.finish();
}

criterion_group!(benches, pullback_sweep, set_equality);
criterion_main!(benches);
