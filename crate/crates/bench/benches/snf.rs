use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use facetor::random::{random_matrix, seeded};
use facetor::smith_normal_form;
use std::hint::black_box;

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    let mut rng = seeded(1);
    for n in [4, 8, 12, 24] {
        let m = random_matrix(&mut rng, n, n, 9);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)))
        });
    }
    group.finish();
}

criterion_group!(benches, snf);
criterion_main!(benches);
