use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use facetor::moment_angle::s2s1_poincare;
use facetor::oracle::verify_complement;
use facetor::{tor_bigraded, Coefficients};
use facetor_bench::{cross_polytope, five_vertex, rp2, three_edges};
use std::hint::black_box;

fn tor(c: &mut Criterion) {
    let mut group = c.benchmark_group("tor_bigraded");
    for (name, p) in [("five_vertex", five_vertex()), ("rp2", rp2())] {
        for coeff in [Coefficients::Rationals, Coefficients::Integers] {
            group.bench_with_input(BenchmarkId::new(name, coeff), &p, |b, p| {
                b.iter(|| tor_bigraded(black_box(p), coeff).unwrap())
            });
        }
    }
    for n in [3, 5, 7] {
        let p = cross_polytope(n);
        group.bench_with_input(BenchmarkId::new("cross_polytope", n), &p, |b, p| {
            b.iter(|| tor_bigraded(black_box(p), Coefficients::Rationals).unwrap())
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let tor = tor_bigraded(&three_edges(), Coefficients::Rationals).unwrap();
    c.bench_function("multiplication_table/three_edges", |b| {
        b.iter(|| tor.multiplication_table().unwrap())
    });
}

fn moment_angle(c: &mut Criterion) {
    let p = three_edges();
    c.bench_function("s2s1_poincare/three_edges", |b| {
        b.iter(|| s2s1_poincare(black_box(&p), Coefficients::Rationals).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let p = rp2();
    c.bench_function("verify_complement/rp2/z", |b| {
        b.iter(|| verify_complement(black_box(&p), Coefficients::Integers).unwrap())
    });
}

criterion_group!(benches, tor, products, moment_angle, oracle);
criterion_main!(benches);
