use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tanhspec::{
    analyze_full, diff_apply, diff_coeffs, fourier_transform, mult_op, multiplier_coeffs, solve_first_order,
    ChebyshevKind, Expansion, JacobiParams,
};
use tanhspec_bench::{chebyshev_spec, coefficients};

fn differentiation(c: &mut Criterion) {
    let d = diff_coeffs(&JacobiParams::new(0.5, 0.5).unwrap(), 1 << 14);
    let v = coefficients(1 << 14);
    c.bench_function("diff_apply/16384", |b| b.iter(|| diff_apply(&d, black_box(&v)).unwrap()));
}

fn multiplication(c: &mut Criterion) {
    let mut group = c.benchmark_group("mult_apply");
    let a = multiplier_coeffs(|x: f64| 2.0 + x.tanh() + 0.3 * x.tanh().powi(2), 64).unwrap();
    for m in [2usize, 8, 32] {
        let op = mult_op(&a, m, 4096).unwrap();
        let v = coefficients(4096);
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, _| b.iter(|| op.apply(black_box(&v)).unwrap()));
    }
    group.finish();
}

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_first_order");
    group.sample_size(20);
    let spec = chebyshev_spec(ChebyshevKind::T);
    let a = multiplier_coeffs(|x: f64| 2.0 + x.tanh(), 64).unwrap();
    for n in [256usize, 1024, 4096] {
        let rhs = analyze_full(&spec, |x| (-x * x).exp(), n + 2).unwrap();
        let op = mult_op(&a, 2, n).unwrap();
        let d = diff_coeffs(spec.params(), n + 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| solve_first_order(&d, &op, &rhs, n).unwrap())
        });
    }
    group.finish();
}

fn fourier(c: &mut Criterion) {
    let e = Expansion::new(chebyshev_spec(ChebyshevKind::U), coefficients(64)).unwrap();
    let xi: Vec<f64> = (0..256).map(|k| -20.0 + 40.0 * k as f64 / 255.0).collect();
    c.bench_function("fourier_transform/64x256", |b| b.iter(|| fourier_transform(&e, black_box(&xi)).unwrap()));
}

criterion_group!(benches, differentiation, multiplication, solve, fourier);
criterion_main!(benches);
