use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qmul_bench::{field, DEGREES};
use qmul_core::synth::{synth_constmult, synth_kmult, synth_modmult};
use qmul_core::{constmult_matrix, lup_decompose, Polynomial};

fn modmult(c: &mut Criterion) {
    let mut group = c.benchmark_group("synth_modmult");
    for &n in DEGREES {
        let m = field(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| synth_modmult(m).unwrap())
        });
    }
    group.finish();
}

fn kmult(c: &mut Criterion) {
    let mut group = c.benchmark_group("synth_kmult");
    for &n in DEGREES {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| synth_kmult(n).unwrap())
        });
    }
    group.finish();
}

fn constmult(c: &mut Criterion) {
    let mut group = c.benchmark_group("constmult");
    for &n in DEGREES {
        let m = field(n);
        let f = Polynomial::from_exponents(&[0, n.div_ceil(2)]);
        let gamma = constmult_matrix(&f, &m).unwrap();
        group.bench_with_input(BenchmarkId::new("lup", n), &gamma, |b, g| {
            b.iter(|| lup_decompose(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("synth", n), &(f, m), |b, (f, m)| {
            b.iter(|| synth_constmult(f, m).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, modmult, kmult, constmult);
criterion_main!(benches);
