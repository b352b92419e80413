use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use qmul_bench::{field, random_lanes, DEGREES};
use qmul_core::synth::synth_modmult;
use qmul_core::verify::{verify_circuit, Mode, Target};

fn lanes(c: &mut Criterion) {
    let mut group = c.benchmark_group("simulate_lanes");
    for &n in DEGREES {
        let circuit = synth_modmult(&field(n)).unwrap();
        let input = random_lanes(n, 7);
        group.throughput(Throughput::Elements(circuit.gates().len() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &input, |b, input| {
            b.iter(|| circuit.simulate_lanes(input).unwrap())
        });
    }
    group.finish();
}

fn random_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_random_100");
    group.sample_size(10);
    for &n in &[163, 571] {
        let m = field(n);
        let circuit = synth_modmult(&m).unwrap();
        let target = Target::Modmult { modulus: m };
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| verify_circuit(&circuit, &target, Mode::Random { trials: 100, seed: 1 }).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, lanes, random_verification);
criterion_main!(benches);
