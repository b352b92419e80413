//! Simulates synthesized circuits against the polynomial reference.
//!
//! Inputs are evaluated 64 at a time with bit-sliced simulation, and
//! batches run in parallel. Aggregation keeps the counterexample with the
//! lowest trial index, so the result does not depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, CircuitError};
use crate::gf2poly::{field_mul, poly_mod, poly_mul, ModulusSpec, Polynomial};
use crate::synth::{self, SynthError, SynthOptions};

/// Largest `n` accepted in exhaustive mode.
pub const EXHAUSTIVE_MAX_N: usize = 12;
/// Largest number of free input bits accepted in exhaustive mode.
pub const EXHAUSTIVE_MAX_BITS: usize = 26;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("exhaustive mode needs n <= {EXHAUSTIVE_MAX_N} and at most {EXHAUSTIVE_MAX_BITS} free input bits (n = {n}, {bits} bits)")]
    TooLargeForExhaustive { n: usize, bits: usize },
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// A circuit family together with its reference semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// Field multiplication, `C = 0 → f·g mod m`.
    Modmult { modulus: ModulusSpec },
    /// `C += f·g` in GF(2)[x].
    Kmult { n: usize },
    /// `C += (1 + x^k)·f·g`.
    Mult1xk { k: usize, n: usize },
    /// `C += f·g`, or `f·g mod m` from a zero accumulator.
    Schoolbook { n: usize, modulus: Option<ModulusSpec> },
    /// `G → factor·G mod m`.
    Constmult { factor: Polynomial, modulus: ModulusSpec },
    /// `G → x·G mod m`.
    Modshift { modulus: ModulusSpec },
    /// `(a, b) → (a, a + b)` for degree at most `n`.
    Add { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Register {
    pub name: &'static str,
    pub len: usize,
    /// Free registers are enumerated or randomized; the rest start at zero.
    pub free: bool,
}

fn reg(name: &'static str, len: usize, free: bool) -> Register {
    Register { name, len, free }
}

impl Target {
    pub fn name(&self) -> &'static str {
        match self {
            Target::Modmult { .. } => "modmult",
            Target::Kmult { .. } => "kmult",
            Target::Mult1xk { .. } => "mult1xk",
            Target::Schoolbook { .. } => "schoolbook",
            Target::Constmult { .. } => "constmult",
            Target::Modshift { .. } => "modshift",
            Target::Add { .. } => "add",
        }
    }

    /// Operand size used for the exhaustive-mode bound.
    pub fn size(&self) -> usize {
        match self {
            Target::Modmult { modulus } | Target::Modshift { modulus } => modulus.n(),
            Target::Constmult { modulus, .. } => modulus.n(),
            Target::Kmult { n } | Target::Mult1xk { n, .. } | Target::Schoolbook { n, .. } => *n,
            Target::Add { n } => n + 1,
        }
    }

    pub fn modulus(&self) -> Option<&ModulusSpec> {
        match self {
            Target::Modmult { modulus }
            | Target::Modshift { modulus }
            | Target::Constmult { modulus, .. }
            | Target::Schoolbook { modulus: Some(modulus), .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn build(&self, opts: &SynthOptions) -> Result<Circuit, SynthError> {
        match self {
            Target::Modmult { modulus } => synth::synth_modmult_with(modulus, opts),
            Target::Kmult { n } => synth::synth_kmult_with(*n, opts),
            Target::Mult1xk { k, n } => synth::synth_mult1xk(*k, *n),
            Target::Schoolbook { n, modulus } => synth::synth_schoolbook(*n, modulus.as_ref()),
            Target::Constmult { factor, modulus } => synth::synth_constmult_with(factor, modulus, opts),
            Target::Modshift { modulus } => Ok(synth::synth_modshift(modulus)),
            Target::Add { n } => Ok(synth::synth_add(*n)),
        }
    }

    /// Registers in wire order; their lengths sum to the qubit count.
    pub fn registers(&self) -> Vec<Register> {
        match self {
            Target::Modmult { modulus } => {
                let n = modulus.n();
                vec![reg("a", n, true), reg("b", n, true), reg("c", n, false)]
            }
            Target::Kmult { n } => vec![reg("a", *n, true), reg("b", *n, true), reg("c", 2 * n - 1, true)],
            Target::Mult1xk { k, n } => {
                vec![reg("a", *n, true), reg("b", *n, true), reg("c", k + 2 * n - 1, true)]
            }
            Target::Schoolbook { n, modulus: None } => {
                vec![reg("a", *n, true), reg("b", *n, true), reg("c", 2 * n - 1, true)]
            }
            Target::Schoolbook { n, modulus: Some(_) } => {
                vec![reg("a", *n, true), reg("b", *n, true), reg("c", *n, false)]
            }
            Target::Constmult { modulus, .. } | Target::Modshift { modulus } => {
                vec![reg("g", modulus.n(), true)]
            }
            Target::Add { n } => vec![reg("a", n + 1, true), reg("b", n + 1, true)],
        }
    }

    /// Reference output for every register.
    pub fn expected(&self, inputs: &[Polynomial]) -> Vec<Polynomial> {
        match self {
            Target::Modmult { modulus } => {
                vec![inputs[0].clone(), inputs[1].clone(), field_mul(&inputs[0], &inputs[1], modulus)]
            }
            Target::Kmult { .. } | Target::Schoolbook { modulus: None, .. } => {
                let fg = poly_mul(&inputs[0], &inputs[1]);
                vec![inputs[0].clone(), inputs[1].clone(), inputs[2].add(&fg)]
            }
            Target::Mult1xk { k, .. } => {
                let fg = poly_mul(&inputs[0], &inputs[1]);
                let shifted = fg.add(&fg.shl(*k));
                vec![inputs[0].clone(), inputs[1].clone(), inputs[2].add(&shifted)]
            }
            Target::Schoolbook { n, modulus: Some(m) } => {
                let acc = inputs[2].shl(n - 1).add(&poly_mul(&inputs[0], &inputs[1]));
                vec![inputs[0].clone(), inputs[1].clone(), poly_mod(&acc, m)]
            }
            Target::Constmult { factor, modulus } => vec![field_mul(factor, &inputs[0], modulus)],
            Target::Modshift { modulus } => {
                vec![field_mul(&Polynomial::monomial(1), &inputs[0], modulus)]
            }
            Target::Add { .. } => vec![inputs[0].clone(), inputs[0].add(&inputs[1])],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub register: String,
    /// Hex, least significant digit holding `x^0 .. x^3`.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub input: Vec<NamedValue>,
    pub expected: Vec<NamedValue>,
    pub actual: Vec<NamedValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: usize,
    pub passed: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

const LANES: usize = 64;

/// Splits the bits of `index` across the free registers, low bits first.
fn exhaustive_inputs(regs: &[Register], index: u64) -> Vec<Polynomial> {
    let mut shift = 0;
    regs.iter()
        .map(|r| {
            if !r.free {
                return Polynomial::zero();
            }
            let v = (index >> shift) & ((1u64 << r.len) - 1);
            shift += r.len;
            Polynomial::from_limbs(vec![v])
        })
        .collect()
}

fn named(regs: &[Register], values: &[Polynomial]) -> Vec<NamedValue> {
    regs.iter()
        .zip(values)
        .map(|(r, v)| NamedValue { register: r.name.to_string(), value: v.to_hex() })
        .collect()
}

/// Runs one batch of up to 64 trials; returns failures and the first
/// failing trial, if any.
fn run_batch(
    circuit: &Circuit,
    target: &Target,
    regs: &[Register],
    first_trial: usize,
    batch: &[Vec<Polynomial>],
) -> Result<(usize, Option<Counterexample>), CircuitError> {
    let mut lanes = vec![0u64; circuit.qubits()];
    for (lane, inputs) in batch.iter().enumerate() {
        let mut wire = 0;
        for (r, p) in regs.iter().zip(inputs) {
            for e in p.exponents() {
                debug_assert!(e < r.len);
                lanes[wire + e] |= 1 << lane;
            }
            wire += r.len;
        }
    }
    let out = circuit.simulate_lanes(&lanes)?;
    let mut failures = 0;
    let mut first = None;
    for (lane, inputs) in batch.iter().enumerate() {
        let mut wire = 0;
        let actual: Vec<Polynomial> = regs
            .iter()
            .map(|r| {
                let bits: Vec<bool> = (0..r.len).map(|i| (out[wire + i] >> lane) & 1 == 1).collect();
                wire += r.len;
                Polynomial::from_bits(&bits)
            })
            .collect();
        let expected = target.expected(inputs);
        if actual != expected {
            failures += 1;
            if first.is_none() {
                first = Some(Counterexample {
                    trial: first_trial + lane,
                    input: named(regs, inputs),
                    expected: named(regs, &expected),
                    actual: named(regs, &actual),
                });
            }
        }
    }
    Ok((failures, first))
}

/// Checks `circuit` against the reference semantics of `target`.
pub fn verify_circuit(circuit: &Circuit, target: &Target, mode: Mode) -> Result<Verification, VerifyError> {
    let regs = target.registers();
    let total_len: usize = regs.iter().map(|r| r.len).sum();
    if total_len != circuit.qubits() {
        return Err(CircuitError::LengthMismatch { expected: circuit.qubits(), got: total_len }.into());
    }

    // Random inputs are drawn up front so they depend only on the seed;
    // exhaustive inputs are produced per batch from the trial index.
    let (random_inputs, trials, mode_name, seed) = match mode {
        Mode::Exhaustive => {
            let bits: usize = regs.iter().filter(|r| r.free).map(|r| r.len).sum();
            if target.size() > EXHAUSTIVE_MAX_N || bits > EXHAUSTIVE_MAX_BITS {
                return Err(VerifyError::TooLargeForExhaustive { n: target.size(), bits });
            }
            (None, 1usize << bits, "exhaustive", None)
        }
        Mode::Random { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let all: Vec<Vec<Polynomial>> = (0..trials)
                .map(|_| {
                    regs.iter()
                        .map(|r| {
                            if r.free {
                                Polynomial::random(&mut rng, r.len)
                            } else {
                                Polynomial::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            (Some(all), trials, "random", Some(seed))
        }
    };

    let results = (0..trials.div_ceil(LANES))
        .into_par_iter()
        .map(|b| {
            let range = b * LANES..trials.min((b + 1) * LANES);
            let batch: Vec<Vec<Polynomial>> = match &random_inputs {
                Some(all) => all[range].to_vec(),
                None => range.map(|i| exhaustive_inputs(&regs, i as u64)).collect(),
            };
            run_batch(circuit, target, &regs, b * LANES, &batch)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let failures = results.iter().map(|r| r.0).sum();
    let counterexample = results
        .into_iter()
        .filter_map(|r| r.1)
        .min_by_key(|c| c.trial);
    Ok(Verification {
        mode: mode_name.to_string(),
        seed,
        trials,
        passed: trials - failures,
        failures,
        counterexample,
    })
}

/// Builds the circuit for `target` and verifies it.
pub fn verify(target: &Target, opts: &SynthOptions, mode: Mode) -> Result<Verification, VerifyError> {
    let circuit = target.build(opts)?;
    verify_circuit(&circuit, target, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::parse_modulus;

    fn m(t: &str) -> ModulusSpec {
        parse_modulus(t).unwrap()
    }

    #[test]
    fn exhaustive_modmult_n4() {
        let v = verify(&Target::Modmult { modulus: m("4,1,0") }, &SynthOptions::default(), Mode::Exhaustive)
            .unwrap();
        assert_eq!((v.trials, v.passed, v.failures), (256, 256, 0));
    }

    #[test]
    fn exhaustive_every_target() {
        let targets = [
            Target::Kmult { n: 2 },
            Target::Kmult { n: 5 },
            Target::Mult1xk { k: 3, n: 2 },
            Target::Schoolbook { n: 3, modulus: None },
            Target::Schoolbook { n: 5, modulus: Some(m("5,2,0")) },
            Target::Constmult { factor: Polynomial::from_exponents(&[0, 4]), modulus: m("8,4,3,1,0") },
            Target::Modshift { modulus: m("10,3,0") },
            Target::Add { n: 6 },
        ];
        for t in targets {
            let v = verify(&t, &SynthOptions::default(), Mode::Exhaustive).unwrap();
            assert!(v.ok(), "{t:?}: {v:?}");
            assert_eq!(v.trials, 1 << t.registers().iter().filter(|r| r.free).map(|r| r.len).sum::<usize>());
        }
    }

    #[test]
    fn random_mode_is_deterministic() {
        let t = Target::Modmult { modulus: m("163,7,6,3,0") };
        let mode = Mode::Random { trials: 100, seed: 1 };
        let a = verify(&t, &SynthOptions::default(), mode).unwrap();
        let b = verify(&t, &SynthOptions::default(), mode).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.trials, a.failures), (100, 0));
    }

    #[test]
    fn broken_circuit_reports_first_counterexample() {
        let t = Target::Modmult { modulus: m("4,1,0") };
        let mut c = t.build(&SynthOptions::default()).unwrap();
        c.cnot(0, 8);
        let v = verify_circuit(&c, &t, Mode::Exhaustive).unwrap();
        assert!(!v.ok());
        assert_eq!(v.failures, 128);
        let ce = v.counterexample.unwrap();
        // First trial with f_0 = 1.
        assert_eq!(ce.trial, 1);
        assert_eq!(ce.input[0].value, "1");
    }

    #[test]
    fn exhaustive_bound() {
        let t = Target::Kmult { n: 8 };
        assert!(matches!(
            verify(&t, &SynthOptions::default(), Mode::Exhaustive),
            Err(VerifyError::TooLargeForExhaustive { .. })
        ));
    }
}
