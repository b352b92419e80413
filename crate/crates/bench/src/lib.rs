//! Shared fixtures for the criterion benchmarks.

use qmul_core::registry::default_modulus;
use qmul_core::ModulusSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Degrees benchmarked by default, each with its registered field polynomial.
pub const DEGREES: &[usize] = &[16, 64, 163, 283, 571];

pub fn field(degree: usize) -> ModulusSpec {
    default_modulus(degree).expect("degree is registered")
}

/// 64 random inputs per wire, bit-sliced, with the accumulator cleared.
pub fn random_lanes(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..3 * n)
        .map(|w| if w < 2 * n { rng.gen() } else { 0 })
        .collect()
}
