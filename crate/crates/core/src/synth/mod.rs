//! Circuit builders for binary-field arithmetic.
//!
//! Each construction comes in two forms: a `synth_*` function that returns
//! a standalone circuit over a fixed [`RegisterLayout`], and an `append_*`
//! function that emits the same gates onto an existing circuit over
//! arbitrary logical wires. The recursive Karatsuba builders use the latter.
//! Emission order follows the line order of each algorithm, which fixes the
//! greedy depth and makes netlists reproducible.

mod basic;
mod constmult;
mod karatsuba;
mod modmult;
mod schoolbook;

pub use basic::{append_modshift, append_modshift_inverse, synth_add, synth_modshift};
pub use constmult::{synth_constmult, synth_constmult_with, ConstMult};
pub use karatsuba::{append_kmult, append_mult1xk, synth_kmult, synth_kmult_with, synth_mult1xk};
pub use modmult::{synth_modmult, synth_modmult_with};
pub use schoolbook::{append_schoolbook, append_schoolbook_mod, synth_schoolbook};

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::CircuitError;
use crate::gf2linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("operand size must be at least 1")]
    EmptyOperand,
    #[error("MULT1x_k needs 1 <= n <= k, got n = {n}, k = {k}")]
    SplitTooSmall { n: usize, k: usize },
    #[error("operand size {n} does not match field degree {field}")]
    FieldSizeMismatch { n: usize, field: usize },
    #[error("field degree {0} is too small; GF(2) multiplication is a single Toffoli")]
    FieldTooSmall(usize),
    #[error("modulus {0} is reducible")]
    Reducible(String),
}

/// Tuning knobs shared by the Karatsuba builders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthOptions {
    /// Operands of at most this size are multiplied with schoolbook
    /// Toffolis instead of recursing. `None` recurses down to size 1.
    pub schoolbook_cutoff: Option<usize>,
    /// Reject reducible moduli before building field circuits.
    pub check_irreducible: bool,
}

/// Placement of the operand registers `A`, `B` and the accumulator `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisterLayout {
    pub n: usize,
    /// Split point; `⌈n/2⌉` for Karatsuba, the shift amount for MULT1x_k.
    pub k: usize,
    /// `max(0, 2n - 1 - k)`.
    pub ell: usize,
    pub a_off: usize,
    pub b_off: usize,
    pub c_off: usize,
    pub c_len: usize,
}

impl RegisterLayout {
    fn packed(n: usize, k: usize, c_len: usize) -> Self {
        RegisterLayout {
            n,
            k,
            ell: (2 * n).saturating_sub(1 + k),
            a_off: 0,
            b_off: n,
            c_off: 2 * n,
            c_len,
        }
    }

    /// `C += f·g` over GF(2)[x]; `C` has `2n - 1` wires.
    pub fn kmult(n: usize) -> Self {
        Self::packed(n, n.div_ceil(2), 2 * n - 1)
    }

    /// `C += (1 + x^k)·f·g`; `C` has `k + 2n - 1` wires.
    pub fn mult1xk(k: usize, n: usize) -> Self {
        Self::packed(n, k, k + 2 * n - 1)
    }

    /// Field multiplication; `C` has `n` wires.
    pub fn modmult(n: usize) -> Self {
        Self::packed(n, n.div_ceil(2), n)
    }

    pub fn qubits(&self) -> usize {
        self.c_off + self.c_len
    }

    pub fn a(&self) -> Range<usize> {
        self.a_off..self.a_off + self.n
    }

    pub fn b(&self) -> Range<usize> {
        self.b_off..self.b_off + self.n
    }

    pub fn c(&self) -> Range<usize> {
        self.c_off..self.c_off + self.c_len
    }

    pub(crate) fn wires(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        (self.a().collect(), self.b().collect(), self.c().collect())
    }
}
