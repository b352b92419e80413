//! Ancilla-free Karatsuba multiplication in GF(2)[x].
//!
//! `KMULT` adds `f·g` into an accumulator of `2n - 1` wires. It splits at
//! `k = ⌈n/2⌉` and uses
//!
//! ```text
//! h + f·g = h + (1 + x^k)·α + x^k·γ + x^k·(1 + x^k)·β
//! α = f₀g₀,  β = f₁g₁,  γ = (f₀ + f₁)(g₀ + g₁)
//! ```
//!
//! The `(1 + x^k)` factors are handled by `MULT1x_k`, which folds the
//! accumulator onto itself with CNOTs, runs one `KMULT`, and unfolds it.
//! The sum `f₀ + f₁` is formed in place inside `A`/`B` and undone again, so
//! no ancilla wires are needed.

use crate::circuit::Circuit;

use super::schoolbook::append_schoolbook;
use super::{RegisterLayout, SynthError, SynthOptions};

/// `acc += (1 + x^k)·f·g` where `f`, `g` live on `a`, `b` (size `n <= k`)
/// and `acc` has `k + 2n - 1` wires.
pub fn append_mult1xk(
    c: &mut Circuit,
    k: usize,
    a: &[usize],
    b: &[usize],
    acc: &[usize],
    opts: &SynthOptions,
) {
    let n = a.len();
    assert!(n >= 1 && n <= k, "MULT1x_k needs 1 <= n <= k");
    assert_eq!(b.len(), n);
    assert_eq!(acc.len(), k + 2 * n - 1, "MULT1x_k accumulator size");

    if n == 1 {
        c.cnot(acc[k], acc[0]);
        c.toffoli(a[0], b[0], acc[k]);
        c.cnot(acc[k], acc[0]);
        return;
    }

    let ell = (2 * n).saturating_sub(1 + k);
    // Only differs from k when ell was clamped to zero.
    let fold = k.min(acc.len() - k);

    for i in 0..ell {
        c.cnot(acc[2 * k + i], acc[k + i]);
    }
    for i in 0..fold {
        c.cnot(acc[k + i], acc[i]);
    }
    append_kmult(c, a, b, &acc[k..k + 2 * n - 1], opts);
    for i in 0..fold {
        c.cnot(acc[k + i], acc[i]);
    }
    for i in 0..ell {
        c.cnot(acc[2 * k + i], acc[k + i]);
    }
}

/// `acc += f·g` where `f`, `g` have `n` coefficients and `acc` has
/// `2n - 1` wires. `a` and `b` are restored on exit.
pub fn append_kmult(c: &mut Circuit, a: &[usize], b: &[usize], acc: &[usize], opts: &SynthOptions) {
    let n = a.len();
    assert!(n >= 1, "KMULT operands must be nonempty");
    assert_eq!(b.len(), n);
    assert_eq!(acc.len(), 2 * n - 1, "KMULT accumulator size");

    if n == 1 {
        c.toffoli(a[0], b[0], acc[0]);
        return;
    }
    if opts.schoolbook_cutoff.is_some_and(|t| n <= t) {
        append_schoolbook(c, a, b, acc);
        return;
    }

    let k = n.div_ceil(2);
    append_mult1xk(c, k, &a[..k], &b[..k], &acc[..3 * k - 1], opts);
    append_mult1xk(c, k, &a[k..], &b[k..], &acc[k..], opts);
    for i in 0..n - k {
        c.cnot(a[k + i], a[i]);
    }
    for i in 0..n - k {
        c.cnot(b[k + i], b[i]);
    }
    append_kmult(c, &a[..k], &b[..k], &acc[k..3 * k - 1], opts);
    for i in 0..n - k {
        c.cnot(b[k + i], b[i]);
    }
    for i in 0..n - k {
        c.cnot(a[k + i], a[i]);
    }
}

/// Standalone `MULT1x_k` over [`RegisterLayout::mult1xk`].
pub fn synth_mult1xk(k: usize, n: usize) -> Result<Circuit, SynthError> {
    if n == 0 || n > k {
        return Err(SynthError::SplitTooSmall { n, k });
    }
    let layout = RegisterLayout::mult1xk(k, n);
    let (a, b, acc) = layout.wires();
    let mut c = Circuit::new(layout.qubits());
    append_mult1xk(&mut c, k, &a, &b, &acc, &SynthOptions::default());
    Ok(c)
}

/// Standalone `KMULT` over [`RegisterLayout::kmult`].
pub fn synth_kmult(n: usize) -> Result<Circuit, SynthError> {
    synth_kmult_with(n, &SynthOptions::default())
}

pub fn synth_kmult_with(n: usize, opts: &SynthOptions) -> Result<Circuit, SynthError> {
    if n == 0 {
        return Err(SynthError::EmptyOperand);
    }
    let layout = RegisterLayout::kmult(n);
    let (a, b, acc) = layout.wires();
    let mut c = Circuit::new(layout.qubits());
    append_kmult(&mut c, &a, &b, &acc, opts);
    Ok(c)
}
