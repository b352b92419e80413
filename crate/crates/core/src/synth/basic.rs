use crate::circuit::Circuit;
use crate::gf2poly::ModulusSpec;

/// `(a, b) → (a, a + b)` for polynomials of degree at most `n`.
/// Wires `0..=n` hold `a`, wires `n+1..=2n+1` hold `b`.
pub fn synth_add(n: usize) -> Circuit {
    let len = n + 1;
    let mut c = Circuit::new(2 * len);
    for i in 0..len {
        c.cnot(i, len + i);
    }
    c
}

/// `g → x·g mod m` on `n` wires.
pub fn synth_modshift(m: &ModulusSpec) -> Circuit {
    let mut c = Circuit::new(m.n());
    let wires: Vec<usize> = (0..m.n()).collect();
    append_modshift(&mut c, m, &wires);
    c
}

/// Multiplies the polynomial on `wires` by `x` modulo `m`: a cyclic
/// relabel moves `x^(n-1)` to `x^0`, then that wire is added onto each
/// middle term of `m`.
pub fn append_modshift(c: &mut Circuit, m: &ModulusSpec, wires: &[usize]) {
    let n = m.n();
    assert_eq!(wires.len(), n, "MODSHIFT register must have n wires");
    let rotate: Vec<usize> = (0..n).map(|j| (j + n - 1) % n).collect();
    c.relabel_wires(wires, &rotate).expect("rotation is a permutation");
    for &e in m.middle_exponents() {
        c.cnot(wires[0], wires[e]);
    }
}

/// Divides the polynomial on `wires` by `x` modulo `m`.
pub fn append_modshift_inverse(c: &mut Circuit, m: &ModulusSpec, wires: &[usize]) {
    let n = m.n();
    assert_eq!(wires.len(), n, "MODSHIFT register must have n wires");
    for &e in m.middle_exponents().iter().rev() {
        c.cnot(wires[0], wires[e]);
    }
    let rotate: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
    c.relabel_wires(wires, &rotate).expect("rotation is a permutation");
}
