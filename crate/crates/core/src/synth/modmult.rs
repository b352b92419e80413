use crate::circuit::Circuit;
use crate::gf2poly::{is_irreducible, ModulusSpec, Polynomial};

use super::basic::append_modshift;
use super::constmult::ConstMult;
use super::karatsuba::append_kmult;
use super::{RegisterLayout, SynthError, SynthOptions};

/// Field multiplier on `3n` wires: `A = f`, `B = g`, `C = 0` on input;
/// `C = f·g mod m` on output with `A` and `B` restored.
///
/// With `k = ⌈n/2⌉` the accumulator evolves as
///
/// ```text
/// γ → (1+x^k)⁻¹γ → (1+x^k)⁻¹γ + β → x^k((1+x^k)⁻¹γ + β) → ... + α
///   → (1+x^k)α + x^kγ + x^k(1+x^k)β  (mod m)
/// ```
pub fn synth_modmult(m: &ModulusSpec) -> Result<Circuit, SynthError> {
    synth_modmult_with(m, &SynthOptions::default())
}

pub fn synth_modmult_with(m: &ModulusSpec, opts: &SynthOptions) -> Result<Circuit, SynthError> {
    let n = m.n();
    if n < 2 {
        return Err(SynthError::FieldTooSmall(n));
    }
    if opts.check_irreducible && !is_irreducible(m) {
        return Err(SynthError::Reducible(m.to_string()));
    }
    let layout = RegisterLayout::modmult(n);
    let k = layout.k;
    let (a, b, acc) = layout.wires();

    let shift = ConstMult::new(&Polynomial::from_exponents(&[0, k]), m)?;
    let unshift = shift.circuit.inverted();

    let mut c = Circuit::new(layout.qubits());
    for i in 0..n - k {
        c.cnot(a[k + i], a[i]);
    }
    for i in 0..n - k {
        c.cnot(b[k + i], b[i]);
    }
    append_kmult(&mut c, &a[..k], &b[..k], &acc[..2 * k - 1], opts);
    for i in 0..n - k {
        c.cnot(b[k + i], b[i]);
    }
    for i in 0..n - k {
        c.cnot(a[k + i], a[i]);
    }
    c.append_circuit(&unshift, &acc)?;
    append_kmult(&mut c, &a[k..], &b[k..], &acc[..2 * (n - k) - 1], opts);
    for _ in 0..k {
        append_modshift(&mut c, m, &acc);
    }
    append_kmult(&mut c, &a[..k], &b[..k], &acc[..2 * k - 1], opts);
    c.append_circuit(&shift.circuit, &acc)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::{field_mul, parse_modulus};
    use crate::synth::synth_kmult;

    fn run(c: &Circuit, n: usize, f: &Polynomial, g: &Polynomial) -> Vec<Polynomial> {
        let mut s = f.to_bits(n);
        s.extend(g.to_bits(n));
        s.extend(vec![false; n]);
        let out = c.simulate(&s).unwrap();
        out.chunks(n).map(Polynomial::from_bits).collect()
    }

    #[test]
    fn degree_two() {
        let m = parse_modulus("2,1,0").unwrap();
        let c = synth_modmult(&m).unwrap();
        let x = Polynomial::monomial(1);
        assert_eq!(run(&c, 2, &x, &x)[2], Polynomial::from_exponents(&[0, 1]));
        let s = c.stats();
        assert_eq!((s.tof_count, s.cnot_count, s.qubits), (3, 9, 6));
    }

    #[test]
    fn degree_four() {
        let m = parse_modulus("4,1,0").unwrap();
        let c = synth_modmult(&m).unwrap();
        let x3 = Polynomial::monomial(3);
        assert_eq!(run(&c, 4, &x3, &x3)[2], Polynomial::from_exponents(&[2, 3]));
        let s = c.stats();
        assert_eq!((s.tof_count, s.cnot_count, s.qubits), (9, 44, 12));
    }

    #[test]
    fn exhaustive_small_fields() {
        for text in ["2,1,0", "3,1,0", "4,1,0", "5,2,0", "6,1,0"] {
            let m = parse_modulus(text).unwrap();
            let n = m.n();
            let c = synth_modmult(&m).unwrap();
            for v in 0u64..(1 << (2 * n)) {
                let f = Polynomial::from_limbs(vec![v & ((1 << n) - 1)]);
                let g = Polynomial::from_limbs(vec![v >> n]);
                let out = run(&c, n, &f, &g);
                assert_eq!(out, vec![f.clone(), g.clone(), field_mul(&f, &g, &m)], "{text}");
            }
        }
    }

    #[test]
    fn toffolis_are_three_kmults() {
        for text in ["8,4,3,1,0", "16,5,3,1,0", "127,1,0"] {
            let m = parse_modulus(text).unwrap();
            let n = m.n();
            let k = n.div_ceil(2);
            let expect = 2 * synth_kmult(k).unwrap().stats().tof_count
                + synth_kmult(n - k).unwrap().stats().tof_count;
            assert_eq!(synth_modmult(&m).unwrap().stats().tof_count, expect);
        }
    }

    #[test]
    fn rejects_degree_one_and_reducible() {
        let m = parse_modulus("4,2,0").unwrap();
        let opts = SynthOptions { check_irreducible: true, ..Default::default() };
        assert!(matches!(synth_modmult_with(&m, &opts), Err(SynthError::Reducible(_))));
    }
}
