use crate::circuit::Circuit;
use crate::gf2poly::ModulusSpec;

use super::basic::append_modshift;
use super::{RegisterLayout, SynthError};

/// `C += f·g` with one Toffoli per coefficient pair.
pub fn append_schoolbook(c: &mut Circuit, a: &[usize], b: &[usize], acc: &[usize]) {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    debug_assert!(acc.len() >= 2 * n - 1);
    for i in 0..n {
        for j in 0..n {
            c.toffoli(a[i], b[j], acc[i + j]);
        }
    }
}

/// Horner evaluation over the coefficients of `f`, highest first, with a
/// modular shift of `C` between consecutive groups of `n` Toffolis.
///
/// Computes `C ← x^(n-1)·C + f·g mod m`, which is `f·g mod m` for the
/// all-zero accumulator every field multiplier starts from.
pub fn append_schoolbook_mod(
    c: &mut Circuit,
    m: &ModulusSpec,
    a: &[usize],
    b: &[usize],
    acc: &[usize],
) {
    let n = a.len();
    debug_assert_eq!(m.n(), n);
    for i in (0..n).rev() {
        if i + 1 < n {
            append_modshift(c, m, acc);
        }
        for j in 0..n {
            c.toffoli(a[i], b[j], acc[j]);
        }
    }
}

/// Schoolbook multiplier. Without a modulus the accumulator has `2n - 1`
/// wires and receives `f·g`; with one it has `n` wires and receives
/// `f·g mod m`.
pub fn synth_schoolbook(n: usize, m: Option<&ModulusSpec>) -> Result<Circuit, SynthError> {
    if n == 0 {
        return Err(SynthError::EmptyOperand);
    }
    let layout = match m {
        None => RegisterLayout::kmult(n),
        Some(m) if m.n() != n => return Err(SynthError::FieldSizeMismatch { n, field: m.n() }),
        Some(_) => RegisterLayout::modmult(n),
    };
    let (a, b, acc) = layout.wires();
    let mut c = Circuit::new(layout.qubits());
    match m {
        None => append_schoolbook(&mut c, &a, &b, &acc),
        Some(m) => append_schoolbook_mod(&mut c, m, &a, &b, &acc),
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::{field_mul, parse_modulus, poly_mul, Polynomial};

    fn pack(parts: &[(&Polynomial, usize)]) -> Vec<bool> {
        parts.iter().flat_map(|(p, len)| p.to_bits(*len)).collect()
    }

    #[test]
    fn single_toffoli() {
        let c = synth_schoolbook(1, None).unwrap();
        let s = c.stats();
        assert_eq!((s.tof_count, s.cnot_count, s.qubits), (1, 0, 3));
    }

    #[test]
    fn plain_n2() {
        let c = synth_schoolbook(2, None).unwrap();
        let f = Polynomial::from_exponents(&[0, 1]);
        let out = c.simulate(&pack(&[(&f, 2), (&f, 2), (&Polynomial::zero(), 3)])).unwrap();
        assert_eq!(Polynomial::from_bits(&out[4..]), Polynomial::from_exponents(&[0, 2]));
        assert_eq!(c.stats().tof_count, 4);
    }

    #[test]
    fn plain_accumulates_exhaustive_n3() {
        let c = synth_schoolbook(3, None).unwrap();
        for v in 0u64..(1 << 11) {
            let f = Polynomial::from_limbs(vec![v & 7]);
            let g = Polynomial::from_limbs(vec![(v >> 3) & 7]);
            let h = Polynomial::from_limbs(vec![v >> 6]);
            let out = c.simulate(&pack(&[(&f, 3), (&g, 3), (&h, 5)])).unwrap();
            assert_eq!(Polynomial::from_bits(&out[6..]), h.add(&poly_mul(&f, &g)));
            assert_eq!(Polynomial::from_bits(&out[..6]), f.add(&g.shl(3)));
        }
    }

    #[test]
    fn modular_counts_and_values() {
        let m = parse_modulus("4,1,0").unwrap();
        let c = synth_schoolbook(4, Some(&m)).unwrap();
        let s = c.stats();
        assert_eq!((s.tof_count, s.cnot_count, s.qubits), (16, 3, 12));
        let z = Polynomial::zero();
        for v in 0u64..256 {
            let f = Polynomial::from_limbs(vec![v & 15]);
            let g = Polynomial::from_limbs(vec![v >> 4]);
            let out = c.simulate(&pack(&[(&f, 4), (&g, 4), (&z, 4)])).unwrap();
            assert_eq!(Polynomial::from_bits(&out[8..]), field_mul(&f, &g, &m));
            assert_eq!(Polynomial::from_bits(&out[..8]), f.add(&g.shl(4)));
        }
    }

    #[test]
    fn modular_cnot_count_formula() {
        for text in ["8,4,3,1,0", "16,5,3,1,0", "127,1,0", "163,7,6,3,0"] {
            let m = parse_modulus(text).unwrap();
            let n = m.n();
            let s = synth_schoolbook(n, Some(&m)).unwrap().stats();
            assert_eq!(s.tof_count, n * n);
            assert_eq!(s.cnot_count, (n - 1) * (m.weight() - 2));
        }
    }

    #[test]
    fn modular_size_mismatch() {
        let m = parse_modulus("4,1,0").unwrap();
        assert_eq!(
            synth_schoolbook(5, Some(&m)).unwrap_err(),
            SynthError::FieldSizeMismatch { n: 5, field: 4 }
        );
    }
}
