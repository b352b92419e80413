use proptest::prelude::*;
use qmul_core::registry::CONSTMULT_TABLE;
use qmul_core::synth::{synth_constmult, synth_kmult};
use qmul_core::{field_inv, field_mul, poly_mod, poly_mul, Circuit, Gate, ModulusSpec, Polynomial};

fn poly(max_limbs: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(any::<u64>(), 0..=max_limbs).prop_map(Polynomial::from_limbs)
}

fn small_modulus() -> impl Strategy<Value = ModulusSpec> {
    let small: Vec<ModulusSpec> =
        CONSTMULT_TABLE.iter().filter(|e| e.degree <= 283).map(|e| e.modulus()).collect();
    prop::sample::select(small)
}

fn gate(qubits: usize) -> impl Strategy<Value = Gate> {
    let cnot = (0..qubits, 0..qubits - 1).prop_map(|(c, t)| Gate::cnot(c, if t >= c { t + 1 } else { t }));
    let tof = prop::sample::subsequence((0..qubits).collect::<Vec<_>>(), 3).prop_shuffle().prop_map(|w| Gate::toffoli(w[0], w[1], w[2]));
    prop_oneof![cnot, tof]
}

fn circuit() -> impl Strategy<Value = Circuit> {
    (3usize..12).prop_flat_map(|q| {
        (prop::collection::vec(gate(q), 0..60), Just((0..q).collect::<Vec<_>>()).prop_shuffle()).prop_map(
            move |(gates, perm)| {
                let mut c = Circuit::new(q);
                for g in gates {
                    c.append_gate(g).unwrap();
                }
                c.relabel(&perm).unwrap();
                c
            },
        )
    })
}

proptest! {
    #[test]
    fn multiplication_is_a_commutative_ring(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(poly_mul(&a, &b), poly_mul(&b, &a));
        prop_assert_eq!(poly_mul(&poly_mul(&a, &b), &c), poly_mul(&a, &poly_mul(&b, &c)));
        prop_assert_eq!(poly_mul(&a, &b.add(&c)), poly_mul(&a, &b).add(&poly_mul(&a, &c)));
    }

    #[test]
    fn reduction_commutes_with_multiplication(m in small_modulus(), a in poly(6), b in poly(6)) {
        let lhs = poly_mod(&poly_mul(&a, &b), &m);
        prop_assert_eq!(lhs, field_mul(&poly_mod(&a, &m), &poly_mod(&b, &m), &m));
    }

    #[test]
    fn inverse_round_trip(m in small_modulus(), a in poly(5)) {
        let a = poly_mod(&a, &m);
        prop_assume!(!a.is_zero());
        let inv = field_inv(&a, &m).unwrap();
        prop_assert!(field_mul(&a, &inv, &m).is_one());
    }

    #[test]
    fn hex_round_trip(a in poly(4)) {
        prop_assert_eq!(Polynomial::from_hex(&a.to_hex()).unwrap(), a);
    }

    #[test]
    fn netlist_round_trip(c in circuit()) {
        let text = c.to_netlist();
        let back = Circuit::parse_netlist(&text).unwrap();
        prop_assert_eq!(back.to_netlist(), text);
        prop_assert_eq!(back.stats(), c.stats());
    }

    #[test]
    fn inverse_undoes_random_circuits(c in circuit(), seed in any::<u64>()) {
        let lanes: Vec<u64> = (0..c.qubits() as u64).map(|i| seed.rotate_left(i as u32) ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15)).collect();
        let back = c.inverted().simulate_lanes(&c.simulate_lanes(&lanes).unwrap()).unwrap();
        prop_assert_eq!(back, lanes);
    }

    #[test]
    fn constmult_matches_field_mul(m in small_modulus(), f in poly(5), g in poly(5)) {
        let f = poly_mod(&f, &m);
        prop_assume!(!f.is_zero());
        let g = poly_mod(&g, &m);
        let c = synth_constmult(&f, &m).unwrap();
        let out = c.simulate(&g.to_bits(m.n())).unwrap();
        prop_assert_eq!(Polynomial::from_bits(&out), field_mul(&f, &g, &m));
    }

    #[test]
    fn kmult_accumulates_products(n in 1usize..40, f in poly(1), g in poly(1), h in poly(2)) {
        let (f, g, h) = (f.truncate(n), g.truncate(n), h.truncate(2 * n - 1));
        let c = synth_kmult(n).unwrap();
        let mut state = f.to_bits(n);
        state.extend(g.to_bits(n));
        state.extend(h.to_bits(2 * n - 1));
        let out = c.simulate(&state).unwrap();
        prop_assert_eq!(Polynomial::from_bits(&out[2 * n..]), h.add(&poly_mul(&f, &g)));
        prop_assert_eq!(&out[..2 * n], &state[..2 * n]);
    }
}
