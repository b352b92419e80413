use crate::circuit::Circuit;
use crate::gf2linalg::{constmult_matrix, lup_decompose, Gf2Matrix, LupDecomposition};
use crate::gf2poly::{is_irreducible, ModulusSpec, Polynomial};

use super::{SynthError, SynthOptions};

/// In-place multiplication by a fixed nonzero field element, together
/// with the matrix and decomposition it was built from.
#[derive(Clone, Debug)]
pub struct ConstMult {
    pub factor: Polynomial,
    pub matrix: Gf2Matrix,
    pub lup: LupDecomposition,
    pub circuit: Circuit,
}

impl ConstMult {
    pub fn new(f: &Polynomial, m: &ModulusSpec) -> Result<Self, SynthError> {
        let matrix = constmult_matrix(f, m)?;
        let lup = lup_decompose(&matrix)?;
        let circuit = lup_circuit(&lup);
        Ok(ConstMult { factor: f.clone(), matrix, lup, circuit })
    }
}

/// Applies `U` row by row from the top, then `L` from the bottom row up,
/// then realizes `P⁻¹` as a relabel.
fn lup_circuit(lup: &LupDecomposition) -> Circuit {
    let n = lup.p_inv.len();
    let mut c = Circuit::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if lup.u.get(i, j) {
                c.cnot(j, i);
            }
        }
    }
    for i in (0..n).rev() {
        for j in (0..i).rev() {
            if lup.l.get(i, j) {
                c.cnot(j, i);
            }
        }
    }
    c.relabel(&lup.p_inv).expect("LUP permutation is a permutation");
    c
}

/// `g → f·g mod m` on `n` wires.
pub fn synth_constmult(f: &Polynomial, m: &ModulusSpec) -> Result<Circuit, SynthError> {
    Ok(ConstMult::new(f, m)?.circuit)
}

pub fn synth_constmult_with(
    f: &Polynomial,
    m: &ModulusSpec,
    opts: &SynthOptions,
) -> Result<Circuit, SynthError> {
    if opts.check_irreducible && !is_irreducible(m) {
        return Err(SynthError::Reducible(m.to_string()));
    }
    synth_constmult(f, m)
}
