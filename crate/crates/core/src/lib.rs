//! Ancilla-free reversible circuits for multiplication in binary fields
//! GF(2)[x]/m(x), built from CNOT and Toffoli gates with free wire
//! relabeling, plus a classical simulator and polynomial reference
//! arithmetic to check them against.

pub mod circuit;
pub mod gf2linalg;
pub mod gf2poly;
pub mod registry;
pub mod synth;
pub mod verify;

pub use circuit::{Circuit, CircuitError, Gate, GateStats};
pub use gf2linalg::{constmult_matrix, lup_decompose, matvec, Gf2Matrix, LinalgError, LupDecomposition};
pub use gf2poly::{
    field_inv, field_mul, is_irreducible, parse_modulus, poly_mod, poly_mul, Degree, ModulusError,
    ModulusSpec, PolyError, Polynomial,
};
pub use synth::{RegisterLayout, SynthError, SynthOptions};
