//! Tab-separated resource tables regenerated from live synthesis. Cells
//! that differ from the published figures are listed in the `diff` column.

use std::fmt::Write as _;

use qmul_core::registry::{CONSTMULT_TABLE, MODMULT_TABLE};
use qmul_core::synth::{synth_constmult, synth_modmult, synth_schoolbook};
use qmul_core::{Polynomial, SynthError};

fn diff_column(cells: &[(&str, usize, usize)]) -> String {
    let differing: Vec<String> = cells
        .iter()
        .filter(|(_, ours, published)| ours != published)
        .map(|(name, _, published)| format!("{name}(published {published})"))
        .collect();
    if differing.is_empty() {
        "-".to_string()
    } else {
        differing.join(",")
    }
}

pub fn constmult() -> Result<String, SynthError> {
    let mut out = String::from("degree\tpolynomial\tsource\tcnot\tdepth\tdiff\n");
    for e in CONSTMULT_TABLE {
        let m = e.modulus();
        let f = Polynomial::from_exponents(&[0, m.n().div_ceil(2)]);
        let s = synth_constmult(&f, &m)?.stats();
        let diff = diff_column(&[
            ("cnot", s.cnot_count, e.published_cnot),
            ("depth", s.depth_greedy, e.published_depth),
        ]);
        let _ = writeln!(
            out,
            "{}\t[{}]\t{}\t{}\t{}\t{}",
            e.degree, m, e.source, s.cnot_count, s.depth_greedy, diff
        );
    }
    Ok(out)
}

pub fn modmult() -> Result<String, SynthError> {
    let mut out = String::from("degree\tpolynomial\tschoolbook_tof\ttof\tcnot\tdepth\tdiff\n");
    for e in MODMULT_TABLE {
        let m = e.modulus();
        let school = synth_schoolbook(m.n(), Some(&m))?.stats();
        let s = synth_modmult(&m)?.stats();
        let diff = diff_column(&[
            ("schoolbook_tof", school.tof_count, e.schoolbook_tof),
            ("tof", s.tof_count, e.published_tof),
            ("cnot", s.cnot_count, e.published_cnot),
            ("depth", s.depth_greedy, e.published_depth),
        ]);
        let _ = writeln!(
            out,
            "{}\t[{}]\t{}\t{}\t{}\t{}\t{}",
            e.degree, m, school.tof_count, s.tof_count, s.cnot_count, s.depth_greedy, diff
        );
    }
    Ok(out)
}
