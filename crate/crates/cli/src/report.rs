use std::io::Write;
use std::time::Duration;

use qmul_core::verify::{Target, Verification};
use qmul_core::{Circuit, GateStats, ModulusSpec};
use serde::Serialize;

/// JSON document printed by `synth` and `verify`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub kind: &'static str,
    pub modulus: Option<ModulusSpec>,
    pub n: usize,
    /// Hex constant for `constmult`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    pub stats: GateStats,
    pub verification: Option<Verification>,
    pub duration_ms: f64,
}

impl RunReport {
    pub fn new(
        command: String,
        target: &Target,
        circuit: &Circuit,
        verification: Option<Verification>,
        elapsed: Duration,
    ) -> Self {
        let factor = match target {
            Target::Constmult { factor, .. } => Some(factor.to_hex()),
            _ => None,
        };
        RunReport {
            command,
            kind: target.name(),
            modulus: target.modulus().cloned(),
            n: target.size(),
            factor,
            stats: circuit.stats(),
            verification,
            duration_ms: elapsed.as_secs_f64() * 1e3,
        }
    }

    /// One JSON object on a single line. A closed stdout is not an error.
    pub fn print(&self) {
        let mut out = std::io::stdout().lock();
        if serde_json::to_writer(&mut out, self).is_ok() {
            let _ = writeln!(out);
        }
    }
}
