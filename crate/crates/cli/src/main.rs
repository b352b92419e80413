mod report;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qmul_core::registry;
use qmul_core::verify::{verify_circuit, Mode, Target, VerifyError};
use qmul_core::{is_irreducible, Circuit, ModulusSpec, Polynomial, SynthError, SynthOptions};

use report::RunReport;

/// Default seed for random verification.
const DEFAULT_SEED: u64 = 1;
const SEED_ENV: &str = "QMUL_SEED";

#[derive(Parser, Debug)]
#[command(name = "qmul", version, about = "Ancilla-free reversible multipliers for binary fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a circuit, optionally write it out, and print its gate statistics.
    Synth {
        kind: Kind,
        #[command(flatten)]
        params: Params,
        /// Write the circuit here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Netlist)]
        format: Format,
    },
    /// Simulate a circuit against the polynomial reference.
    Verify {
        kind: Kind,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = VerifyMode::Random)]
        mode: VerifyMode,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Overridden by the QMUL_SEED environment variable.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Regenerate a resource table from live synthesis.
    Table { which: Which },
}

#[derive(clap::Args, Debug)]
struct Params {
    /// Field polynomial as descending exponents, e.g. `163,7,6,3,0`.
    #[arg(long)]
    field: Option<ModulusSpec>,
    /// Operand size (degree bound for `add`).
    #[arg(long)]
    n: Option<usize>,
    /// Shift for `mult1xk`.
    #[arg(long)]
    k: Option<usize>,
    /// Constant for `constmult` as exponents, e.g. `2,0` for 1 + x^2.
    #[arg(long)]
    poly: Option<String>,
    /// Use schoolbook Toffolis for Karatsuba operands of at most this size.
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long)]
    check_irreducible: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Modmult,
    Kmult,
    Mult1xk,
    Schoolbook,
    Constmult,
    Modshift,
    Add,
}

impl Kind {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Netlist,
    Qasm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Exhaustive,
    Random,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Constmult,
    Modmult,
}

/// Failure with the process exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<SynthError> for Failure {
    fn from(e: SynthError) -> Self {
        match e {
            SynthError::Reducible(_) => Failure { code: 3, message: e.to_string() },
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Synth(s) => s.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

fn require_field(p: &Params, kind: Kind) -> Result<ModulusSpec, Failure> {
    if let Some(m) = &p.field {
        return Ok(m.clone());
    }
    p.n.and_then(registry::default_modulus)
        .ok_or_else(|| Failure::usage(format!("{} needs --field (or --n with a registered degree)", kind.name())))
}

fn require_n(p: &Params, kind: Kind) -> Result<usize, Failure> {
    p.n.ok_or_else(|| Failure::usage(format!("{} needs --n", kind.name())))
}

fn target(kind: Kind, p: &Params) -> Result<Target, Failure> {
    let t = match kind {
        Kind::Modmult => Target::Modmult { modulus: require_field(p, kind)? },
        Kind::Modshift => Target::Modshift { modulus: require_field(p, kind)? },
        Kind::Kmult => match require_n(p, kind)? {
            0 => return Err(SynthError::EmptyOperand.into()),
            n => Target::Kmult { n },
        },
        Kind::Add => Target::Add { n: require_n(p, kind)? },
        Kind::Mult1xk => {
            let n = require_n(p, kind)?;
            let k = p.k.ok_or_else(|| Failure::usage("mult1xk needs --k"))?;
            if n == 0 || n > k {
                return Err(SynthError::SplitTooSmall { n, k }.into());
            }
            Target::Mult1xk { k, n }
        }
        Kind::Schoolbook => {
            let n = p.n.or(p.field.as_ref().map(ModulusSpec::n));
            let n = n.ok_or_else(|| Failure::usage("schoolbook needs --n or --field"))?;
            if n == 0 {
                return Err(SynthError::EmptyOperand.into());
            }
            Target::Schoolbook { n, modulus: p.field.clone() }
        }
        Kind::Constmult => {
            let modulus = require_field(p, kind)?;
            let factor = match &p.poly {
                Some(text) => Polynomial::from_exponent_list(text)
                    .map_err(|e| Failure::usage(format!("--poly: {e}")))?,
                None => Polynomial::from_exponents(&[0, modulus.n().div_ceil(2)]),
            };
            Target::Constmult { factor, modulus }
        }
    };
    if let Some(m) = t.modulus() {
        if p.check_irreducible && !is_irreducible(m) {
            return Err(SynthError::Reducible(m.to_string()).into());
        }
    }
    Ok(t)
}

fn options(p: &Params) -> SynthOptions {
    SynthOptions { schoolbook_cutoff: p.cutoff, check_irreducible: p.check_irreducible }
}

fn seed_from_env(flag: u64) -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn build(t: &Target, p: &Params) -> Result<Circuit, Failure> {
    Ok(t.build(&options(p))?)
}

fn run(cli: Cli, echo: String) -> Result<ExitCode, Failure> {
    let start = Instant::now();
    match cli.command {
        Command::Synth { kind, params, out, format } => {
            let t = target(kind, &params)?;
            let circuit = build(&t, &params)?;
            if let Some(path) = &out {
                let text = match format {
                    Format::Netlist => circuit.to_netlist(),
                    Format::Qasm => circuit.to_qasm(),
                };
                std::fs::write(path, text)
                    .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
            }
            let report = RunReport::new(echo, &t, &circuit, None, start.elapsed());
            report.print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { kind, params, mode, trials, seed } => {
            let t = target(kind, &params)?;
            let circuit = build(&t, &params)?;
            let mode = match mode {
                VerifyMode::Exhaustive => Mode::Exhaustive,
                VerifyMode::Random => Mode::Random { trials, seed: seed_from_env(seed)? },
            };
            let v = verify_circuit(&circuit, &t, mode)?;
            let ok = v.ok();
            if let Some(ce) = &v.counterexample {
                eprintln!("counterexample at trial {}:", ce.trial);
                for ((i, e), a) in ce.input.iter().zip(&ce.expected).zip(&ce.actual) {
                    eprintln!("  {}: in {} expected {} got {}", i.register, i.value, e.value, a.value);
                }
            }
            let report = RunReport::new(echo, &t, &circuit, Some(v), start.elapsed());
            report.print();
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Table { which } => {
            let text = match which {
                Which::Constmult => table::constmult(),
                Which::Modmult => table::modmult(),
            }
            .map_err(Failure::from)?;
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let echo = args[1..].join(" ");
    let cli = Cli::parse();
    match run(cli, echo) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
