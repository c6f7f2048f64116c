//! Command-line front end: single-shot matrix functions, the theta tables,
//! and the two error-versus-cost benchmark experiments.

mod bench;
mod table;

use chebmat::driver::{
    cosm_sinm, cossin_diag_oracle, expm_diag_oracle, expm_pade, expm_skew_hermitian,
    SpectralBounds,
};
use chebmat::matcore::{
    format_complex_matrix, format_real_matrix, parse_matrix, ParsedMatrix,
};
use chebmat::{ComplexMatrix, CostLedger, RealMatrix};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chebmat", version, about = "Matrix exponentials of skew-Hermitian matrices via minimal-product Chebyshev schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Cheb,
    Pade,
    Diag,
}

#[derive(Args)]
struct MatFnArgs {
    /// Input matrix file (line 1: n; then n rows of entries, `re` or
    /// `re,im`).
    matrix: PathBuf,
    /// Lower eigenvalue bound (requires --emax).
    #[arg(long, requires = "emax", allow_hyphen_values = true)]
    emin: Option<f64>,
    /// Upper eigenvalue bound (requires --emin).
    #[arg(long, requires = "emin", allow_hyphen_values = true)]
    emax: Option<f64>,
    /// Exponential backend.
    #[arg(long, value_enum, default_value = "cheb")]
    backend: BackendArg,
    /// Print the product-count ledger to stderr.
    #[arg(long)]
    report_cost: bool,
    /// Output file (stdout when absent).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exp(-i*A) of a Hermitian matrix.
    Expm(MatFnArgs),
    /// Compute cos(A) and sin(A) of a real symmetric matrix.
    Cossin(MatFnArgs),
    /// Recompute the validity-radius tables and check them against the
    /// published values (CSV; nonzero exit on any FAIL).
    ThetaTable {
        /// Output file (stdout when absent).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run one benchmark experiment and emit error-versus-cost CSV rows.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expm(args) => run_expm(&args),
        Command::Cossin(args) => run_cossin(&args),
        Command::ThetaTable { output } => table::run(output.as_deref()),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn read_matrix(path: &PathBuf) -> Result<ParsedMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_matrix(&text).map_err(|e| e.to_string())
}

fn bounds_of(args: &MatFnArgs) -> Result<Option<SpectralBounds>, String> {
    match (args.emin, args.emax) {
        (Some(lo), Some(hi)) => SpectralBounds::new(lo, hi)
            .map(Some)
            .map_err(|e| e.to_string()),
        _ => Ok(None),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_cost(ledger: &CostLedger) {
    eprintln!(
        "products: complex={} real={} inverses={} total={}",
        ledger.complex_products,
        ledger.real_products,
        ledger.inverses,
        ledger.total_cost()
    );
}

fn run_expm(args: &MatFnArgs) -> Result<ExitCode, String> {
    let a = read_matrix(&args.matrix)?.into_complex();
    let bounds = bounds_of(args)?;
    let mut ledger = CostLedger::new();
    let u = match args.backend {
        BackendArg::Cheb => expm_skew_hermitian(&a, bounds.as_ref(), &mut ledger),
        BackendArg::Pade => expm_pade(&a, &mut ledger),
        BackendArg::Diag => expm_diag_oracle(&a),
    }
    .map_err(|e| e.to_string())?;
    if args.report_cost {
        report_cost(&ledger);
    }
    emit(args.output.as_ref(), &format_complex_matrix(&u))?;
    Ok(ExitCode::SUCCESS)
}

fn run_cossin(args: &MatFnArgs) -> Result<ExitCode, String> {
    let a: RealMatrix = match read_matrix(&args.matrix)? {
        ParsedMatrix::Real(r) => r,
        ParsedMatrix::Complex(_) => {
            return Err("cossin requires a real symmetric matrix".into())
        }
    };
    let bounds = bounds_of(args)?;
    let mut ledger = CostLedger::new();
    let (cos, sin) = match args.backend {
        BackendArg::Cheb => cosm_sinm(&a, bounds.as_ref(), &mut ledger).map_err(|e| e.to_string())?,
        BackendArg::Pade => {
            let u = expm_pade(&ComplexMatrix::from_real(&a), &mut ledger)
                .map_err(|e| e.to_string())?;
            let n = a.n();
            let cos = RealMatrix::from_fn(n, |i, j| u.get(i, j).re);
            let sin = RealMatrix::from_fn(n, |i, j| -u.get(i, j).im);
            (cos, sin)
        }
        BackendArg::Diag => cossin_diag_oracle(&a).map_err(|e| e.to_string())?,
    };
    if args.report_cost {
        report_cost(&ledger);
    }
    let mut text = format_real_matrix(&cos);
    text.push_str(&format_real_matrix(&sin));
    emit(args.output.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

/// 17-significant-digit scientific formatting (byte-stable across runs).
pub fn g17(x: f64) -> String {
    format!("{x:.16e}")
}
