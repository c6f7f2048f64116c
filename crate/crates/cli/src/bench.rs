//! The `bench` subcommand: propagate one of the two benchmark models over a
//! list of step counts and backends, measure the final-time error against a
//! high-resolution reference, and emit error-versus-cost CSV rows.

use crate::g17;
use chebmat::integrators::{propagate, Backend, Propagation, Propagator, StepMethod, TimeDependentHamiltonian};
use chebmat::matcore::two_norm;
use chebmat::models::{RosenZenerParams, WalkerPrestonParams};
use chebmat::ComplexMatrix;
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExperimentArg {
    RosenZener,
    WalkerPreston,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Midpoint,
    Cf4,
}

impl MethodArg {
    fn method(self) -> StepMethod {
        match self {
            MethodArg::Midpoint => StepMethod::Midpoint2,
            MethodArg::Cf4 => StepMethod::Cf4Magnus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Cheb,
    Pade,
    Diag,
}

impl BackendArg {
    fn backend(self) -> Backend {
        match self {
            BackendArg::Cheb => Backend::Cheb,
            BackendArg::Pade => Backend::Pade,
            BackendArg::Diag => Backend::Diag,
        }
    }
}

#[derive(Args)]
pub struct BenchArgs {
    /// Which experiment to run.
    #[arg(long, value_enum)]
    pub experiment: ExperimentArg,
    /// Integrator.
    #[arg(long, value_enum, default_value = "cf4")]
    pub method: MethodArg,
    /// Comma-separated backend list.
    #[arg(long, value_delimiter = ',', default_value = "cheb,pade")]
    pub backends: Vec<BackendArg>,
    /// Comma-separated step counts (default 2^4 .. 2^12).
    #[arg(long, value_delimiter = ',')]
    pub steps: Option<Vec<usize>>,
    /// Step count of the reference propagation (CF4, diagonalization
    /// backend), self-validated against half that count. Defaults per
    /// experiment to the smallest power of two whose validation delta sits
    /// below the reference tolerance.
    #[arg(long)]
    pub ref_steps: Option<usize>,
    /// Reference self-validation tolerance. Loosen only for smoke runs
    /// where the error column does not matter.
    #[arg(long, default_value_t = 1e-12)]
    pub ref_tol: f64,
    /// Output CSV file (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

struct Experiment<'a> {
    model: &'a dyn ModelDyn,
    t0: f64,
    tf: f64,
}

/// Object-safe wrapper so both models share the sweep code.
trait ModelDyn: Sync {
    fn propagate(&self, prop: &Propagator, method: StepMethod, backend: Backend)
        -> chebmat::Result<Propagation>;
}

impl<M: TimeDependentHamiltonian + Sync> ModelDyn for M {
    fn propagate(
        &self,
        prop: &Propagator,
        method: StepMethod,
        backend: Backend,
    ) -> chebmat::Result<Propagation> {
        propagate(prop, self, method, backend)
    }
}

pub fn run(args: &BenchArgs) -> Result<ExitCode, String> {
    if args.backends.is_empty() {
        return Err("at least one backend is required".into());
    }
    let steps: Vec<usize> = match &args.steps {
        Some(list) if !list.is_empty() => list.clone(),
        Some(_) => return Err("step list must be non-empty".into()),
        None => (4..=12).map(|p| 1usize << p).collect(),
    };
    if steps.iter().any(|&m| m == 0) {
        return Err("step counts must be positive".into());
    }

    let rz = RosenZenerParams::default();
    let wp = WalkerPrestonParams::default();
    let (experiment, default_ref) = match args.experiment {
        ExperimentArg::RosenZener => (
            Experiment { model: &rz, t0: rz.t0, tf: rz.tf },
            32768,
        ),
        ExperimentArg::WalkerPreston => {
            let tf = 2.0 * std::f64::consts::PI / wp.field_frequency;
            (Experiment { model: &wp, t0: 0.0, tf }, 8192)
        }
    };

    // reference solution, computed once and self-validated
    let reference = compute_reference(
        &experiment,
        args.ref_steps.unwrap_or(default_ref),
        args.ref_tol,
    )?;

    let pool = thread_pool()?;
    let mut jobs: Vec<(BackendArg, usize)> = Vec::new();
    for &b in &args.backends {
        for &m in &steps {
            jobs.push((b, m));
        }
    }
    let method = args.method.method();
    let results: Vec<Result<CsvRow, String>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(backend, m)| run_one(&experiment, method, backend, m, &reference))
            .collect()
    });

    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        rows.push(r?);
    }
    rows.sort_by(|a, b| {
        (a.backend, a.method, a.steps).cmp(&(b.backend, b.method, b.steps))
    });

    let mut text =
        String::from("backend,method,M,tau,exp_products,accum_products,total_cost,two_norm_error,wall_time_s\n");
    for row in &rows {
        text.push_str(&row.render());
    }
    match &args.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string())?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(cap) = std::env::var("CHEB_THREADS") {
        let cap: usize = cap
            .parse()
            .map_err(|e| format!("bad CHEB_THREADS value: {e}"))?;
        builder = builder.num_threads(cap.max(1));
    }
    builder.build().map_err(|e| e.to_string())
}

fn compute_reference(
    exp: &Experiment,
    ref_steps: usize,
    ref_tol: f64,
) -> Result<ComplexMatrix, String> {
    if ref_steps < 4 || ref_steps % 2 != 0 {
        return Err("ref-steps must be an even number >= 4".into());
    }
    let fine = exp
        .model
        .propagate(
            &Propagator { t0: exp.t0, tf: exp.tf, steps: ref_steps },
            StepMethod::Cf4Magnus,
            Backend::Diag,
        )
        .map_err(|e| e.to_string())?;
    let coarse = exp
        .model
        .propagate(
            &Propagator { t0: exp.t0, tf: exp.tf, steps: ref_steps / 2 },
            StepMethod::Cf4Magnus,
            Backend::Diag,
        )
        .map_err(|e| e.to_string())?;
    let delta = two_norm(&fine.u.sub(&coarse.u)).value;
    if delta > ref_tol {
        return Err(chebmat::Error::ReferenceNotConverged { delta }.to_string());
    }
    Ok(fine.u)
}

struct CsvRow {
    backend: &'static str,
    method: &'static str,
    steps: usize,
    tau: f64,
    exp_products: f64,
    accum_products: f64,
    total_cost: f64,
    error: f64,
    wall_time_s: f64,
}

impl CsvRow {
    fn render(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}\n",
            self.backend,
            self.method,
            self.steps,
            g17(self.tau),
            g17(self.exp_products),
            g17(self.accum_products),
            g17(self.total_cost),
            g17(self.error),
            g17(self.wall_time_s)
        )
    }
}

fn run_one(
    exp: &Experiment,
    method: StepMethod,
    backend: BackendArg,
    steps: usize,
    reference: &ComplexMatrix,
) -> Result<CsvRow, String> {
    let start = Instant::now();
    let prop = Propagator { t0: exp.t0, tf: exp.tf, steps };
    let run = exp
        .model
        .propagate(&prop, method, backend.backend())
        .map_err(|e| e.to_string())?;
    let error = two_norm(&run.u.sub(reference)).value;
    let wall = start.elapsed().as_secs_f64();
    let to_f64 = |l: &chebmat::CostLedger| {
        let t = l.total_cost();
        *t.numer() as f64 / *t.denom() as f64
    };
    Ok(CsvRow {
        backend: backend.backend().name(),
        method: method.name(),
        steps,
        tau: prop.tau(),
        exp_products: to_f64(&run.exp_cost),
        accum_products: to_f64(&run.accum_cost),
        total_cost: to_f64(&run.total_cost()),
        error,
        wall_time_s: wall,
    })
}
