//! The `theta-table` subcommand: recompute every validity radius from the
//! bound machinery and flag each against the published value at three
//! significant digits.

use crate::g17;
use chebmat::bounds::{theta_max, BoundKind};
use chebmat::polyeval::expand::sine_gap_threshold;
use chebmat::polyeval::CosSinSchemeId;
use chebmat::UNIT_ROUNDOFF;
use std::path::Path;
use std::process::ExitCode;

/// Relative tolerance equivalent to agreement in the third significant
/// digit (including the rounding slack of the published values).
pub const THREE_SIG_DIGITS: f64 = 6e-3;

pub struct Row {
    pub family: &'static str,
    pub m: u32,
    /// Product count, printed as an exact rational.
    pub pi: (u32, u32),
    pub theta: f64,
    pub reference: f64,
}

impl Row {
    pub fn pass(&self) -> bool {
        (self.theta - self.reference).abs() <= THREE_SIG_DIGITS * self.reference
    }
}

/// Recompute all table rows. Errors only on internal bound failures.
pub fn compute_rows() -> Result<Vec<Row>, String> {
    let mut rows = Vec::new();
    let u = UNIT_ROUNDOFF;
    let root = |kind, m| theta_max(kind, m, u).map_err(|e| e.to_string());

    let taylor_ref = [8.73e-6, 1.67e-3, 0.0699, 0.336, 1.147];
    let cheb_ref = [1.38e-5, 2.92e-3, 0.1295, 0.636, 2.212];
    for (i, (m, pi)) in [(2u32, 1u32), (4, 2), (8, 3), (12, 4), (18, 5)].iter().enumerate() {
        rows.push(Row {
            family: "taylor",
            m: *m,
            pi: (*pi, 1),
            theta: root(BoundKind::TaylorT, *m)?,
            reference: taylor_ref[i],
        });
        rows.push(Row {
            family: "cheb-exp",
            m: *m,
            pi: (*pi, 1),
            theta: root(BoundKind::ChebC3, *m)?,
            reference: cheb_ref[i],
        });
    }

    let pade_ref = [2.4007e-3, 2.715e-2, 1.108e-1, 2.803e-1, 0.8983, 1.833, 4.316];
    for (i, (m, prods)) in [(2u32, 1u32), (3, 2), (4, 3), (5, 3), (7, 4), (9, 5), (13, 6)]
        .iter()
        .enumerate()
    {
        rows.push(Row {
            family: "pade",
            m: *m,
            pi: (3 * prods + 4, 3),
            theta: root(BoundKind::PadeP, *m)?,
            reference: pade_ref[i],
        });
    }

    let gap = |id| {
        sine_gap_threshold(id, u).ok_or_else(|| "missing sine threshold".to_string())
    };
    rows.push(Row { family: "cossin", m: 5, pi: (3, 1), theta: root(BoundKind::ChebC3, 5)?, reference: 1.17e-2 });
    rows.push(Row { family: "cossin", m: 8, pi: (4, 1), theta: gap(CosSinSchemeId::Cs8a)?, reference: 0.06807 });
    rows.push(Row { family: "cossin", m: 9, pi: (5, 1), theta: root(BoundKind::ChebC3, 9)?, reference: 0.2143 });
    rows.push(Row { family: "cossin", m: 16, pi: (6, 1), theta: gap(CosSinSchemeId::Cs16a)?, reference: 0.7563 });
    rows.push(Row { family: "cossin", m: 16, pi: (7, 1), theta: root(BoundKind::ChebC3, 16)?, reference: 1.5867 });
    rows.push(Row { family: "cossin", m: 24, pi: (7, 1), theta: gap(CosSinSchemeId::Cs24a)?, reference: 2.1556 });
    rows.push(Row { family: "cossin", m: 24, pi: (8, 1), theta: root(BoundKind::ChebC3, 24)?, reference: 4.5743 });

    Ok(rows)
}

pub fn render(rows: &[Row]) -> String {
    let mut out = String::from("family,m,pi,theta,reference,status\n");
    for r in rows {
        let pi = if r.pi.1 == 1 {
            format!("{}", r.pi.0)
        } else {
            format!("{}/{}", r.pi.0, r.pi.1)
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.family,
            r.m,
            pi,
            g17(r.theta),
            g17(r.reference),
            if r.pass() { "PASS" } else { "FAIL" }
        ));
    }
    out
}

pub fn run(output: Option<&Path>) -> Result<ExitCode, String> {
    let rows = compute_rows()?;
    let text = render(&rows);
    match output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string())?,
        None => print!("{text}"),
    }
    if rows.iter().all(Row::pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("theta-table: some rows FAILED");
        Ok(ExitCode::FAILURE)
    }
}
