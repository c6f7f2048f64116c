//! Error bounds for the polynomial and rational approximations of
//! `exp(-i*y)` on `[-theta, theta]`, and the largest `theta` keeping each
//! bound below a tolerance.
//!
//! Five bound families are implemented: the Taylor remainder, three
//! Chebyshev estimates (a classical envelope, a Bernstein-ellipse bound with
//! numerically optimized radius, and the series tail), and the diagonal Padé
//! error series. The series tail is the sharpest Chebyshev estimate and is
//! the one whose roots populate the published tables.

mod bessel;
mod chebcoef;
mod pade;

pub use bessel::{bessel_j, bessel_j_dd};
pub use chebcoef::{
    cheb_coeffs_exp, cheb_coeffs_exp_dd, cheb_coeffs_quadrature_dd, series_eval_dd, ChebCoeffSet,
};
pub use pade::{pade_numerator_coeffs, pade_series, PadeSeries};

use crate::error::{Error, Result};
use crate::xprec::Dd;
use std::sync::OnceLock;

/// The five bound families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Lagrange remainder of the degree-m Taylor polynomial.
    TaylorT,
    /// Classical Chebyshev envelope bound.
    ChebC1,
    /// Bernstein-ellipse bound, radius optimized per theta.
    ChebC2,
    /// Tail of the full Chebyshev series (sharpest).
    ChebC3,
    /// Diagonal Padé error series, truncated at k = 2000.
    PadeP,
}

/// Truncation order of the Padé error series.
pub const PADE_K_TRUNC: u32 = 2000;

fn validate(kind: BoundKind, m: u32) -> Result<()> {
    let ok = match kind {
        BoundKind::PadeP => (1..=13).contains(&m),
        _ => (1..=30).contains(&m),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{kind:?} with m = {m}")))
    }
}

/// Evaluate the bound `eps_m(theta)` for the given family.
pub fn eps_bound(kind: BoundKind, m: u32, theta: f64) -> Result<f64> {
    validate(kind, m)?;
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(Error::Unsupported(format!("theta {theta}")));
    }
    Ok(match kind {
        BoundKind::TaylorT => {
            // theta^{m+1} / (m+1)!
            let mut t = 1.0f64;
            for j in 1..=(m as u64 + 1) {
                t *= theta / j as f64;
            }
            t
        }
        BoundKind::ChebC1 => {
            let d = 2.0 * m as f64 + 2.0;
            4.0 * ((1.0 - theta * theta / (d * d)).exp() * theta / d).powi(m as i32 + 1)
        }
        BoundKind::ChebC2 => cheb_c2(m, theta),
        BoundKind::ChebC3 => {
            let th = Dd::from_f64(theta);
            let mut sum = 0.0f64;
            for k in (m + 1)..=400 {
                let t = 2.0 * bessel_j_dd(k.min(400), th).to_f64().abs();
                sum += t;
                if t < 1e-30 {
                    break;
                }
            }
            sum
        }
        BoundKind::PadeP => {
            let series = cached_pade_series(m)?;
            let mut sum = 0.0f64;
            let mut pow = theta.powi(2 * m as i32);
            for k in (2 * m as usize + 1)..series.d_abs.len() {
                pow *= theta;
                if !pow.is_finite() {
                    // beyond the representable range every remaining term with
                    // a nonzero coefficient is effectively infinite
                    if series.d_abs[k..].iter().any(|&d| d > 0.0) {
                        return Ok(f64::INFINITY);
                    }
                    break;
                }
                sum += series.d_abs[k] * pow;
                if sum > 1e30 {
                    break;
                }
            }
            sum
        }
    })
}

/// Bernstein-ellipse bound `2 M / (rho^m (rho - 1))` with
/// `M = exp((theta/2)(rho + 1/rho))`, minimized over `rho` in `(1, 50]` by
/// golden-section search in log space.
fn cheb_c2(m: u32, theta: f64) -> f64 {
    let ln_f = |rho: f64| -> f64 {
        (2.0f64).ln() + 0.5 * theta * (rho + 1.0 / rho) - (m as f64) * rho.ln() - (rho - 1.0).ln()
    };
    let mut a = 1.0 + 1e-9;
    let mut b = 50.0;
    let phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let mut f1 = ln_f(x1);
    let mut f2 = ln_f(x2);
    while b - a > 1e-8 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = ln_f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = ln_f(x2);
        }
    }
    // any rho > 1 yields a valid upper bound, so a boundary clamp (reached
    // only far from the root region) is still sound
    let rho = 0.5 * (a + b);
    ln_f(rho).exp()
}

fn cached_pade_series(m: u32) -> Result<&'static PadeSeries> {
    static CACHE: [OnceLock<PadeSeries>; 14] = [const { OnceLock::new() }; 14];
    let cell = &CACHE[m as usize];
    if let Some(s) = cell.get() {
        return Ok(s);
    }
    let s = pade_series(m, PADE_K_TRUNC)?;
    Ok(cell.get_or_init(|| s))
}

/// Largest `theta` with `eps_bound(kind, m, theta) <= tol`, by bisection on
/// `[1e-8, 64]`.
pub fn theta_max(kind: BoundKind, m: u32, tol: f64) -> Result<f64> {
    validate(kind, m)?;
    let mut lo = 1e-8f64;
    // the classical envelope peaks at theta = (2m+2)/sqrt(2) and decreases
    // beyond; restrict the window to its monotone part
    let mut hi = match kind {
        BoundKind::ChebC1 => 64.0f64.min((2.0 * m as f64 + 2.0) / std::f64::consts::SQRT_2),
        _ => 64.0,
    };
    let eps_lo = eps_bound(kind, m, lo)?;
    let eps_hi = eps_bound(kind, m, hi)?;
    if !(eps_lo <= tol && eps_hi > tol) {
        return Err(Error::NoSignChange {
            lo,
            hi,
            eps_lo,
            eps_hi,
        });
    }
    while hi - lo > 1e-9 * lo {
        let mid = 0.5 * (lo + hi);
        if eps_bound(kind, m, mid)? <= tol {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::UNIT_ROUNDOFF;

    fn close3(got: f64, want: f64) -> bool {
        (got - want).abs() <= 6e-3 * want.abs()
    }

    #[test]
    fn taylor_theta_values() {
        assert!(close3(theta_max(BoundKind::TaylorT, 4, UNIT_ROUNDOFF).unwrap(), 1.67e-3));
        assert!(close3(theta_max(BoundKind::TaylorT, 18, UNIT_ROUNDOFF).unwrap(), 1.147));
    }

    #[test]
    fn cheb_c3_theta_values() {
        assert!(close3(theta_max(BoundKind::ChebC3, 2, UNIT_ROUNDOFF).unwrap(), 1.38e-5));
        assert!(close3(theta_max(BoundKind::ChebC3, 12, UNIT_ROUNDOFF).unwrap(), 0.636));
        assert!(close3(theta_max(BoundKind::ChebC3, 18, UNIT_ROUNDOFF).unwrap(), 2.212));
    }

    #[test]
    fn bound_ordering_at_m18() {
        let c1 = theta_max(BoundKind::ChebC1, 18, UNIT_ROUNDOFF).unwrap();
        let c2 = theta_max(BoundKind::ChebC2, 18, UNIT_ROUNDOFF).unwrap();
        let c3 = theta_max(BoundKind::ChebC3, 18, UNIT_ROUNDOFF).unwrap();
        assert!(close3(c1, 1.8843), "C1 root {c1}");
        assert!(close3(c2, 1.939), "C2 root {c2}");
        assert!(close3(c3, 2.212), "C3 root {c3}");
        assert!(c1 < c2 && c2 < c3);
    }

    #[test]
    fn pade_theta_values() {
        assert!(close3(theta_max(BoundKind::PadeP, 2, UNIT_ROUNDOFF).unwrap(), 2.4007e-3));
        assert!(close3(theta_max(BoundKind::PadeP, 5, UNIT_ROUNDOFF).unwrap(), 0.2803));
        assert!(close3(theta_max(BoundKind::PadeP, 13, UNIT_ROUNDOFF).unwrap(), 4.316));
    }

    #[test]
    fn bounds_monotone_in_theta() {
        for (kind, m) in [
            (BoundKind::TaylorT, 8u32),
            (BoundKind::ChebC1, 12),
            (BoundKind::ChebC2, 12),
            (BoundKind::ChebC3, 12),
            (BoundKind::PadeP, 9),
        ] {
            let root = theta_max(kind, m, UNIT_ROUNDOFF).unwrap();
            let mut prev = 0.0;
            for i in 1..=40 {
                let th = 2.0 * root * i as f64 / 40.0;
                let e = eps_bound(kind, m, th).unwrap();
                assert!(e > prev, "{kind:?} not increasing at theta={th}");
                prev = e;
            }
        }
    }

    #[test]
    fn theta_max_rejects_bad_window() {
        // a tolerance below every bound value in the window cannot bracket
        assert!(matches!(
            theta_max(BoundKind::TaylorT, 2, 1e-30),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn unsupported_combination_rejected() {
        assert!(eps_bound(BoundKind::PadeP, 14, 1.0).is_err());
        assert!(eps_bound(BoundKind::TaylorT, 0, 1.0).is_err());
    }
}
