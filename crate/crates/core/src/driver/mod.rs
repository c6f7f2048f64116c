//! User-facing drivers: spectral shifting, cheapest-scheme selection,
//! scaling-and-squaring, the diagonal Padé baseline, and the
//! diagonalization oracle.
//!
//! `expm_skew_hermitian` computes `exp(-i*A)` for Hermitian `A`;
//! `cosm_sinm` computes `(cos A, sin A)` for real symmetric `A` through the
//! simultaneous cosine/sine schemes and double-angle squaring. Both accept
//! optional eigenvalue bounds `(Emin, Emax)`: the spectrum is then centered
//! by the shift `A - alpha*I`, which can only shrink the half-width `beta`
//! and with it the product count. Without bounds, `beta = ||A||_1` and no
//! shift is applied.

mod pade;

pub use pade::{apply_pade_plan, expm_pade, select_pade_plan, PadeOrder, MAX_SQUARINGS, PADE_ORDERS};

use crate::error::{Error, Result};
use crate::matcore::{
    hermitian_cos_sin, mat_mul, mat_mul_real, symmetric_matrix_functions2, ComplexMatrix,
    CostLedger, RealMatrix,
};
use crate::polyeval::{
    cossin_scheme, eval_cossin, eval_exp, exp_scheme, CosSinSchemeId, ExpSchemeId, COSSIN_SCHEMES,
    EXP_SCHEMES,
};
use num_complex::Complex64;
use num_rational::Rational64;

/// User-supplied eigenvalue bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBounds {
    pub emin: f64,
    pub emax: f64,
}

impl SpectralBounds {
    pub fn new(emin: f64, emax: f64) -> Result<SpectralBounds> {
        if !(emin.is_finite() && emax.is_finite() && emin <= emax) {
            return Err(Error::Unsupported(format!(
                "invalid spectral bounds [{emin}, {emax}]"
            )));
        }
        Ok(SpectralBounds { emin, emax })
    }
}

/// Shift applied before scheme evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftData {
    /// Spectrum center `(emax + emin) / 2`; zero without bounds.
    pub alpha: f64,
    /// Spectrum half-width `(emax - emin) / 2`, or `||A||_1` without bounds.
    pub beta: f64,
    pub shifted: bool,
}

impl ShiftData {
    pub fn unshifted(beta: f64) -> ShiftData {
        ShiftData {
            alpha: 0.0,
            beta,
            shifted: false,
        }
    }

    pub fn from_bounds(bounds: Option<&SpectralBounds>, one_norm: f64) -> ShiftData {
        match bounds {
            Some(b) => {
                let alpha = 0.5 * (b.emax + b.emin);
                ShiftData {
                    alpha,
                    beta: 0.5 * (b.emax - b.emin),
                    shifted: alpha != 0.0,
                }
            }
            None => ShiftData::unshifted(one_norm),
        }
    }
}

/// Scheme choice of one plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanScheme {
    Exp(ExpSchemeId),
    CosSin(CosSinSchemeId),
    /// Padé half-degree.
    Pade(u32),
}

/// Selected scheme, squaring count, shift, and the exact predicted product
/// cost.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelectionPlan {
    pub scheme: PlanScheme,
    pub squarings: u32,
    pub shift: ShiftData,
    pub predicted_cost: Rational64,
}

impl SelectionPlan {
    /// Radius the plan can absorb: `theta * 2^squarings`.
    pub fn coverage(&self) -> f64 {
        let theta = match self.scheme {
            PlanScheme::Exp(id) => exp_scheme(id).theta,
            PlanScheme::CosSin(id) => cossin_scheme(id).theta,
            PlanScheme::Pade(m) => PADE_ORDERS.iter().find(|o| o.m == m).unwrap().theta,
        };
        theta * f64::powi(2.0, self.squarings as i32)
    }
}

/// Cheapest exponential scheme for spectral half-width `beta`: the
/// smallest-product scheme whose radius covers `beta` directly, otherwise
/// the degree-18 scheme with `ceil(log2(beta/theta_18))` squarings.
pub fn select_exp_plan(beta: f64) -> Result<SelectionPlan> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::Unsupported(format!("beta {beta}")));
    }
    for s in &EXP_SCHEMES {
        if beta <= s.theta {
            return Ok(SelectionPlan {
                scheme: PlanScheme::Exp(s.id),
                squarings: 0,
                shift: ShiftData::unshifted(beta),
                predicted_cost: Rational64::from_integer(s.pi as i64),
            });
        }
    }
    let top = exp_scheme(ExpSchemeId::M18);
    let s = pade::squarings_for(beta, top.theta)?;
    Ok(SelectionPlan {
        scheme: PlanScheme::Exp(top.id),
        squarings: s,
        shift: ShiftData::unshifted(beta),
        predicted_cost: Rational64::from_integer((top.pi + s) as i64),
    })
}

/// Cheapest cosine/sine scheme for half-width `beta`; double-angle squaring
/// costs two real products per step.
pub fn select_cossin_plan(beta: f64) -> Result<SelectionPlan> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::Unsupported(format!("beta {beta}")));
    }
    for s in &COSSIN_SCHEMES {
        if beta <= s.theta {
            return Ok(SelectionPlan {
                scheme: PlanScheme::CosSin(s.id),
                squarings: 0,
                shift: ShiftData::unshifted(beta),
                predicted_cost: Rational64::from_integer(s.pi as i64),
            });
        }
    }
    let top = cossin_scheme(CosSinSchemeId::Cs24x);
    let s = pade::squarings_for(beta, top.theta)?;
    Ok(SelectionPlan {
        scheme: PlanScheme::CosSin(top.id),
        squarings: s,
        shift: ShiftData::unshifted(beta),
        predicted_cost: Rational64::from_integer((top.pi + 2 * s) as i64),
    })
}

/// `exp(-i*A)` for Hermitian `A` to round-off accuracy.
pub fn expm_skew_hermitian(
    a: &ComplexMatrix,
    bounds: Option<&SpectralBounds>,
    ledger: &mut CostLedger,
) -> Result<ComplexMatrix> {
    a.check_hermitian(crate::HERMITIAN_TOL)?;
    let shift = ShiftData::from_bounds(bounds, a.one_norm());
    let mut plan = select_exp_plan(shift.beta)?;
    plan.shift = shift;
    apply_exp_plan(a, &plan, ledger)
}

/// Run a specific exponential plan (shift, scale, evaluate, square, unshift).
/// Exposed for squaring-consistency and plan-optimality tests.
pub fn apply_exp_plan(
    a: &ComplexMatrix,
    plan: &SelectionPlan,
    ledger: &mut CostLedger,
) -> Result<ComplexMatrix> {
    let id = match plan.scheme {
        PlanScheme::Exp(id) => id,
        PlanScheme::Pade(_) => return apply_pade_plan(a, plan, ledger),
        _ => return Err(Error::Unsupported("not an exponential plan".into())),
    };
    debug_assert!(
        plan.shift.beta <= plan.coverage() * (1.0 + 1e-12),
        "plan radius violated: beta {} > coverage {}",
        plan.shift.beta,
        plan.coverage()
    );
    let before = ledger.clone();
    let shifted;
    let operand = if plan.shift.shifted {
        shifted = a.add_scaled_identity(Complex64::new(-plan.shift.alpha, 0.0));
        &shifted
    } else {
        a
    };
    let scale = f64::powi(0.5, plan.squarings as i32);
    let scaled = operand.scale(Complex64::new(scale, 0.0));
    let mut u = eval_exp(id, &scaled, ledger)?;
    for _ in 0..plan.squarings {
        u = mat_mul(&u, &u, ledger);
    }
    if plan.shift.shifted {
        // restore the scalar phase exp(-i*alpha)
        let phase = Complex64::new(plan.shift.alpha.cos(), -plan.shift.alpha.sin());
        u = u.scale(phase);
    }
    debug_assert_eq!(
        CostLedger {
            complex_products: ledger.complex_products - before.complex_products,
            real_products: ledger.real_products - before.real_products,
            inverses: ledger.inverses - before.inverses,
        }
        .total_cost(),
        plan.predicted_cost,
        "exp ledger disagrees with the plan"
    );
    Ok(u)
}

/// `(cos A, sin A)` for real symmetric `A` to round-off accuracy.
pub fn cosm_sinm(
    a: &RealMatrix,
    bounds: Option<&SpectralBounds>,
    ledger: &mut CostLedger,
) -> Result<(RealMatrix, RealMatrix)> {
    a.check_symmetric(crate::HERMITIAN_TOL)?;
    let shift = ShiftData::from_bounds(bounds, a.one_norm());
    let mut plan = select_cossin_plan(shift.beta)?;
    plan.shift = shift;
    apply_cossin_plan(a, &plan, ledger)
}

/// Run a specific cosine/sine plan.
pub fn apply_cossin_plan(
    a: &RealMatrix,
    plan: &SelectionPlan,
    ledger: &mut CostLedger,
) -> Result<(RealMatrix, RealMatrix)> {
    let id = match plan.scheme {
        PlanScheme::CosSin(id) => id,
        _ => return Err(Error::Unsupported("not a cosine/sine plan".into())),
    };
    debug_assert!(
        plan.shift.beta <= plan.coverage() * (1.0 + 1e-12),
        "plan radius violated"
    );
    let before = ledger.clone();
    let shifted;
    let operand = if plan.shift.shifted {
        shifted = a.add_scaled_identity(-plan.shift.alpha);
        &shifted
    } else {
        a
    };
    let scale = f64::powi(0.5, plan.squarings as i32);
    let scaled = operand.scale(scale);
    let (mut cos, mut sin) = eval_cossin(id, &scaled, ledger)?;
    for _ in 0..plan.squarings {
        // cos(2X) = 2 cos^2 X - I, sin(2X) = 2 sin X cos X
        let cos2 = mat_mul_real(&cos, &cos, ledger)
            .scale(2.0)
            .add_scaled_identity(-1.0);
        let sin2 = mat_mul_real(&sin, &cos, ledger).scale(2.0);
        cos = cos2;
        sin = sin2;
    }
    if plan.shift.shifted {
        // angle addition: A = (A - alpha I) + alpha I
        let (ca, sa) = (plan.shift.alpha.cos(), plan.shift.alpha.sin());
        let cos_full = cos.scale(ca).sub(&sin.scale(sa));
        let sin_full = sin.scale(ca).add(&cos.scale(sa));
        cos = cos_full;
        sin = sin_full;
    }
    debug_assert_eq!(
        CostLedger {
            complex_products: ledger.complex_products - before.complex_products,
            real_products: ledger.real_products - before.real_products,
            inverses: ledger.inverses - before.inverses,
        }
        .total_cost(),
        plan.predicted_cost,
        "cos/sin ledger disagrees with the plan"
    );
    Ok((cos, sin))
}

/// Reference `exp(-i*A)` through the symmetric eigensolver; uncounted,
/// test and reference use only.
pub fn expm_diag_oracle(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_hermitian(crate::HERMITIAN_TOL)?;
    let (cos, sin) = hermitian_cos_sin(a)?;
    Ok(cos.sub(&sin.scale(Complex64::new(0.0, 1.0))))
}

/// Reference `(cos A, sin A)` for real symmetric `A`; uncounted.
pub fn cossin_diag_oracle(a: &RealMatrix) -> Result<(RealMatrix, RealMatrix)> {
    a.check_symmetric(crate::HERMITIAN_TOL)?;
    symmetric_matrix_functions2(a, f64::cos, f64::sin)
}
