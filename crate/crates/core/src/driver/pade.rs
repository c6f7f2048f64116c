//! Diagonal Padé baseline for `exp(-i*A)` with even/odd-split evaluation at
//! the published product counts, plus its scheme selection.

use super::{SelectionPlan, ShiftData};
use crate::bounds::pade_numerator_coeffs;
use crate::error::{Error, Result};
use crate::matcore::{lu_solve, mat_mul, ComplexMatrix, CostLedger};
use num_complex::Complex64;
use num_rational::Rational64;

/// Padé orders usable at minimal product cost, with their validity radii and
/// product counts (excluding the inverse).
#[derive(Clone, Copy, Debug)]
pub struct PadeOrder {
    pub m: u32,
    pub theta: f64,
    pub products: u32,
}

pub const PADE_ORDERS: [PadeOrder; 7] = [
    PadeOrder { m: 2, theta: 2.4007e-3, products: 1 },
    PadeOrder { m: 3, theta: 2.715e-2, products: 2 },
    PadeOrder { m: 4, theta: 1.108e-1, products: 3 },
    PadeOrder { m: 5, theta: 2.803e-1, products: 3 },
    PadeOrder { m: 7, theta: 0.8983, products: 4 },
    PadeOrder { m: 9, theta: 1.833, products: 5 },
    PadeOrder { m: 13, theta: 4.316, products: 6 },
];

pub const MAX_SQUARINGS: u32 = 60;

fn cost_of(products: u32, squarings: u32) -> Rational64 {
    Rational64::new(3 * (products + squarings) as i64 + 4, 3)
}

/// Cheapest Padé order covering `beta`, falling back to m = 13 with
/// scaling-and-squaring; ties break toward the larger radius.
pub fn select_pade_plan(beta: f64) -> Result<SelectionPlan> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::Unsupported(format!("beta {beta}")));
    }
    let mut best: Option<(&PadeOrder, u32, Rational64)> = None;
    for order in &PADE_ORDERS {
        let s = squarings_for(beta, order.theta)?;
        let cost = cost_of(order.products, s);
        let better = match best {
            None => true,
            Some((cur, cur_s, cur_cost)) => {
                cost < cur_cost
                    || (cost == cur_cost
                        && order.theta * f64::powi(2.0, s as i32)
                            > cur.theta * f64::powi(2.0, cur_s as i32))
            }
        };
        if better {
            best = Some((order, s, cost));
        }
    }
    let (order, s, cost) = best.unwrap();
    Ok(SelectionPlan {
        scheme: super::PlanScheme::Pade(order.m),
        squarings: s,
        shift: ShiftData::unshifted(beta),
        predicted_cost: cost,
    })
}

pub(super) fn squarings_for(beta: f64, theta: f64) -> Result<u32> {
    if beta <= theta {
        return Ok(0);
    }
    let s = (beta / theta).log2().ceil() as i64;
    let mut s = s.max(1) as u32;
    // guard the boundary case where rounding makes ceil overshoot by one
    while s > 0 && beta <= theta * f64::powi(2.0, s as i32 - 1) {
        s -= 1;
    }
    if s > MAX_SQUARINGS {
        return Err(Error::ScalingOverflow {
            beta,
            cap: MAX_SQUARINGS,
        });
    }
    Ok(s)
}

/// Baseline exponential `exp(-i*A)` through the diagonal Padé approximant
/// `p_m(-iA) [p_m(iA)]^{-1}` with scaling-and-squaring above the m = 13
/// radius.
pub fn expm_pade(a: &ComplexMatrix, ledger: &mut CostLedger) -> Result<ComplexMatrix> {
    a.check_hermitian(crate::HERMITIAN_TOL)?;
    let plan = select_pade_plan(a.one_norm())?;
    apply_pade_plan(a, &plan, ledger)
}

/// Run a specific Padé plan (scheme order and squaring count).
pub fn apply_pade_plan(
    a: &ComplexMatrix,
    plan: &SelectionPlan,
    ledger: &mut CostLedger,
) -> Result<ComplexMatrix> {
    let m = match plan.scheme {
        super::PlanScheme::Pade(m) => m,
        _ => return Err(Error::Unsupported("not a Padé plan".into())),
    };
    let before = ledger.clone();
    let scaled = a.scale(Complex64::new(f64::powi(0.5, plan.squarings as i32), 0.0));
    let mut r = pade_core(&scaled, m, ledger)?;
    for _ in 0..plan.squarings {
        r = mat_mul(&r, &r, ledger);
    }
    debug_assert_eq!(
        {
            let mut delta = ledger.clone();
            delta.complex_products -= before.complex_products;
            delta.real_products -= before.real_products;
            delta.inverses -= before.inverses;
            delta.total_cost()
        },
        plan.predicted_cost,
        "Padé ledger disagrees with the plan"
    );
    Ok(r)
}

/// `r_m(-iA)` for one of the supported orders.
fn pade_core(a: &ComplexMatrix, m: u32, ledger: &mut CostLedger) -> Result<ComplexMatrix> {
    let b = pade_numerator_coeffs(m);
    let i = Complex64::new(0.0, 1.0);

    // split p_m(-iA) = E - i*W into the even part E (real coefficients on
    // even powers) and the odd part -i*W (real coefficients on odd powers):
    //   E = sum_l b_{2l} (-1)^l A^{2l},  W = sum_l b_{2l+1} (-1)^l A^{2l+1}
    let even_coeff = |l: usize| -> Complex64 {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        Complex64::new(sign * b[2 * l], 0.0)
    };
    let odd_coeff = |l: usize| -> Complex64 {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        Complex64::new(sign * b[2 * l + 1], 0.0)
    };

    let a2 = mat_mul(a, a, ledger);
    if m == 2 {
        // the odd part is b1 * A: a scalar multiple, no product needed
        let even = a2.scale(even_coeff(1)).add_scaled_identity(even_coeff(0));
        let w = a.scale(odd_coeff(0));
        let numerator = even.sub(&w.scale(i));
        let denominator = even.add(&w.scale(i));
        return lu_solve(&denominator, &numerator, ledger);
    }
    let (even, odd_bracket) = match m {
        3 => {
            let even = a2.scale(even_coeff(1)).add_scaled_identity(even_coeff(0));
            let bracket = a2.scale(odd_coeff(1)).add_scaled_identity(odd_coeff(0));
            (even, bracket)
        }
        4 | 5 => {
            let a4 = mat_mul(&a2, &a2, ledger);
            let even = a2
                .scale(even_coeff(1))
                .add(&a4.scale(even_coeff(2)))
                .add_scaled_identity(even_coeff(0));
            let mut bracket = a2.scale(odd_coeff(1)).add_scaled_identity(odd_coeff(0));
            if m == 5 {
                bracket = bracket.add(&a4.scale(odd_coeff(2)));
            }
            (even, bracket)
        }
        7 => {
            let a4 = mat_mul(&a2, &a2, ledger);
            let a6 = mat_mul(&a2, &a4, ledger);
            let even = a2
                .scale(even_coeff(1))
                .add(&a4.scale(even_coeff(2)))
                .add(&a6.scale(even_coeff(3)))
                .add_scaled_identity(even_coeff(0));
            let bracket = a2
                .scale(odd_coeff(1))
                .add(&a4.scale(odd_coeff(2)))
                .add(&a6.scale(odd_coeff(3)))
                .add_scaled_identity(odd_coeff(0));
            (even, bracket)
        }
        9 => {
            let a4 = mat_mul(&a2, &a2, ledger);
            let a6 = mat_mul(&a2, &a4, ledger);
            let a8 = mat_mul(&a2, &a6, ledger);
            let even = a2
                .scale(even_coeff(1))
                .add(&a4.scale(even_coeff(2)))
                .add(&a6.scale(even_coeff(3)))
                .add(&a8.scale(even_coeff(4)))
                .add_scaled_identity(even_coeff(0));
            let bracket = a2
                .scale(odd_coeff(1))
                .add(&a4.scale(odd_coeff(2)))
                .add(&a6.scale(odd_coeff(3)))
                .add(&a8.scale(odd_coeff(4)))
                .add_scaled_identity(odd_coeff(0));
            (even, bracket)
        }
        13 => {
            let a4 = mat_mul(&a2, &a2, ledger);
            let a6 = mat_mul(&a2, &a4, ledger);
            // even: (e13-block) A6 * (c12 A6 + c10 A4 + c8 A2) + low terms
            let high_even = a6
                .scale(even_coeff(6))
                .add(&a4.scale(even_coeff(5)))
                .add(&a2.scale(even_coeff(4)));
            let even = mat_mul(&a6, &high_even, ledger)
                .add(&a6.scale(even_coeff(3)))
                .add(&a4.scale(even_coeff(2)))
                .add(&a2.scale(even_coeff(1)))
                .add_scaled_identity(even_coeff(0));
            let high_odd = a6
                .scale(odd_coeff(6))
                .add(&a4.scale(odd_coeff(5)))
                .add(&a2.scale(odd_coeff(4)));
            let bracket = mat_mul(&a6, &high_odd, ledger)
                .add(&a6.scale(odd_coeff(3)))
                .add(&a4.scale(odd_coeff(2)))
                .add(&a2.scale(odd_coeff(1)))
                .add_scaled_identity(odd_coeff(0));
            (even, bracket)
        }
        _ => return Err(Error::Unsupported(format!("Padé order {m}"))),
    };
    // W = A * bracket; numerator = E - iW, denominator = E + iW
    let w = mat_mul(a, &odd_bracket, ledger);
    let numerator = even.sub(&w.scale(i));
    let denominator = even.add(&w.scale(i));
    // p(-iA) and p(iA) commute, so left division equals right division
    lu_solve(&denominator, &numerator, ledger)
}
