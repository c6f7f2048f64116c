//! Taylor coefficients of the diagonal Padé error `r_m(-iy) - exp(-iy)`.
//!
//! `r_m(-iy) = p_m(-iy) [p_m(iy)]^{-1}` with the standard diagonal Padé
//! numerator `p_m`. The reciprocal of `p_m(iy)` is built by power-series
//! inversion in complex double-double arithmetic, multiplied by the numerator
//! series, and the exponential series is subtracted. Only the moduli `|d_k|`
//! are kept; they drive the Padé error bound.

use crate::error::{Error, Result};
use crate::xprec::{CDd, Dd};

/// `|d_k|` for `k = 0..=k_trunc` of the order-`m` diagonal Padé error series.
#[derive(Clone, Debug)]
pub struct PadeSeries {
    pub m: u32,
    pub d_abs: Vec<f64>,
}

/// Padé numerator coefficients `b_j = (2m-j)! m! / ((2m)! (m-j)! j!)` as
/// doubles, for the runtime even/odd evaluator.
pub fn pade_numerator_coeffs(m: u32) -> Vec<f64> {
    let mut b = vec![0.0; m as usize + 1];
    let mut cur = Dd::ONE;
    for j in 0..=m as u64 {
        b[j as usize] = cur.to_f64();
        if j < m as u64 {
            // b_{j+1} = b_j (m-j) / ((2m-j)(j+1))
            cur = cur * Dd::from_u64(m as u64 - j)
                / (Dd::from_u64(2 * m as u64 - j) * Dd::from_u64(j + 1));
        }
    }
    b
}

/// Build the truncated error series.
pub fn pade_series(m: u32, k_trunc: u32) -> Result<PadeSeries> {
    if !(1..=13).contains(&m) {
        return Err(Error::Unsupported(format!("Padé half-degree {m}")));
    }
    if k_trunc > 2000 {
        return Err(Error::Unsupported(format!("K_trunc {k_trunc} > 2000")));
    }
    let k = k_trunc as usize;
    let md = m as usize;

    // b_j in double-double
    let mut b = vec![Dd::ZERO; md + 1];
    let mut cur = Dd::ONE;
    for j in 0..=m as u64 {
        b[j as usize] = cur;
        if j < m as u64 {
            cur = cur * Dd::from_u64(m as u64 - j)
                / (Dd::from_u64(2 * m as u64 - j) * Dd::from_u64(j + 1));
        }
    }

    // p(-iy) and p(iy) coefficient lists
    let mut p_neg = vec![CDd::ZERO; md + 1];
    let mut p_pos = vec![CDd::ZERO; md + 1];
    let mut rot_neg = CDd::ONE; // (-i)^j
    let mut rot_pos = CDd::ONE; // (+i)^j
    for j in 0..=md {
        p_neg[j] = CDd::new(rot_neg.re * b[j], rot_neg.im * b[j]);
        p_pos[j] = CDd::new(rot_pos.re * b[j], rot_pos.im * b[j]);
        rot_neg = rot_neg.mul_neg_i();
        rot_pos = CDd::new(-rot_pos.im, rot_pos.re); // multiply by +i
    }

    // q = 1 / p(iy) by series inversion (p_pos[0] = 1)
    let mut q = vec![CDd::ZERO; k + 1];
    q[0] = CDd::ONE;
    for n in 1..=k {
        let mut s = CDd::ZERO;
        for j in 1..=md.min(n) {
            s = s + p_pos[j] * q[n - j];
        }
        q[n] = -s;
    }

    // r = p(-iy) * q, then d_k = r_k - (-i)^k / k!
    let mut d_abs = vec![0.0; k + 1];
    let mut rot = CDd::ONE; // (-i)^k
    let mut inv_fact = Dd::ONE; // 1/k!
    for n in 0..=k {
        let mut r = CDd::ZERO;
        for j in 0..=md.min(n) {
            r = r + p_neg[j] * q[n - j];
        }
        let e = CDd::new(rot.re * inv_fact, rot.im * inv_fact);
        d_abs[n] = (r - e).abs().to_f64();
        rot = rot.mul_neg_i();
        inv_fact = inv_fact / Dd::from_u64(n as u64 + 1);
    }

    // sanity: moduli must eventually decay (radius of convergence is set by
    // the smallest zero of p_m, well beyond 1)
    let tail = &d_abs[d_abs.len().saturating_sub(100)..];
    if tail.len() > 2 && tail.windows(2).all(|w| w[1] >= w[0]) && tail[0] > 0.0 {
        return Err(Error::PrecisionExhausted);
    }

    Ok(PadeSeries { m, d_abs })
}
