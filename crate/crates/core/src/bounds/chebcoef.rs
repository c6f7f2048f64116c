//! Chebyshev series coefficients of `exp(-i*y)` on `[-theta, theta]`.
//!
//! The series is `P(y) = c_0/2 + sum_{k=1}^{m} c_k T_k(y/theta)` with
//! `c_0 = 2 J_0(theta)` and `c_k = 2 (-i)^k J_k(theta)`. Generation runs in
//! double-double arithmetic; the public set rounds to doubles. A
//! Gauss-Chebyshev quadrature route computes the same integrals and serves as
//! an independent cross-check of the Bessel identity.

use super::bessel::bessel_j_dd;
use crate::error::{Error, Result};
use crate::xprec::{CDd, Dd};
use num_complex::Complex64;

/// Coefficient set of one `(m, theta)` Chebyshev approximation.
/// `c[0]` is used with the 1/2 weight of the series form.
#[derive(Clone, Debug)]
pub struct ChebCoeffSet {
    pub m: u32,
    pub theta: f64,
    pub c: Vec<Complex64>,
}

/// Double-double coefficients `c_k = 2 (-i)^k J_k(theta)`, `k = 0..=m`.
pub fn cheb_coeffs_exp_dd(m: u32, theta: f64) -> Vec<CDd> {
    let th = Dd::from_f64(theta);
    let mut rot = CDd::ONE; // (-i)^k ladder
    let mut out = Vec::with_capacity(m as usize + 1);
    for k in 0..=m {
        let jk = bessel_j_dd(k, th) * Dd::from_f64(2.0);
        out.push(CDd::new(rot.re * jk, rot.im * jk));
        rot = rot.mul_neg_i();
    }
    out
}

/// Correctly rounded double-precision coefficient set.
pub fn cheb_coeffs_exp(m: u32, theta: f64) -> Result<ChebCoeffSet> {
    if m == 0 || m > 64 {
        return Err(Error::Unsupported(format!("Chebyshev degree {m}")));
    }
    if !(theta > 0.0 && theta <= 64.0) {
        return Err(Error::Unsupported(format!("theta {theta} outside (0, 64]")));
    }
    let c = cheb_coeffs_exp_dd(m, theta)
        .into_iter()
        .map(|z| Complex64::new(z.re.to_f64(), z.im.to_f64()))
        .collect();
    Ok(ChebCoeffSet { m, theta, c })
}

/// Same coefficients by Gauss-Chebyshev quadrature with `nodes` points:
/// `c_k ~= (2/n) sum_j exp(-i theta y_j) T_k(y_j)`, `y_j = cos((2j-1)pi/2n)`.
///
/// `T_k(y_j)` is `cos(k (2j-1) pi / 2n)`; the angle is reduced with integer
/// arithmetic before the double-double cosine.
pub fn cheb_coeffs_quadrature_dd(m: u32, theta: f64, nodes: u32) -> Vec<CDd> {
    let n = nodes as u64;
    let th = Dd::from_f64(theta);
    // precompute f(y_j) = exp(-i theta y_j)
    let mut fvals = Vec::with_capacity(nodes as usize);
    let mut yvals = Vec::with_capacity(nodes as usize);
    for j in 1..=n {
        let ang = Dd::from_u64(2 * j - 1) * Dd::PI / Dd::from_u64(2 * n);
        let (_, y) = ang.sin_cos();
        let (s, c) = (th * y).sin_cos();
        yvals.push(y);
        fvals.push(CDd::new(c, -s));
    }
    let mut out = Vec::with_capacity(m as usize + 1);
    for k in 0..=m as u64 {
        let mut acc = CDd::ZERO;
        for j in 1..=n {
            let r = (k * (2 * j - 1)) % (4 * n);
            let ang = Dd::from_u64(r) * Dd::PI / Dd::from_u64(2 * n);
            let (_, t) = ang.sin_cos();
            let f = fvals[(j - 1) as usize];
            acc = acc + CDd::new(f.re * t, f.im * t);
        }
        let w = Dd::from_f64(2.0) / Dd::from_u64(n);
        out.push(CDd::new(acc.re * w, acc.im * w));
    }
    out
}

/// Evaluate the series `c_0/2 + sum c_k T_k(y/theta)` at a real scalar in
/// double-double arithmetic via the T_k three-term recurrence.
pub fn series_eval_dd(c: &[CDd], theta: f64, y: Dd) -> CDd {
    let x = y / Dd::from_f64(theta);
    let half = Dd::from_f64(0.5);
    let mut acc = CDd::new(c[0].re * half, c[0].im * half);
    if c.len() == 1 {
        return acc;
    }
    let mut tkm = Dd::ONE;
    let mut tk = x;
    acc = acc + CDd::new(c[1].re * tk, c[1].im * tk);
    for ck in &c[2..] {
        let tnew = Dd::from_f64(2.0) * x * tk - tkm;
        tkm = tk;
        tk = tnew;
        acc = acc + CDd::new(ck.re * tk, ck.im * tk);
    }
    acc
}
