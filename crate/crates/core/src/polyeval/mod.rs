//! The hard-coded minimal-product evaluation schemes.
//!
//! Exponential schemes of degree 2, 4, 8, 12, 18 evaluate the Chebyshev
//! approximation of `exp(-i*A)` with exactly 1, 2, 3, 4, 5 complex products.
//! Cosine/sine schemes of degree 5, 8, 9, 16, 24 evaluate the real and
//! imaginary parts simultaneously with 3..8 products of real matrices; the
//! 8/16/24-product-4/6/7 variants approximate the sine by a higher-degree
//! polynomial, which shrinks their validity radius to the published
//! thresholds.

mod coeffs;
pub mod expand;

use crate::bounds::ChebCoeffSet;
use crate::error::{Error, Result};
use crate::matcore::{mat_mul, mat_mul_real, ComplexMatrix, CostLedger, RealMatrix};
use coeffs::C2;
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpSchemeId {
    M2,
    M4,
    M8,
    M12,
    M18,
}

/// Descriptor of one exponential scheme.
#[derive(Clone, Copy, Debug)]
pub struct ExpScheme {
    pub id: ExpSchemeId,
    /// Polynomial degree.
    pub m: u32,
    /// Validity radius (largest spectral half-width at unit roundoff).
    pub theta: f64,
    /// Exact number of complex matrix products.
    pub pi: u32,
}

pub const EXP_SCHEMES: [ExpScheme; 5] = [
    ExpScheme { id: ExpSchemeId::M2, m: 2, theta: 1.38e-5, pi: 1 },
    ExpScheme { id: ExpSchemeId::M4, m: 4, theta: 2.92e-3, pi: 2 },
    ExpScheme { id: ExpSchemeId::M8, m: 8, theta: 0.1295, pi: 3 },
    ExpScheme { id: ExpSchemeId::M12, m: 12, theta: 0.636, pi: 4 },
    ExpScheme { id: ExpSchemeId::M18, m: 18, theta: 2.212, pi: 5 },
];

pub fn exp_scheme(id: ExpSchemeId) -> &'static ExpScheme {
    EXP_SCHEMES.iter().find(|s| s.id == id).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosSinSchemeId {
    Cs5,
    Cs8a,
    Cs9,
    Cs16a,
    Cs24a,
    Cs24x,
}

/// Descriptor of one simultaneous cosine/sine scheme.
#[derive(Clone, Copy, Debug)]
pub struct CosSinScheme {
    pub id: CosSinSchemeId,
    /// Degree of the underlying Chebyshev approximation.
    pub m: u32,
    /// Validity radius of the scheme (the sine threshold for approximate
    /// variants).
    pub theta: f64,
    /// Interval half-width the series coefficients were generated for.
    pub series_theta: f64,
    /// Exact number of real matrix products.
    pub pi: u32,
    /// Whether the sine polynomial is evaluated exactly.
    pub sine_exact: bool,
}

pub const COSSIN_SCHEMES: [CosSinScheme; 6] = [
    CosSinScheme { id: CosSinSchemeId::Cs5, m: 5, theta: 1.17e-2, series_theta: 1.17e-2, pi: 3, sine_exact: true },
    CosSinScheme { id: CosSinSchemeId::Cs8a, m: 8, theta: 0.06807, series_theta: 0.1295, pi: 4, sine_exact: false },
    CosSinScheme { id: CosSinSchemeId::Cs9, m: 9, theta: 0.2143, series_theta: 0.2143, pi: 5, sine_exact: true },
    CosSinScheme { id: CosSinSchemeId::Cs16a, m: 16, theta: 0.7563, series_theta: 1.5867, pi: 6, sine_exact: false },
    CosSinScheme { id: CosSinSchemeId::Cs24a, m: 24, theta: 2.1556, series_theta: 4.5743, pi: 7, sine_exact: false },
    CosSinScheme { id: CosSinSchemeId::Cs24x, m: 24, theta: 4.5743, series_theta: 4.5743, pi: 8, sine_exact: true },
];

pub fn cossin_scheme(id: CosSinSchemeId) -> &'static CosSinScheme {
    COSSIN_SCHEMES.iter().find(|s| s.id == id).unwrap()
}

#[inline]
fn c(z: C2) -> Complex64 {
    Complex64::new(z.0, z.1)
}

/// `c0*I + sum coeff_k * M_k` without charging any product.
fn combo(n: usize, c0: Complex64, terms: &[(Complex64, &ComplexMatrix)]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(n);
    for (s, m) in terms {
        if s.re == 0.0 && s.im == 0.0 {
            continue;
        }
        out = out.add(&m.scale(*s));
    }
    if c0.re != 0.0 || c0.im != 0.0 {
        out = out.add_scaled_identity(c0);
    }
    out
}

fn combo_real(n: usize, c0: f64, terms: &[(f64, &RealMatrix)]) -> RealMatrix {
    let mut out = RealMatrix::zeros(n);
    for (s, m) in terms {
        if *s == 0.0 {
            continue;
        }
        out = out.add(&m.scale(*s));
    }
    if c0 != 0.0 {
        out = out.add_scaled_identity(c0);
    }
    out
}

/// Evaluate the degree-m Chebyshev approximation of `exp(-i*A)` with the
/// scheme's exact product count.
///
/// The caller (normally the selection driver) is responsible for the
/// spectral-radius precondition; a Hermitian-residual debug assertion
/// catches misuse of the input class.
pub fn eval_exp(id: ExpSchemeId, a: &ComplexMatrix, ledger: &mut CostLedger) -> Result<ComplexMatrix> {
    let n = a.n();
    if n == 0 {
        return Err(Error::Unsupported("empty matrix".into()));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    debug_assert!(
        a.hermitian_residual() <= 1e-10 * a.max_abs().max(1e-300),
        "eval_exp input is far from Hermitian"
    );
    Ok(match id {
        ExpSchemeId::M2 => {
            use coeffs::m2::*;
            let a2 = mat_mul(a, a, ledger);
            combo(n, c(ALPHA0), &[(c(ALPHA1), a), (c(ALPHA2), &a2)])
        }
        ExpSchemeId::M4 => {
            use coeffs::m4::*;
            let a2 = mat_mul(a, a, ledger);
            let inner = combo(n, Complex64::default(), &[(c(X1), a), (c(X2), &a2)]);
            let a4 = mat_mul(&a2, &inner, ledger);
            combo(n, c(ALPHA0), &[(c(ALPHA1), a), (c(ALPHA2), &a2)]).add(&a4)
        }
        ExpSchemeId::M8 => {
            use coeffs::m8::*;
            let a2 = mat_mul(a, a, ledger);
            let inner = combo(n, Complex64::default(), &[(c(X1), a), (c(X2), &a2)]);
            let a4 = mat_mul(&a2, &inner, ledger);
            let left = combo(n, Complex64::default(), &[(c(X3), &a2), (Complex64::new(1.0, 0.0), &a4)]);
            let right = combo(n, c(X4), &[(c(X5), a), (c(X6), &a2), (c(X7), &a4)]);
            let a8 = mat_mul(&left, &right, ledger);
            combo(n, c(ALPHA0), &[(c(ALPHA1), a), (c(ALPHA2), &a2)]).add(&a8)
        }
        ExpSchemeId::M12 => {
            use coeffs::m12::A;
            let a2 = mat_mul(a, a, ledger);
            let a3 = mat_mul(&a2, a, ledger);
            let b: Vec<ComplexMatrix> = A
                .iter()
                .map(|col| combo(n, c(col[0]), &[(c(col[1]), a), (c(col[2]), &a2), (c(col[3]), &a3)]))
                .collect();
            let a6 = b[2].add(&mat_mul(&b[3], &b[3], ledger));
            b[0].add(&mat_mul(&b[1].add(&a6), &a6, ledger))
        }
        ExpSchemeId::M18 => {
            use coeffs::m18::{A1, B};
            let a2 = mat_mul(a, a, ledger);
            let a3 = mat_mul(&a2, a, ledger);
            let a6 = mat_mul(&a3, &a3, ledger);
            let b1 = combo(n, c(A1[0]), &[(c(A1[1]), a), (c(A1[2]), &a2), (c(A1[3]), &a3)]);
            let bs: Vec<ComplexMatrix> = B
                .iter()
                .map(|col| {
                    combo(
                        n,
                        c(col[0]),
                        &[(c(col[1]), a), (c(col[2]), &a2), (c(col[3]), &a3), (c(col[4]), &a6)],
                    )
                })
                .collect();
            // bs = [B2, B3, B4, B5]
            let a9 = mat_mul(&b1, &bs[3], ledger).add(&bs[2]);
            bs[0].add(&mat_mul(&bs[1].add(&a9), &a9, ledger))
        }
    })
}

/// Evaluate `(cos A, sin A)` for real symmetric `A` with the scheme's exact
/// product count. For approximate-sine variants the second component is the
/// higher-degree stand-in polynomial, accurate to unit roundoff inside the
/// scheme's validity radius.
pub fn eval_cossin(
    id: CosSinSchemeId,
    a: &RealMatrix,
    ledger: &mut CostLedger,
) -> Result<(RealMatrix, RealMatrix)> {
    let n = a.n();
    if n == 0 {
        return Err(Error::Unsupported("empty matrix".into()));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    a.check_symmetric(crate::HERMITIAN_TOL)?;
    Ok(match id {
        CosSinSchemeId::Cs5 => {
            use coeffs::cs5::*;
            let b = mat_mul_real(a, a, ledger);
            let b2 = mat_mul_real(&b, &b, ledger);
            let cos = combo_real(n, ALPHA[0], &[(ALPHA[1], &b), (ALPHA[2], &b2)]);
            let bracket = combo_real(n, Z[0], &[(Z[1], &b), (Z[2], &b2)]);
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
        CosSinSchemeId::Cs8a => {
            use coeffs::cs8::*;
            let b = mat_mul_real(a, a, ledger);
            let b2 = mat_mul_real(&b, &b, ledger);
            let inner = combo_real(n, 0.0, &[(X[0], &b), (X[1], &b2)]);
            let b4 = mat_mul_real(&b2, &inner, ledger);
            let cos = combo_real(n, ALPHA[0], &[(ALPHA[1], &b), (ALPHA[2], &b2)]).add(&b4);
            let bracket = combo_real(n, Z[0], &[(Z[1], &b), (Z[2], &b2), (Z[3], &cos)]);
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
        CosSinSchemeId::Cs9 => {
            use coeffs::cs9::*;
            let b = mat_mul_real(a, a, ledger);
            let b2 = mat_mul_real(&b, &b, ledger);
            let b3 = mat_mul_real(&b2, &b, ledger);
            let b4 = mat_mul_real(&b3, &b, ledger);
            let cos = combo_real(
                n,
                ALPHA[0],
                &[(ALPHA[1], &b), (ALPHA[2], &b2), (ALPHA[3], &b3), (ALPHA[4], &b4)],
            );
            let bracket =
                combo_real(n, Z[0], &[(Z[1], &b), (Z[2], &b2), (Z[3], &b3), (Z[4], &b4)]);
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
        CosSinSchemeId::Cs16a => {
            use coeffs::cs16::*;
            let b = mat_mul_real(a, a, ledger);
            let b2 = mat_mul_real(&b, &b, ledger);
            let inner = combo_real(n, 0.0, &[(X[0], &b), (X[1], &b2)]);
            let b4 = mat_mul_real(&b2, &inner, ledger);
            let left = combo_real(n, 0.0, &[(X[2], &b2), (1.0, &b4)]);
            let right = combo_real(n, X[3], &[(X[4], &b), (X[5], &b2), (X[6], &b4)]);
            let b8 = mat_mul_real(&left, &right, ledger);
            let cos = combo_real(n, ALPHA[0], &[(ALPHA[1], &b), (ALPHA[2], &b2)]).add(&b8);
            let c24_left =
                combo_real(n, Z[5], &[(Z[5], &b), (Z[6], &b2), (Z[7], &b4), (Z[8], &cos)]);
            let c24 = mat_mul_real(&c24_left, &b4, ledger);
            let bracket = combo_real(
                n,
                Z[0],
                &[(Z[1], &b), (Z[2], &b2), (Z[3], &b4), (Z[4], &cos), (1.0, &c24)],
            );
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
        CosSinSchemeId::Cs24a => {
            use coeffs::cs24::{A, Z_APPROX as Z};
            let (d, d2, d3, d6, cos) = cos24_core(a, &A, ledger);
            let c48_left = combo_real(
                n,
                Z[6],
                &[(Z[7], &d), (Z[8], &d2), (Z[9], &d3), (Z[10], &d6), (Z[11], &cos)],
            );
            let c48 = mat_mul_real(&c48_left, &cos, ledger);
            let bracket = combo_real(
                n,
                Z[0],
                &[(Z[1], &d), (Z[2], &d2), (Z[3], &d3), (Z[4], &d6), (Z[5], &cos), (1.0, &c48)],
            );
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
        CosSinSchemeId::Cs24x => {
            use coeffs::cs24::{A, Z_EXACT as Z};
            let (d, d2, d3, d6, cos) = cos24_core(a, &A, ledger);
            let d5_inner = combo_real(n, 0.0, &[(Z[11], &d2), (Z[12], &d3)]);
            let d5 = mat_mul_real(&d2, &d5_inner, ledger);
            let left = combo_real(
                n,
                Z[6],
                &[(Z[7], &d), (Z[8], &d2), (Z[9], &d3), (1.0, &d5), (Z[13], &d6)],
            );
            let right = combo_real(n, 0.0, &[(1.0, &d6), (Z[10], &d)]);
            let c24 = mat_mul_real(&left, &right, ledger);
            let bracket = combo_real(
                n,
                Z[0],
                &[(Z[1], &d), (Z[2], &d2), (Z[3], &d3), (Z[4], &d5), (Z[5], &cos), (1.0, &c24)],
            );
            let sin = mat_mul_real(a, &bracket, ledger);
            (cos, sin)
        }
    })
}

/// Shared degree-24 cosine core: five products for `D, D2, D3, D6, cos`.
fn cos24_core(
    a: &RealMatrix,
    coeff: &[[f64; 4]; 4],
    ledger: &mut CostLedger,
) -> (RealMatrix, RealMatrix, RealMatrix, RealMatrix, RealMatrix) {
    let n = a.n();
    let d = mat_mul_real(a, a, ledger);
    let d2 = mat_mul_real(&d, &d, ledger);
    let d3 = mat_mul_real(&d2, &d, ledger);
    let b: Vec<RealMatrix> = coeff
        .iter()
        .map(|col| combo_real(n, col[0], &[(col[1], &d), (col[2], &d2), (col[3], &d3)]))
        .collect();
    let d6 = b[2].add(&mat_mul_real(&b[3], &b[3], ledger));
    let cos = b[0].add(&mat_mul_real(&b[1].add(&d6), &d6, ledger));
    (d, d2, d3, d6, cos)
}

/// Clenshaw evaluation of the series `c0/2 I + sum c_k T_k(A/theta)`.
///
/// Backward three-term recurrence, m products; not cost-optimal, serves as
/// the independent reference for the factored schemes.
pub fn clenshaw_reference(
    coeffs: &ChebCoeffSet,
    a: &ComplexMatrix,
    ledger: &mut CostLedger,
) -> Result<ComplexMatrix> {
    if a.n() == 0 {
        return Err(Error::Unsupported("empty matrix".into()));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = a.n();
    let m = coeffs.m as usize;
    let two_over_theta = Complex64::new(2.0 / coeffs.theta, 0.0);
    // b_k = c_k I + (2/theta) A b_{k+1} - b_{k+2}
    let mut b_next = ComplexMatrix::zeros(n); // b_{m+1}
    let mut b_cur = ComplexMatrix::zeros(n).add_scaled_identity(coeffs.c[m]); // b_m
    for k in (1..m).rev() {
        let prod = mat_mul(a, &b_cur, ledger).scale(two_over_theta);
        let b_new = prod.sub(&b_next).add_scaled_identity(coeffs.c[k]);
        b_next = b_cur;
        b_cur = b_new;
    }
    // P = c0/2 I + (1/theta) A b_1 - b_2
    let prod = mat_mul(a, &b_cur, ledger).scale(Complex64::new(1.0 / coeffs.theta, 0.0));
    Ok(prod
        .sub(&b_next)
        .add_scaled_identity(coeffs.c[0] * Complex64::new(0.5, 0.0)))
}
