//! Symbolic re-expansion of the factored schemes in double-double
//! arithmetic.
//!
//! Replays each product sequence over dense polynomials in the matrix
//! argument. The result is compared against the Chebyshev series
//! coefficients (transcription checksum) and drives the sine-threshold
//! computation for the approximate-sine variants.

use super::coeffs;
use super::{cossin_scheme, CosSinSchemeId, ExpSchemeId};
use crate::bounds::cheb_coeffs_exp_dd;
use crate::xprec::{CDd, Dd, DdPoly};

fn cc(z: coeffs::C2) -> CDd {
    CDd::from_f64(z.0, z.1)
}

fn cr(x: f64) -> CDd {
    CDd::from_f64(x, 0.0)
}

fn lin(c0: CDd, terms: &[(CDd, &DdPoly)]) -> DdPoly {
    let mut acc = DdPoly::constant(c0);
    for (s, p) in terms {
        acc = acc.add(&p.scale(*s));
    }
    acc
}

/// Monomial coefficients of the factored exponential scheme.
pub fn expand_exp_scheme(id: ExpSchemeId) -> DdPoly {
    let a = DdPoly::x();
    match id {
        ExpSchemeId::M2 => {
            use coeffs::m2::*;
            let a2 = a.mul(&a);
            lin(cc(ALPHA0), &[(cc(ALPHA1), &a), (cc(ALPHA2), &a2)])
        }
        ExpSchemeId::M4 => {
            use coeffs::m4::*;
            let a2 = a.mul(&a);
            let a4 = a2.mul(&lin(CDd::ZERO, &[(cc(X1), &a), (cc(X2), &a2)]));
            lin(cc(ALPHA0), &[(cc(ALPHA1), &a), (cc(ALPHA2), &a2)]).add(&a4)
        }
        ExpSchemeId::M8 => {
            use coeffs::m8::*;
            let a2 = a.mul(&a);
            let a4 = a2.mul(&lin(CDd::ZERO, &[(cc(X1), &a), (cc(X2), &a2)]));
            let left = lin(CDd::ZERO, &[(cc(X3), &a2), (CDd::ONE, &a4)]);
            let right = lin(cc(X4), &[(cc(X5), &a), (cc(X6), &a2), (cc(X7), &a4)]);
            let a8 = left.mul(&right);
            lin(cc(ALPHA0), &[(cc(ALPHA1), &a), (cc(ALPHA2), &a2)]).add(&a8)
        }
        ExpSchemeId::M12 => {
            use coeffs::m12::A;
            let a2 = a.mul(&a);
            let a3 = a2.mul(&a);
            let b: Vec<DdPoly> = A
                .iter()
                .map(|col| lin(cc(col[0]), &[(cc(col[1]), &a), (cc(col[2]), &a2), (cc(col[3]), &a3)]))
                .collect();
            let a6 = b[2].add(&b[3].mul(&b[3]));
            b[0].add(&b[1].add(&a6).mul(&a6))
        }
        ExpSchemeId::M18 => {
            use coeffs::m18::{A1, B};
            let a2 = a.mul(&a);
            let a3 = a2.mul(&a);
            let a6 = a3.mul(&a3);
            let b1 = lin(cc(A1[0]), &[(cc(A1[1]), &a), (cc(A1[2]), &a2), (cc(A1[3]), &a3)]);
            let bs: Vec<DdPoly> = B
                .iter()
                .map(|col| {
                    lin(
                        cc(col[0]),
                        &[(cc(col[1]), &a), (cc(col[2]), &a2), (cc(col[3]), &a3), (cc(col[4]), &a6)],
                    )
                })
                .collect();
            let a9 = b1.mul(&bs[3]).add(&bs[2]);
            bs[0].add(&bs[1].add(&a9).mul(&a9))
        }
    }
}

/// Monomial coefficients `(cos, sine)` of the factored cosine/sine scheme;
/// the sine component is the stand-in polynomial for approximate variants.
pub fn expand_cossin_scheme(id: CosSinSchemeId) -> (DdPoly, DdPoly) {
    let a = DdPoly::x();
    match id {
        CosSinSchemeId::Cs5 => {
            use coeffs::cs5::*;
            let b = a.mul(&a);
            let b2 = b.mul(&b);
            let cos = lin(cr(ALPHA[0]), &[(cr(ALPHA[1]), &b), (cr(ALPHA[2]), &b2)]);
            let sin = a.mul(&lin(cr(Z[0]), &[(cr(Z[1]), &b), (cr(Z[2]), &b2)]));
            (cos, sin)
        }
        CosSinSchemeId::Cs8a => {
            use coeffs::cs8::*;
            let b = a.mul(&a);
            let b2 = b.mul(&b);
            let b4 = b2.mul(&lin(CDd::ZERO, &[(cr(X[0]), &b), (cr(X[1]), &b2)]));
            let cos = lin(cr(ALPHA[0]), &[(cr(ALPHA[1]), &b), (cr(ALPHA[2]), &b2)]).add(&b4);
            let sin = a.mul(&lin(cr(Z[0]), &[(cr(Z[1]), &b), (cr(Z[2]), &b2), (cr(Z[3]), &cos)]));
            (cos, sin)
        }
        CosSinSchemeId::Cs9 => {
            use coeffs::cs9::*;
            let b = a.mul(&a);
            let b2 = b.mul(&b);
            let b3 = b2.mul(&b);
            let b4 = b3.mul(&b);
            let cos = lin(
                cr(ALPHA[0]),
                &[(cr(ALPHA[1]), &b), (cr(ALPHA[2]), &b2), (cr(ALPHA[3]), &b3), (cr(ALPHA[4]), &b4)],
            );
            let sin = a.mul(&lin(
                cr(Z[0]),
                &[(cr(Z[1]), &b), (cr(Z[2]), &b2), (cr(Z[3]), &b3), (cr(Z[4]), &b4)],
            ));
            (cos, sin)
        }
        CosSinSchemeId::Cs16a => {
            use coeffs::cs16::*;
            let b = a.mul(&a);
            let b2 = b.mul(&b);
            let b4 = b2.mul(&lin(CDd::ZERO, &[(cr(X[0]), &b), (cr(X[1]), &b2)]));
            let left = lin(CDd::ZERO, &[(cr(X[2]), &b2), (CDd::ONE, &b4)]);
            let right = lin(cr(X[3]), &[(cr(X[4]), &b), (cr(X[5]), &b2), (cr(X[6]), &b4)]);
            let b8 = left.mul(&right);
            let cos = lin(cr(ALPHA[0]), &[(cr(ALPHA[1]), &b), (cr(ALPHA[2]), &b2)]).add(&b8);
            let c24 = lin(
                cr(Z[5]),
                &[(cr(Z[5]), &b), (cr(Z[6]), &b2), (cr(Z[7]), &b4), (cr(Z[8]), &cos)],
            )
            .mul(&b4);
            let sin = a.mul(&lin(
                cr(Z[0]),
                &[(cr(Z[1]), &b), (cr(Z[2]), &b2), (cr(Z[3]), &b4), (cr(Z[4]), &cos), (CDd::ONE, &c24)],
            ));
            (cos, sin)
        }
        CosSinSchemeId::Cs24a => {
            use coeffs::cs24::{A, Z_APPROX as Z};
            let (d, d2, d3, d6, cos) = cos24_core_poly(&A);
            let c48 = lin(
                cr(Z[6]),
                &[(cr(Z[7]), &d), (cr(Z[8]), &d2), (cr(Z[9]), &d3), (cr(Z[10]), &d6), (cr(Z[11]), &cos)],
            )
            .mul(&cos);
            let sin = a.mul(&lin(
                cr(Z[0]),
                &[(cr(Z[1]), &d), (cr(Z[2]), &d2), (cr(Z[3]), &d3), (cr(Z[4]), &d6), (cr(Z[5]), &cos), (CDd::ONE, &c48)],
            ));
            (cos, sin)
        }
        CosSinSchemeId::Cs24x => {
            use coeffs::cs24::{A, Z_EXACT as Z};
            let (d, d2, d3, d6, cos) = cos24_core_poly(&A);
            let d5 = d2.mul(&lin(CDd::ZERO, &[(cr(Z[11]), &d2), (cr(Z[12]), &d3)]));
            let left = lin(
                cr(Z[6]),
                &[(cr(Z[7]), &d), (cr(Z[8]), &d2), (cr(Z[9]), &d3), (CDd::ONE, &d5), (cr(Z[13]), &d6)],
            );
            let right = lin(CDd::ZERO, &[(CDd::ONE, &d6), (cr(Z[10]), &d)]);
            let c24 = left.mul(&right);
            let sin = a.mul(&lin(
                cr(Z[0]),
                &[(cr(Z[1]), &d), (cr(Z[2]), &d2), (cr(Z[3]), &d3), (cr(Z[4]), &d5), (cr(Z[5]), &cos), (CDd::ONE, &c24)],
            ));
            (cos, sin)
        }
    }
}

fn cos24_core_poly(coeff: &[[f64; 4]; 4]) -> (DdPoly, DdPoly, DdPoly, DdPoly, DdPoly) {
    let a = DdPoly::x();
    let d = a.mul(&a);
    let d2 = d.mul(&d);
    let d3 = d2.mul(&d);
    let b: Vec<DdPoly> = coeff
        .iter()
        .map(|col| lin(cr(col[0]), &[(cr(col[1]), &d), (cr(col[2]), &d2), (cr(col[3]), &d3)]))
        .collect();
    let d6 = b[2].add(&b[3].mul(&b[3]));
    let cos = b[0].add(&b[1].add(&d6).mul(&d6));
    (d, d2, d3, d6, cos)
}

/// Monomial coefficients of the exact series `c0/2 + sum c_k T_k(y/theta)`.
pub fn cheb_series_poly_dd(m: u32, theta: f64) -> DdPoly {
    let c = cheb_coeffs_exp_dd(m, theta);
    let t = Dd::ONE / Dd::from_f64(theta);
    let mut tkm = DdPoly::constant(CDd::ONE);
    let mut tk = DdPoly {
        coeffs: vec![CDd::ZERO, CDd::new(t, Dd::ZERO)],
    };
    let half = CDd::new(Dd::from_f64(0.5), Dd::ZERO);
    let mut acc = DdPoly::constant(c[0] * half);
    if m >= 1 {
        acc = acc.add(&tk.scale(c[1]));
    }
    for k in 2..=m as usize {
        // T_{k+1}(y/theta) expressed in y: shift then scale by 2/theta
        let mut shifted = vec![CDd::ZERO];
        shifted.extend_from_slice(&tk.coeffs);
        let tnew = DdPoly { coeffs: shifted }
            .scale(CDd::new(Dd::from_f64(2.0) * t, Dd::ZERO))
            .sub(&tkm);
        tkm = tk;
        tk = tnew;
        acc = acc.add(&tk.scale(c[k]));
    }
    acc
}

/// `(cos part, sine part)` of the series as real-coefficient polynomials:
/// the real part and the negated imaginary part of [`cheb_series_poly_dd`].
pub fn cheb_series_cos_sin_dd(m: u32, theta: f64) -> (DdPoly, DdPoly) {
    let p = cheb_series_poly_dd(m, theta);
    let cos = DdPoly {
        coeffs: p.coeffs.iter().map(|z| CDd::new(z.re, Dd::ZERO)).collect(),
    };
    let sin = DdPoly {
        coeffs: p.coeffs.iter().map(|z| CDd::new(-z.im, Dd::ZERO)).collect(),
    };
    (cos, sin)
}

/// Largest deviation between two coefficient lists (moduli of differences).
pub fn max_coeff_deviation(a: &DdPoly, b: &DdPoly) -> f64 {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut worst = 0.0f64;
    for k in 0..n {
        let d = (a.coeff(k) - b.coeff(k)).abs().to_f64();
        worst = worst.max(d);
    }
    worst
}

/// Largest radius where the coefficient-sum bound on `|S - s|` stays below
/// `tol`: the root of `sum_{l > m} |e_l| v^l = tol` with
/// `e = S_poly - exact sine part`. `None` when the scheme's sine is exact
/// (the bound never reaches `tol` on the search window).
pub fn sine_gap_threshold(id: CosSinSchemeId, tol: f64) -> Option<f64> {
    let scheme = cossin_scheme(id);
    let (_, s_poly) = expand_cossin_scheme(id);
    let (_, s_exact) = cheb_series_cos_sin_dd(scheme.m, scheme.series_theta);
    let n = s_poly.coeffs.len().max(s_exact.coeffs.len());
    let mut e = vec![0.0f64; n];
    for (k, slot) in e.iter_mut().enumerate() {
        *slot = (s_poly.coeff(k) - s_exact.coeff(k)).abs().to_f64();
    }
    let m = scheme.m as usize;
    let g = |v: f64| -> f64 {
        let mut sum = 0.0;
        let mut pow = v.powi(m as i32);
        for t in e.iter().skip(m + 1) {
            pow *= v;
            sum += t * pow;
        }
        sum
    };
    if g(16.0) <= tol {
        return None;
    }
    let (mut lo, mut hi) = (1e-4f64, 16.0f64);
    if g(lo) > tol {
        return Some(lo);
    }
    while hi - lo > 1e-9 * lo {
        let mid = 0.5 * (lo + hi);
        if g(mid) <= tol {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyeval::{COSSIN_SCHEMES, EXP_SCHEMES};
    use crate::UNIT_ROUNDOFF;

    #[test]
    fn exp_scheme_checksums() {
        for s in EXP_SCHEMES {
            let got = expand_exp_scheme(s.id);
            let want = cheb_series_poly_dd(s.m, s.theta);
            let dev = max_coeff_deviation(&got, &want);
            assert!(dev <= 1e-14, "{:?}: coefficient deviation {dev}", s.id);
        }
    }

    #[test]
    fn cos_scheme_checksums() {
        // cosine legs all reproduce the series' real part; the published
        // degree-24 data limits agreement to ~2e-14 there
        for s in COSSIN_SCHEMES {
            let (cos, _) = expand_cossin_scheme(s.id);
            let (cos_want, _) = cheb_series_cos_sin_dd(s.m, s.series_theta);
            let dev = max_coeff_deviation(&cos, &cos_want);
            let tol = if s.m == 24 { 2e-14 } else { 1e-14 };
            assert!(dev <= tol, "{:?}: cos coefficient deviation {dev}", s.id);
        }
    }

    #[test]
    fn exact_sine_checksums() {
        for s in COSSIN_SCHEMES.iter().filter(|s| s.sine_exact) {
            let (_, sin) = expand_cossin_scheme(s.id);
            let (_, sin_want) = cheb_series_cos_sin_dd(s.m, s.series_theta);
            let dev = max_coeff_deviation(&sin, &sin_want);
            // the published degree-24 exact-sine data carries ~1e-13 noise
            // in its largest coefficients
            let tol = if s.m == 24 { 5e-13 } else { 1e-14 };
            assert!(dev <= tol, "{:?}: sine coefficient deviation {dev}", s.id);
        }
    }

    #[test]
    fn gap_thresholds_reproduce_published_values() {
        let t8 = sine_gap_threshold(CosSinSchemeId::Cs8a, UNIT_ROUNDOFF).unwrap();
        assert!((t8 - 0.06807).abs() <= 6e-3 * 0.06807, "got {t8}");
        let t16 = sine_gap_threshold(CosSinSchemeId::Cs16a, UNIT_ROUNDOFF).unwrap();
        assert!((t16 - 0.7563).abs() <= 6e-3 * 0.7563, "got {t16}");
        let t24 = sine_gap_threshold(CosSinSchemeId::Cs24a, UNIT_ROUNDOFF).unwrap();
        assert!((t24 - 2.1556).abs() <= 6e-3 * 2.1556, "got {t24}");
    }

    #[test]
    fn exact_sine_schemes_have_no_gap() {
        assert!(sine_gap_threshold(CosSinSchemeId::Cs5, UNIT_ROUNDOFF).is_none());
        assert!(sine_gap_threshold(CosSinSchemeId::Cs9, UNIT_ROUNDOFF).is_none());
    }
}
