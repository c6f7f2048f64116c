//! Software extended precision: double-double scalars (~32 significant
//! decimal digits), the matching complex type, and dense polynomial
//! arithmetic over them.
//!
//! Used only where double precision is not enough: generating Chebyshev
//! coefficients and Padé error series, re-expanding the factored evaluation
//! schemes for checksum tests, and scalar reference values on test grids.
//! Nothing in the runtime matrix path touches this module.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Double-double number: an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// pi to double-double precision.
    pub const PI: Dd = Dd {
        hi: 3.141592653589793e0,
        lo: 1.2246467991473532e-16,
    };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn from_u64(x: u64) -> Dd {
        // split so both halves are exact in f64
        let hi = (x >> 32) as f64 * 4294967296.0;
        let lo = (x & 0xffff_ffff) as f64;
        Dd::from_f64(hi) + Dd::from_f64(lo)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of negative double-double");
        // one Newton step on a double seed reaches full dd precision
        let y = Dd::from_f64(self.hi.sqrt());
        (y + self / y) * Dd::from_f64(0.5)
    }

    pub fn powi(self, n: u32) -> Dd {
        let mut base = self;
        let mut n = n;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Taylor-series sine and cosine; accurate for |x| up to ~10 where the
    /// largest series term stays O(10^3).
    pub fn sin_cos(self) -> (Dd, Dd) {
        debug_assert!(self.hi.abs() <= 10.0, "dd sin_cos argument out of range");
        let x2 = self * self;
        let mut sin = self;
        let mut term = self;
        let mut k = 1u64;
        loop {
            // t_{k+1} = -t_k x^2 / ((2k)(2k+1))
            term = -term * x2 / Dd::from_u64(2 * k * (2 * k + 1));
            sin = sin + term;
            if term.hi.abs() < 1e-40 {
                break;
            }
            k += 1;
            if k > 60 {
                break;
            }
        }
        let mut cos = Dd::ONE;
        term = Dd::ONE;
        k = 1;
        loop {
            term = -term * x2 / Dd::from_u64((2 * k - 1) * (2 * k));
            cos = cos + term;
            if term.hi.abs() < 1e-40 {
                break;
            }
            k += 1;
            if k > 60 {
                break;
            }
        }
        (sin, cos)
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s2, e2) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s2, e2 + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r2 = r - rhs * Dd::from_f64(q2);
        let q3 = r2.hi / rhs.hi;
        Dd::from_f64(q1) + Dd::from_f64(q2) + Dd::from_f64(q3)
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

/// Complex double-double.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: CDd = CDd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn new(re: Dd, im: Dd) -> CDd {
        CDd { re, im }
    }

    #[inline]
    pub fn from_f64(re: f64, im: f64) -> CDd {
        CDd {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    /// Modulus, |z|.
    pub fn abs(self) -> Dd {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    /// Multiply by -i (rotation used when building `(-i)^k` coefficient
    /// ladders).
    #[inline]
    pub fn mul_neg_i(self) -> CDd {
        CDd {
            re: self.im,
            im: -self.re,
        }
    }
}

impl Add for CDd {
    type Output = CDd;
    #[inline]
    fn add(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for CDd {
    type Output = CDd;
    #[inline]
    fn sub(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for CDd {
    type Output = CDd;
    #[inline]
    fn neg(self) -> CDd {
        CDd {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for CDd {
    type Output = CDd;
    #[inline]
    fn mul(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

/// Dense polynomial over [`CDd`], coefficients ascending in the degree.
#[derive(Clone, Debug, Default)]
pub struct DdPoly {
    pub coeffs: Vec<CDd>,
}

impl DdPoly {
    pub fn zero() -> DdPoly {
        DdPoly { coeffs: vec![] }
    }

    pub fn constant(c: CDd) -> DdPoly {
        DdPoly { coeffs: vec![c] }
    }

    /// The monomial `x`.
    pub fn x() -> DdPoly {
        DdPoly {
            coeffs: vec![CDd::ZERO, CDd::ONE],
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> CDd {
        self.coeffs.get(k).copied().unwrap_or(CDd::ZERO)
    }

    pub fn add(&self, rhs: &DdPoly) -> DdPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![CDd::ZERO; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i] + *c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = out[i] + *c;
        }
        DdPoly { coeffs: out }
    }

    pub fn sub(&self, rhs: &DdPoly) -> DdPoly {
        self.add(&rhs.scale(CDd::from_f64(-1.0, 0.0)))
    }

    pub fn scale(&self, s: CDd) -> DdPoly {
        DdPoly {
            coeffs: self.coeffs.iter().map(|c| *c * s).collect(),
        }
    }

    pub fn mul(&self, rhs: &DdPoly) -> DdPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return DdPoly::zero();
        }
        let mut out = vec![CDd::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + *a * *b;
            }
        }
        DdPoly { coeffs: out }
    }

    /// Horner evaluation at a real point.
    pub fn eval_real(&self, x: Dd) -> CDd {
        let mut acc = CDd::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = CDd {
                re: acc.re * x + c.re,
                im: acc.im * x + c.im,
            };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_mul_div_roundtrip() {
        let a = Dd::from_f64(3.0) / Dd::from_f64(7.0);
        let b = a * Dd::from_f64(7.0);
        assert!((b - Dd::from_f64(3.0)).abs().to_f64() < 1e-30);
    }

    #[test]
    fn dd_sqrt_two() {
        let r = Dd::from_f64(2.0).sqrt();
        let back = r * r - Dd::from_f64(2.0);
        assert!(back.abs().to_f64() < 1e-30);
    }

    #[test]
    fn dd_sincos_pythagoras() {
        for &x in &[0.1, 1.0, 2.212, 4.5743, 6.2] {
            let (s, c) = Dd::from_f64(x).sin_cos();
            let res = (s * s + c * c - Dd::ONE).abs().to_f64();
            assert!(res < 1e-29, "x={x}: residual {res}");
            assert!((s.to_f64() - x.sin()).abs() < 1e-15);
            assert!((c.to_f64() - x.cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn dd_pi_accuracy() {
        let (s, _) = Dd::PI.sin_cos();
        assert!(s.abs().to_f64() < 1e-30);
    }

    #[test]
    fn poly_mul_matches_binomial() {
        // (1 + x)^2 = 1 + 2x + x^2
        let p = DdPoly {
            coeffs: vec![CDd::ONE, CDd::ONE],
        };
        let sq = p.mul(&p);
        assert_eq!(sq.coeffs.len(), 3);
        assert!((sq.coeff(1).re.to_f64() - 2.0).abs() < 1e-30);
        assert!((sq.coeff(2).re.to_f64() - 1.0).abs() < 1e-30);
    }
}
