//! Bessel functions of the first kind by ascending power series in
//! double-double arithmetic.

use crate::error::{Error, Result};
use crate::xprec::Dd;

/// `J_k(theta)` in double-double precision. No argument validation; the
/// public wrapper applies the supported range.
pub fn bessel_j_dd(k: u32, theta: Dd) -> Dd {
    let half = theta * Dd::from_f64(0.5);
    // leading term (theta/2)^k / k!, built incrementally to avoid overflow
    let mut term = Dd::ONE;
    for j in 1..=k as u64 {
        term = term * half / Dd::from_u64(j);
    }
    let x2 = half * half;
    let mut sum = term;
    let mut j = 0u64;
    loop {
        term = -term * x2 / Dd::from_u64((j + 1) * (k as u64 + j + 1));
        sum = sum + term;
        j += 1;
        if term.abs().to_f64() < 1e-40 || j > 300 {
            break;
        }
    }
    sum
}

/// `J_k(theta)` for `k <= 200` and `0 <= theta <= 64` (the range the theta
/// searches sweep).
pub fn bessel_j(k: u32, theta: f64) -> Result<f64> {
    if k > 200 {
        return Err(Error::Unsupported(format!("Bessel order {k} > 200")));
    }
    if !(0.0..=64.0).contains(&theta) {
        return Err(Error::Unsupported(format!(
            "Bessel argument {theta} outside [0, 64]"
        )));
    }
    Ok(bessel_j_dd(k, Dd::from_f64(theta)).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn jk_at_zero_is_zero() {
        for k in 1..20 {
            assert_eq!(bessel_j(k, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn j5_matches_explicit_series_oracle() {
        // independent check: sum the series term-by-term with the factorials
        // rebuilt from scratch at each order (no recurrence reuse)
        let theta = 2.212f64;
        let half = Dd::from_f64(theta) * Dd::from_f64(0.5);
        let mut oracle = Dd::ZERO;
        for j in 0u64..60 {
            let mut num = half.powi(5 + 2 * j as u32);
            let mut den = Dd::ONE;
            for t in 1..=j {
                den = den * Dd::from_u64(t);
            }
            for t in 1..=(5 + j) {
                den = den * Dd::from_u64(t);
            }
            num = num / den;
            if j % 2 == 1 {
                num = -num;
            }
            oracle = oracle + num;
        }
        let got = bessel_j(5, theta).unwrap();
        assert!(
            (got - oracle.to_f64()).abs() < 1e-18,
            "got {got}, oracle {}",
            oracle.to_f64()
        );
    }

    #[test]
    fn first_j0_root_location() {
        let v = bessel_j(0, 2.404825557695773).unwrap();
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(bessel_j(201, 1.0).is_err());
        assert!(bessel_j(2, 65.0).is_err());
        assert!(bessel_j(2, -1.0).is_err());
    }
}
