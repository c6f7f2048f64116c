//! Dense square matrices, the instrumented product ledger, and norms.
//!
//! Matrices are immutable values with flat row-major storage. Every
//! matrix-matrix product goes through [`mat_mul`] / [`mat_mul_real`], which
//! charge an explicit [`CostLedger`]; scalar multiplies and additions are
//! free, matching the product-count cost model used throughout the library.

mod eig;
mod io;
mod lu;

pub use eig::{
    embed_hermitian, hermitian_cos_sin, hermitian_eigenvalues, symmetric_eigen,
    symmetric_matrix_functions2, SymmetricEigen,
};
pub use io::{format_complex_matrix, format_real_matrix, parse_matrix, ParsedMatrix};
pub use lu::lu_solve;

use crate::error::{Error, Result};
use num_complex::Complex64;
use num_rational::Rational64;

/// Instrumented count of matrix-matrix products.
///
/// `total_cost` is exact rational arithmetic: an inverse is charged as one LU
/// factorization (1/3 of a product) plus the triangular solves (one product),
/// i.e. 4/3 products in total.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CostLedger {
    pub complex_products: u64,
    pub real_products: u64,
    pub inverses: u64,
}

impl CostLedger {
    pub fn new() -> CostLedger {
        CostLedger::default()
    }

    /// Exact total in units of matrix products; denominator is always 3.
    pub fn total_cost(&self) -> Rational64 {
        Rational64::new(
            3 * (self.complex_products + self.real_products) as i64 + 4 * self.inverses as i64,
            3,
        )
    }

    pub fn merge(&mut self, other: &CostLedger) {
        self.complex_products += other.complex_products;
        self.real_products += other.real_products;
        self.inverses += other.inverses;
    }

    pub fn is_empty(&self) -> bool {
        *self == CostLedger::default()
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

/// Dense square real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> ComplexMatrix {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_diag(d: &[Complex64]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.data[i * d.len() + i] = v;
        }
        m
    }

    pub fn from_real(r: &RealMatrix) -> ComplexMatrix {
        ComplexMatrix {
            n: r.n,
            data: r.data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |A - A^H|` over entries.
    pub fn hermitian_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..=i {
                r = r.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        r
    }

    /// Reject matrices whose Hermitian residual exceeds `tol * max|A|`.
    pub fn check_hermitian(&self, tol: f64) -> Result<()> {
        if !self.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = self.hermitian_residual();
        if residual > tol * self.max_abs().max(1e-300) {
            return Err(Error::NotHermitian { residual, tol });
        }
        Ok(())
    }

    /// Max column sum of entry magnitudes.
    pub fn one_norm(&self) -> f64 {
        let mut best: f64 = 0.0;
        for j in 0..self.n {
            let mut s = 0.0;
            for i in 0..self.n {
                s += self.get(i, j).norm();
            }
            best = best.max(s);
        }
        best
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in add");
        ComplexMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in sub");
        ComplexMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self + s*I`.
    pub fn add_scaled_identity(&self, s: Complex64) -> ComplexMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] += s;
        }
        out
    }

    /// Matrix-vector product (not charged: the ledger counts matrix-matrix
    /// products only).
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n);
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, x) in row.iter().zip(v) {
                acc += a * x;
            }
            out[i] = acc;
        }
        out
    }
}

impl RealMatrix {
    pub fn zeros(n: usize) -> RealMatrix {
        RealMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> RealMatrix {
        let mut m = RealMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> RealMatrix {
        let mut m = RealMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_diag(d: &[f64]) -> RealMatrix {
        let mut m = RealMatrix::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.data[i * d.len() + i] = v;
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    pub fn symmetric_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..i {
                r = r.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        r
    }

    pub fn check_symmetric(&self, tol: f64) -> Result<()> {
        if !self.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = self.symmetric_residual();
        if residual > tol * self.max_abs().max(1e-300) {
            return Err(Error::NotSymmetric { residual, tol });
        }
        Ok(())
    }

    pub fn one_norm(&self) -> f64 {
        let mut best: f64 = 0.0;
        for j in 0..self.n {
            let mut s = 0.0;
            for i in 0..self.n {
                s += self.get(i, j).abs();
            }
            best = best.max(s);
        }
        best
    }

    pub fn add(&self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in add");
        RealMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in sub");
        RealMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> RealMatrix {
        RealMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add_scaled_identity(&self, s: f64) -> RealMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] += s;
        }
        out
    }
}

/// Complex matrix product, charged as one complex product.
///
/// Panics on dimension mismatch (shape errors are programming bugs here, as
/// in the rest of the dense linear algebra ecosystem).
pub fn mat_mul(a: &ComplexMatrix, b: &ComplexMatrix, ledger: &mut CostLedger) -> ComplexMatrix {
    assert_eq!(a.n, b.n, "dimension mismatch in mat_mul");
    ledger.complex_products += 1;
    let n = a.n;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        let arow = &a.data[i * n..(i + 1) * n];
        let orow = &mut out.data[i * n..(i + 1) * n];
        for (k, &aik) in arow.iter().enumerate() {
            if aik.re == 0.0 && aik.im == 0.0 {
                continue;
            }
            let brow = &b.data[k * n..(k + 1) * n];
            for (o, &bkj) in orow.iter_mut().zip(brow) {
                *o += aik * bkj;
            }
        }
    }
    out
}

/// Real matrix product, charged as one real-symmetric product.
pub fn mat_mul_real(a: &RealMatrix, b: &RealMatrix, ledger: &mut CostLedger) -> RealMatrix {
    assert_eq!(a.n, b.n, "dimension mismatch in mat_mul_real");
    ledger.real_products += 1;
    let n = a.n;
    let mut out = RealMatrix::zeros(n);
    for i in 0..n {
        let arow = &a.data[i * n..(i + 1) * n];
        let orow = &mut out.data[i * n..(i + 1) * n];
        for (k, &aik) in arow.iter().enumerate() {
            if aik == 0.0 {
                continue;
            }
            let brow = &b.data[k * n..(k + 1) * n];
            for (o, &bkj) in orow.iter_mut().zip(brow) {
                *o += aik * bkj;
            }
        }
    }
    out
}

/// Result of the power-iteration spectral norm estimate.
#[derive(Clone, Copy, Debug)]
pub struct TwoNormEstimate {
    pub value: f64,
    /// False when the iteration hit the 500-step cap before the relative
    /// change dropped below 1e-10; `value` is then the best estimate.
    pub converged: bool,
}

/// Largest singular value by power iteration on `A^H A`.
///
/// Deterministic: the start vector comes from a fixed splitmix64 stream, so
/// repeated calls yield identical results.
pub fn two_norm(a: &ComplexMatrix) -> TwoNormEstimate {
    let n = a.n;
    if n == 0 {
        return TwoNormEstimate {
            value: 0.0,
            converged: true,
        };
    }
    let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let mut v: Vec<Complex64> = (0..n).map(|_| Complex64::new(next(), next())).collect();
    normalize(&mut v);
    let adj = a.adjoint();
    let mut lambda = 0.0f64;
    for _ in 0..500 {
        let w = a.matvec(&v);
        let new_lambda: f64 = w.iter().map(|z| z.norm_sqr()).sum();
        if new_lambda == 0.0 {
            return TwoNormEstimate {
                value: 0.0,
                converged: true,
            };
        }
        let mut y = adj.matvec(&w);
        normalize(&mut y);
        v = y;
        if (new_lambda - lambda).abs() <= 1e-10 * new_lambda {
            return TwoNormEstimate {
                value: new_lambda.sqrt(),
                converged: true,
            };
        }
        lambda = new_lambda;
    }
    TwoNormEstimate {
        value: lambda.sqrt(),
        converged: false,
    }
}

/// Spectral norm of a real matrix via the complex path.
pub fn two_norm_real(a: &RealMatrix) -> TwoNormEstimate {
    two_norm(&ComplexMatrix::from_real(a))
}

fn normalize(v: &mut [Complex64]) {
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        for z in v.iter_mut() {
            *z /= norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn one_norm_identity_and_zero() {
        assert_eq!(ComplexMatrix::identity(3).one_norm(), 1.0);
        assert_eq!(ComplexMatrix::zeros(4).one_norm(), 0.0);
    }

    #[test]
    fn one_norm_matches_column_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = synth::random_complex(5, &mut rng);
        // independent column-sum scan
        let mut want: f64 = 0.0;
        for j in 0..5 {
            let mut s = 0.0;
            for i in 0..5 {
                s += a.get(i, j).norm();
            }
            want = want.max(s);
        }
        assert_eq!(a.one_norm(), want);
    }

    #[test]
    fn mat_mul_identity_charges_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = synth::random_complex(4, &mut rng);
        let mut ledger = CostLedger::new();
        let p = mat_mul(&a, &ComplexMatrix::identity(4), &mut ledger);
        assert_eq!(ledger.complex_products, 1);
        assert_eq!(ledger.real_products, 0);
        for i in 0..4 {
            for j in 0..4 {
                assert!((p.get(i, j) - a.get(i, j)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn real_product_dispatches_to_real_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = synth::random_symmetric(6, 1.0, &mut rng);
        let b = synth::random_symmetric(6, 1.0, &mut rng);
        let mut ledger = CostLedger::new();
        let _ = mat_mul_real(&a, &b, &mut ledger);
        assert_eq!(ledger.real_products, 1);
        assert_eq!(ledger.complex_products, 0);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mat_mul_rejects_mismatch() {
        let a = ComplexMatrix::zeros(3);
        let b = ComplexMatrix::zeros(4);
        let mut ledger = CostLedger::new();
        let _ = mat_mul(&a, &b, &mut ledger);
    }

    #[test]
    fn ledger_total_is_thirds() {
        let ledger = CostLedger {
            complex_products: 6,
            real_products: 0,
            inverses: 1,
        };
        assert_eq!(ledger.total_cost(), Rational64::new(22, 3));
    }

    #[test]
    fn ledger_additive_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = synth::random_hermitian(8, 1.0, &mut rng);
        let run = |a: &ComplexMatrix| {
            let mut l = CostLedger::new();
            let p = mat_mul(a, a, &mut l);
            let q = mat_mul(&p, a, &mut l);
            (l, q)
        };
        let (l1, q1) = run(&a);
        let (l2, q2) = run(&a);
        assert_eq!(l1, l2);
        assert_eq!(q1, q2);
        let mut merged = CostLedger::new();
        merged.merge(&l1);
        merged.merge(&l2);
        assert_eq!(merged.complex_products, 4);
    }

    #[test]
    fn two_norm_identity_and_diag() {
        assert!((two_norm(&ComplexMatrix::identity(5)).value - 1.0).abs() < 1e-10);
        let d = ComplexMatrix::from_diag(&[Complex64::new(3.0, 0.0), Complex64::new(-1.0, 0.0)]);
        let est = two_norm(&d);
        assert!(est.converged);
        assert!((est.value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn two_norm_matches_jacobi_svd_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let a = synth::random_complex(8, &mut rng);
        let est = two_norm(&a);
        let want = synth::jacobi_svd_two_norm(&a);
        assert!(
            (est.value - want).abs() <= 1e-8 * want,
            "power {} vs jacobi {}",
            est.value,
            want
        );
    }

    #[test]
    fn hermitian_residual_detects_perturbation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut a = synth::random_hermitian(6, 1.0, &mut rng);
        assert!(a.check_hermitian(crate::HERMITIAN_TOL).is_ok());
        a.set(1, 2, a.get(1, 2) + Complex64::new(1e-6, 0.0));
        assert!(matches!(
            a.check_hermitian(crate::HERMITIAN_TOL),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn hermitian_eigenvalues_are_real_paired() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = synth::random_hermitian(7, 2.0, &mut rng);
        let sym = a.add(&a.adjoint()).scale(Complex64::new(0.5, 0.0));
        let evs = hermitian_eigenvalues(&sym).unwrap();
        assert_eq!(evs.len(), 7);
        for e in evs {
            assert!(e.is_finite());
        }
    }
}
