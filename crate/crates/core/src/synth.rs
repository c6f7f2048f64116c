//! Seeded generators for synthetic test matrices, plus a slow Jacobi SVD
//! used as an independent oracle for the power-iteration norm.

use crate::matcore::{ComplexMatrix, RealMatrix};
use num_complex::Complex64;
use rand::Rng;

/// Dense complex matrix with entries uniform in `[-1, 1] + i[-1, 1]`.
pub fn random_complex(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// Random Hermitian matrix rescaled to the requested 1-norm.
pub fn random_hermitian(n: usize, one_norm: f64, rng: &mut impl Rng) -> ComplexMatrix {
    let g = random_complex(n, rng);
    let h = g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0));
    let current = h.one_norm();
    if current == 0.0 {
        return h;
    }
    h.scale(Complex64::new(one_norm / current, 0.0))
}

/// Random real symmetric matrix rescaled to the requested 1-norm.
pub fn random_symmetric(n: usize, one_norm: f64, rng: &mut impl Rng) -> RealMatrix {
    let mut m = RealMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let v = rng.gen_range(-1.0..1.0);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    let current = m.one_norm();
    if current == 0.0 {
        return m;
    }
    m.scale(one_norm / current)
}

/// Largest singular value by one-sided Jacobi on the real embedding of `A`.
///
/// Slow and simple; test oracle only.
pub fn jacobi_svd_two_norm(a: &ComplexMatrix) -> f64 {
    let n = a.n();
    let m = 2 * n;
    // columns of the embedding [[X, -Y], [Y, X]]
    let mut cols: Vec<Vec<f64>> = vec![vec![0.0; m]; m];
    for j in 0..n {
        for i in 0..n {
            let z = a.get(i, j);
            cols[j][i] = z.re;
            cols[j][n + i] = z.im;
            cols[n + j][i] = -z.im;
            cols[n + j][n + i] = z.re;
        }
    }
    let dot = |x: &[f64], y: &[f64]| -> f64 { x.iter().zip(y).map(|(a, b)| a * b).sum() };
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..m {
            for q in p + 1..m {
                let app = dot(&cols[p], &cols[p]);
                let aqq = dot(&cols[q], &cols[q]);
                let apq = dot(&cols[p], &cols[q]);
                if apq.abs() <= 1e-15 * (app * aqq).sqrt().max(1e-300) {
                    continue;
                }
                off = off.max(apq.abs());
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let vp = cols[p][i];
                    let vq = cols[q][i];
                    cols[p][i] = c * vp - s * vq;
                    cols[q][i] = s * vp + c * vq;
                }
            }
        }
        if off == 0.0 {
            break;
        }
    }
    cols.iter()
        .map(|c| dot(c, c).sqrt())
        .fold(0.0f64, f64::max)
}
