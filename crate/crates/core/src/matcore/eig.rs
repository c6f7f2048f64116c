//! Symmetric eigendecomposition: Householder tridiagonalization followed by
//! QL iteration with implicit shifts (the classic tred2/tql2 pair).
//!
//! Complex Hermitian matrices are handled through the real embedding
//! `A = X + iY  ->  [[X, -Y], [Y, X]]`, which is symmetric and carries each
//! eigenvalue of `A` twice. Real-valued functions of `A` are read back off
//! the embedded `f(M)`, which sidesteps eigenvector pairing inside clustered
//! eigenvalues entirely.
//!
//! None of this is product-counted: it backs the diagonalization oracle and
//! reference solutions only.

use super::{ComplexMatrix, RealMatrix};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns).
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: RealMatrix,
}

/// Full eigendecomposition of a real symmetric matrix.
pub fn symmetric_eigen(a: &RealMatrix) -> Result<SymmetricEigen> {
    let n = a.n();
    if n == 0 {
        return Ok(SymmetricEigen {
            eigenvalues: vec![],
            eigenvectors: RealMatrix::zeros(0),
        });
    }
    let mut z: Vec<f64> = a.data().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut z, &mut d, &mut e, n);
    tql2(&mut z, &mut d, &mut e, n)?;

    // sort ascending, permuting eigenvector columns along
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let eigenvalues: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let mut vecs = RealMatrix::zeros(n);
    for (newj, &oldj) in idx.iter().enumerate() {
        for i in 0..n {
            vecs.set(i, newj, z[i * n + oldj]);
        }
    }
    Ok(SymmetricEigen {
        eigenvalues,
        eigenvectors: vecs,
    })
}

/// Householder reduction to tridiagonal form with accumulated transforms.
fn tred2(z: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += z[i * n + k].abs();
            }
            if scale == 0.0 {
                e[i] = z[i * n + l];
            } else {
                for k in 0..=l {
                    z[i * n + k] /= scale;
                    h += z[i * n + k] * z[i * n + k];
                }
                let f = z[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                z[i * n + l] = f - g;
                let mut fsum = 0.0;
                for j in 0..=l {
                    z[j * n + i] = z[i * n + j] / h;
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += z[j * n + k] * z[i * n + k];
                    }
                    for k in j + 1..=l {
                        g += z[k * n + j] * z[i * n + k];
                    }
                    e[j] = g / h;
                    fsum += e[j] * z[i * n + j];
                }
                let hh = fsum / (h + h);
                for j in 0..=l {
                    let f = z[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        z[j * n + k] -= f * e[k] + g * z[i * n + k];
                    }
                }
            }
        } else {
            e[i] = z[i * n + l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += z[i * n + k] * z[k * n + j];
                }
                for k in 0..i {
                    z[k * n + j] -= g * z[k * n + i];
                }
            }
        }
        d[i] = z[i * n + i];
        z[i * n + i] = 1.0;
        for j in 0..i {
            z[j * n + i] = 0.0;
            z[i * n + j] = 0.0;
        }
    }
}

#[inline]
fn sign_of(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// QL with implicit shifts on a symmetric tridiagonal, rotating the
/// accumulated transforms along.
fn tql2(z: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::EigNoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// `f1(A)` and `f2(A)` for real symmetric `A` from a single decomposition.
pub fn symmetric_matrix_functions2(
    a: &RealMatrix,
    f1: impl Fn(f64) -> f64,
    f2: impl Fn(f64) -> f64,
) -> Result<(RealMatrix, RealMatrix)> {
    let eig = symmetric_eigen(a)?;
    let n = a.n();
    let v = &eig.eigenvectors;
    let build = |fd: &[f64]| {
        let mut out = RealMatrix::zeros(n);
        // out = V diag(fd) V^T
        for i in 0..n {
            for j in 0..=i {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += v.get(i, k) * fd[k] * v.get(j, k);
                }
                out.set(i, j, acc);
                out.set(j, i, acc);
            }
        }
        out
    };
    let fd1: Vec<f64> = eig.eigenvalues.iter().map(|&x| f1(x)).collect();
    let fd2: Vec<f64> = eig.eigenvalues.iter().map(|&x| f2(x)).collect();
    Ok((build(&fd1), build(&fd2)))
}

/// Real symmetric embedding `[[X, -Y], [Y, X]]` of a Hermitian matrix.
pub fn embed_hermitian(a: &ComplexMatrix) -> RealMatrix {
    let n = a.n();
    RealMatrix::from_fn(2 * n, |i, j| {
        let (bi, ii) = (i / n, i % n);
        let (bj, jj) = (j / n, j % n);
        match (bi, bj) {
            (0, 0) | (1, 1) => a.get(ii, jj).re,
            (0, 1) => -a.get(ii, jj).im,
            (1, 0) => a.get(ii, jj).im,
            _ => unreachable!(),
        }
    })
}

/// Read a complex matrix back off its real embedding.
fn extract_embedded(m: &RealMatrix) -> ComplexMatrix {
    let n = m.n() / 2;
    ComplexMatrix::from_fn(n, |i, j| Complex64::new(m.get(i, j), m.get(n + i, j)))
}

/// `cos(A)` and `sin(A)` of a complex Hermitian matrix via the real
/// embedding.
pub fn hermitian_cos_sin(a: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let m = embed_hermitian(a);
    let (cm, sm) = symmetric_matrix_functions2(&m, f64::cos, f64::sin)?;
    Ok((extract_embedded(&cm), extract_embedded(&sm)))
}

/// Eigenvalues of a complex Hermitian matrix (ascending). The embedded
/// spectrum carries each eigenvalue twice; adjacent sorted pairs are
/// averaged.
pub fn hermitian_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let eig = symmetric_eigen(&embed_hermitian(a))?;
    let ev = eig.eigenvalues;
    let n = a.n();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(0.5 * (ev[2 * i] + ev[2 * i + 1]));
    }
    Ok(out)
}
