//! Complex LU factorization with partial pivoting, used only by the Padé
//! baseline to apply an inverse.

use super::{ComplexMatrix, CostLedger};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Solve `A X = B` for `X`, charging one inverse (4/3 products) to the ledger.
pub fn lu_solve(a: &ComplexMatrix, b: &ComplexMatrix, ledger: &mut CostLedger) -> Result<ComplexMatrix> {
    assert_eq!(a.n(), b.n(), "dimension mismatch in lu_solve");
    let n = a.n();
    ledger.inverses += 1;

    let mut lu: Vec<Complex64> = a.data().to_vec();
    let mut piv: Vec<usize> = (0..n).collect();

    for col in 0..n {
        let mut max_val = 0.0;
        let mut max_row = col;
        for row in col..n {
            let v = lu[row * n + col].norm();
            if v > max_val {
                max_val = v;
                max_row = row;
            }
        }
        if max_val < 1e-300 {
            return Err(Error::Singular);
        }
        if max_row != col {
            for j in 0..n {
                lu.swap(col * n + j, max_row * n + j);
            }
            piv.swap(col, max_row);
        }
        let pivot = lu[col * n + col];
        for row in col + 1..n {
            let factor = lu[row * n + col] / pivot;
            lu[row * n + col] = factor;
            for j in col + 1..n {
                let v = lu[col * n + j];
                lu[row * n + j] -= factor * v;
            }
        }
    }

    let mut x = ComplexMatrix::zeros(n);
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        for i in 0..n {
            col[i] = b.get(piv[i], j);
        }
        // forward substitution (unit lower triangle)
        for i in 1..n {
            let mut acc = col[i];
            for k in 0..i {
                acc -= lu[i * n + k] * col[k];
            }
            col[i] = acc;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut acc = col[i];
            for k in i + 1..n {
                acc -= lu[i * n + k] * col[k];
            }
            col[i] = acc / lu[i * n + i];
        }
        for i in 0..n {
            x.set(i, j, col[i]);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::mat_mul;
    use crate::synth;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn solves_random_system() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = synth::random_complex(6, &mut rng).add_scaled_identity(Complex64::new(4.0, 0.0));
        let b = synth::random_complex(6, &mut rng);
        let mut ledger = CostLedger::new();
        let x = lu_solve(&a, &b, &mut ledger).unwrap();
        assert_eq!(ledger.inverses, 1);
        let mut scratch = CostLedger::new();
        let back = mat_mul(&a, &x, &mut scratch);
        let err = back.sub(&b).max_abs();
        assert!(err < 1e-12, "residual {err}");
    }

    #[test]
    fn rejects_singular() {
        let a = ComplexMatrix::zeros(3);
        let b = ComplexMatrix::identity(3);
        let mut ledger = CostLedger::new();
        assert!(matches!(lu_solve(&a, &b, &mut ledger), Err(Error::Singular)));
    }
}
