//! Property tests over randomized inputs.

use chebmat::matcore::{
    format_complex_matrix, format_real_matrix, mat_mul, parse_matrix, ParsedMatrix,
};
use chebmat::{synth, ComplexMatrix, CostLedger, RealMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The induced 1-norm is submultiplicative.
    #[test]
    fn one_norm_submultiplicative(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = synth::random_complex(n, &mut rng);
        let b = synth::random_complex(n, &mut rng);
        let mut ledger = CostLedger::new();
        let p = mat_mul(&a, &b, &mut ledger);
        prop_assert!(p.one_norm() <= a.one_norm() * b.one_norm() * (1.0 + 1e-12));
    }

    /// Text format round-trips complex matrices exactly.
    #[test]
    fn complex_matrix_io_roundtrip(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = synth::random_complex(n, &mut rng);
        let text = format_complex_matrix(&a);
        match parse_matrix(&text) {
            Ok(ParsedMatrix::Complex(b)) => prop_assert_eq!(a, b),
            other => prop_assert!(false, "unexpected parse result: {:?}", other.is_ok()),
        }
    }

    /// Text format round-trips real matrices exactly, including values with
    /// no short decimal representation.
    #[test]
    fn real_matrix_io_roundtrip(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = synth::random_symmetric(n, 3.0, &mut rng);
        let text = format_real_matrix(&a);
        match parse_matrix(&text) {
            Ok(ParsedMatrix::Real(b)) => prop_assert_eq!(a, b),
            other => prop_assert!(false, "unexpected parse result: {:?}", other.is_ok()),
        }
    }

    /// Hermitian symmetrization always passes the residual check, and the
    /// eigenvalues of the symmetrized matrix are real (finite).
    #[test]
    fn symmetrization_is_hermitian(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = synth::random_complex(n, &mut rng);
        let h = g.add(&g.adjoint()).scale(num_complex::Complex64::new(0.5, 0.0));
        prop_assert!(h.check_hermitian(chebmat::HERMITIAN_TOL).is_ok());
        let evs = chebmat::matcore::hermitian_eigenvalues(&h).unwrap();
        prop_assert!(evs.iter().all(|e| e.is_finite()));
    }

    /// Ledger totals are additive under merge.
    #[test]
    fn ledger_merge_is_additive(c1 in 0u64..50, r1 in 0u64..50, i1 in 0u64..5,
                                c2 in 0u64..50, r2 in 0u64..50, i2 in 0u64..5) {
        let a = CostLedger { complex_products: c1, real_products: r1, inverses: i1 };
        let b = CostLedger { complex_products: c2, real_products: r2, inverses: i2 };
        let mut merged = a.clone();
        merged.merge(&b);
        prop_assert_eq!(merged.total_cost(), a.total_cost() + b.total_cost());
        prop_assert_eq!(*merged.total_cost().denom(), 3);
    }

    /// Selection plans always cover the requested half-width.
    #[test]
    fn plans_cover_beta(exp10 in -8.0f64..4.0) {
        let beta = 10f64.powf(exp10);
        let plan = chebmat::driver::select_exp_plan(beta).unwrap();
        prop_assert!(beta <= plan.coverage() * (1.0 + 1e-12));
        let plan = chebmat::driver::select_cossin_plan(beta).unwrap();
        prop_assert!(beta <= plan.coverage() * (1.0 + 1e-12));
    }
}

#[test]
fn zero_dimension_matrices_are_rejected_by_io() {
    assert!(parse_matrix("0\n").is_err());
}

#[test]
fn real_matrix_with_long_fraction_roundtrips() {
    let mut a = RealMatrix::zeros(2);
    a.set(0, 0, 1.0 / 3.0);
    a.set(0, 1, f64::MIN_POSITIVE);
    a.set(1, 0, -2.2250738585072014e-308);
    a.set(1, 1, 9.869604401089358);
    let text = format_real_matrix(&a);
    match parse_matrix(&text).unwrap() {
        ParsedMatrix::Real(b) => assert_eq!(a, b),
        _ => panic!("expected real"),
    }
}

#[test]
fn complex_identity_norms() {
    let a = ComplexMatrix::identity(7);
    assert_eq!(a.one_norm(), 1.0);
    assert_eq!(a.max_abs(), 1.0);
}
