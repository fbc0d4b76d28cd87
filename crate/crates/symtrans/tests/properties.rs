//! Property tests for the structural invariants of the circulant toolkit
//! and the solver.

use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;

use symtrans::linalg::{
    circular_convolution, dcm, dft_forward, dft_inverse, eigenvalues_of_circulant,
    gram_row_of_dense, synthesize_states_from_spectrum, CirculantGram, ComplexVector, Spectrum,
};
use symtrans::solver::{feasible_at, optimize_uniform};
use symtrans::states::gram_of;

fn spectrum_strategy(n: usize) -> impl Strategy<Value = Spectrum> {
    vec(0.02f64..1.0, n).prop_map(move |raw| {
        let sum: f64 = raw.iter().sum();
        Spectrum::new(raw.into_iter().map(|v| v * n as f64 / sum).collect()).unwrap()
    })
}

fn spectrum_pair(max_n: usize) -> impl Strategy<Value = (Spectrum, Spectrum)> {
    (2usize..=max_n).prop_flat_map(|n| (spectrum_strategy(n), spectrum_strategy(n)))
}

fn complex_vector(max_n: usize) -> impl Strategy<Value = ComplexVector> {
    (1usize..=max_n)
        .prop_flat_map(|n| vec((-2.0f64..2.0, -2.0f64..2.0), n))
        .prop_map(|pairs| {
            ComplexVector::new(
                pairs
                    .into_iter()
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect(),
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn dft_round_trip(v in complex_vector(48)) {
        let back = dft_inverse(&dft_forward(&v));
        for k in 0..v.len() {
            prop_assert!((back[k] - v[k]).norm() < 1e-12);
        }
    }

    #[test]
    fn convolution_theorem((la, lb) in spectrum_pair(64)) {
        let a = CirculantGram::from_spectrum(&la).unwrap();
        let b = CirculantGram::from_spectrum(&lb).unwrap();
        let product = symtrans::linalg::hadamard(&a, &b).unwrap();
        let lhs = eigenvalues_of_circulant(&product).unwrap();
        let rhs = circular_convolution(&la, &lb).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-10);
    }

    #[test]
    fn spectrum_trace_is_n((la, _) in spectrum_pair(64)) {
        let gram = CirculantGram::from_spectrum(&la).unwrap();
        let spectrum = eigenvalues_of_circulant(&gram).unwrap();
        prop_assert!((spectrum.sum() - spectrum.len() as f64).abs() < 1e-10);
    }

    #[test]
    fn dcm_multiplication_commutes((x, y) in spectrum_pair(24)) {
        let xv: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let yv: Vec<Complex64> = y.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let a = dcm(&x).mul_vec(&yv).unwrap();
        let b = dcm(&y).mul_vec(&xv).unwrap();
        for k in 0..x.len() {
            prop_assert!((a[k] - b[k]).norm() < 1e-12);
        }
    }

    #[test]
    fn lp_is_monotone_toward_flat_sources(
        (lambda_a, lambda_b) in spectrum_pair(10),
        t in 0.0f64..1.0,
    ) {
        let n = lambda_a.len();
        let relaxed = Spectrum::new(
            lambda_a.iter().map(|&v| (1.0 - t) * v + t).collect(),
        ).unwrap();
        prop_assert!(relaxed.min() >= lambda_a.min() - 1e-12);
        let base = optimize_uniform(&lambda_a, &lambda_b).unwrap().p_success;
        let better = optimize_uniform(&relaxed, &lambda_b).unwrap().p_success;
        prop_assert!(better >= base - 1e-9, "{} vs {} (n={n}, t={t})", better, base);
    }

    #[test]
    fn optimal_solutions_have_dependent_residuals((lambda_a, lambda_b) in spectrum_pair(10)) {
        let sol = optimize_uniform(&lambda_a, &lambda_b).unwrap();
        prop_assert!(sol.feasibility_residual(&lambda_a, &lambda_b) < 1e-8);
        if sol.p_success > 1e-6 && sol.p_success < 1.0 - 1e-6 {
            prop_assert!(sol.leak_spectrum.min() < 1e-7);
            prop_assert!(sol.redundancy_spectrum.min() < 1e-7);
        }
    }

    #[test]
    fn feasibility_brackets_the_lp_optimum((lambda_a, lambda_b) in spectrum_pair(10)) {
        let sol = optimize_uniform(&lambda_a, &lambda_b).unwrap();
        let witness = feasible_at(&lambda_a, &lambda_b, sol.p_success).unwrap();
        prop_assert!(witness.is_some());
        let n = lambda_a.len() as f64;
        if let Some(x) = witness {
            prop_assert!((x.iter().sum::<f64>() - sol.p_success * n).abs() < 1e-9);
        }
        if sol.p_success < 1.0 - 1e-6 {
            let above = feasible_at(&lambda_a, &lambda_b, sol.p_success + 1e-6).unwrap();
            prop_assert!(above.is_none());
        }
    }

    #[test]
    fn identity_transform_always_feasible((lambda, _) in spectrum_pair(12)) {
        let sol = optimize_uniform(&lambda, &lambda).unwrap();
        prop_assert!((sol.p_success - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn synthesis_round_trip(spectrum in (2usize..=16).prop_flat_map(spectrum_strategy)) {
        let states = synthesize_states_from_spectrum(&spectrum);
        let gram = gram_of(&states);
        let circulant = gram_row_of_dense(&gram, 1e-9).unwrap();
        let recovered = eigenvalues_of_circulant(&circulant).unwrap();
        prop_assert!(recovered.max_abs_diff(&spectrum) < 1e-9);
    }
}
