//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime (visible under `--nocapture`). Tolerances and budgets are
//! pinned in the assertions.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symtrans::coherent2qubit::{
    analytic_spectrum, leak_gram, leak_states, optimal_probability, probability_vector,
};
use symtrans::linalg::{
    circular_convolution, eigenvalues_of_circulant, hadamard, CirculantGram, Spectrum,
};
use symtrans::oracle::{fock_gram, grid_search_optimal};
use symtrans::scissors::{alpha_grid, evaluate, figure1_data, figure6_data, overall_with_splits};
use symtrans::solver::optimize_uniform;
use symtrans::states::{coherent_gram_row, gram_of, qubit_gram_row, CoherentEnsemble, QubitEnsemble};

fn criterion<F: FnOnce()>(name: &str, budget: Duration, body: F) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {name} exceeded its {budget:?} budget: {elapsed:?}"
    );
    println!("acceptance {name}: pass ({elapsed:?})");
}

fn random_spectrum(rng: &mut ChaCha8Rng, n: usize, floor: f64) -> Spectrum {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(floor..1.0)).collect();
    let sum: f64 = raw.iter().sum();
    Spectrum::new(raw.into_iter().map(|v| v * n as f64 / sum).collect()).unwrap()
}

fn qubit_spectrum(n: usize) -> Spectrum {
    eigenvalues_of_circulant(&qubit_gram_row(&QubitEnsemble::new(n).unwrap())).unwrap()
}

#[test]
fn c01_optimal_coherent_to_qubit_probability() {
    criterion("01 optimal coherent->qubit", Duration::from_secs(1), || {
        for &alpha in &[0.1f64, 0.3, 0.5, 0.7, 1.0] {
            for &n in &[2usize, 4, 6, 8] {
                let sol = optimize_uniform(&analytic_spectrum(alpha, n), &qubit_spectrum(n))
                    .unwrap();
                let expected = 1.0 - (-2.0 * alpha * alpha).exp();
                assert!(
                    (sol.p_success - expected).abs() <= 1e-6,
                    "alpha={alpha} n={n}: {} vs {expected}",
                    sol.p_success
                );
            }
        }
    });
}

#[test]
fn c02_constructive_probability_vector() {
    criterion("02 constructive vector", Duration::from_secs(1), || {
        for &alpha in &[0.1f64, 0.3, 0.5, 0.7, 1.0] {
            for &n in &[2usize, 4, 6, 8] {
                let pv = probability_vector(alpha, n).unwrap();
                let p0 = (-2.0 * alpha * alpha).exp();
                assert!((pv.failure() - p0).abs() <= 1e-9, "alpha={alpha} n={n}");
                assert!((pv.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
                assert!(pv.iter().all(|&p| p >= -1e-9));
            }
        }
    });
}

#[test]
fn c03_uds_special_case() {
    criterion("03 UDS equals min eigenvalue", Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..100 {
            let n = rng.gen_range(2usize..=16);
            let lambda_a = random_spectrum(&mut rng, n, 0.02);
            let sol = optimize_uniform(&lambda_a, &Spectrum::orthonormal(n)).unwrap();
            assert!(
                (sol.p_success - lambda_a.min()).abs() <= 1e-9,
                "trial {trial}: {} vs {}",
                sol.p_success,
                lambda_a.min()
            );
        }
    });
}

#[test]
fn c04_oracle_equivalence() {
    criterion("04 grid-search oracle", Duration::from_secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cases = [(3usize, 0.01f64, 30usize), (4, 0.05, 10)];
        for &(n, step, trials) in &cases {
            for trial in 0..trials {
                let lambda_a = random_spectrum(&mut rng, n, 0.2);
                let lambda_b = random_spectrum(&mut rng, n, 0.2);
                let lp = optimize_uniform(&lambda_a, &lambda_b).unwrap();
                let grid = grid_search_optimal(&lambda_a, &lambda_b, step).unwrap();
                assert!(
                    grid.best_p <= lp.p_success + 1e-9,
                    "n={n} trial {trial}: grid {} above LP {}",
                    grid.best_p,
                    lp.p_success
                );
                assert!(
                    (lp.p_success - grid.best_p).abs() <= step * n as f64,
                    "n={n} trial {trial}: LP {} vs grid {} (step {step})",
                    lp.p_success,
                    grid.best_p
                );
            }
        }
    });
}

#[test]
fn c05_convolution_theorem() {
    criterion("05 convolution theorem", Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(2usize..=32);
            let la = random_spectrum(&mut rng, n, 0.01);
            let lb = random_spectrum(&mut rng, n, 0.01);
            let a = CirculantGram::from_spectrum(&la).unwrap();
            let b = CirculantGram::from_spectrum(&lb).unwrap();
            let lhs = eigenvalues_of_circulant(&hadamard(&a, &b).unwrap()).unwrap();
            let rhs = circular_convolution(&la, &lb).unwrap();
            assert!(lhs.max_abs_diff(&rhs) <= 1e-10, "n={n}");
        }
    });
}

#[test]
fn c06_linear_dependence_diagnostics() {
    criterion("06 optimal-solution diagnostics", Duration::from_secs(10), || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut accepted = 0usize;
        while accepted < 100 {
            let n = rng.gen_range(3usize..=10);
            let lambda_a = random_spectrum(&mut rng, n, 0.05);
            let lambda_b = random_spectrum(&mut rng, n, 0.05);
            let sol = optimize_uniform(&lambda_a, &lambda_b).unwrap();
            if sol.p_success <= 1e-6 || sol.p_success >= 1.0 - 1e-6 {
                continue;
            }
            accepted += 1;
            assert!(
                sol.leak_spectrum.min() < 1e-7,
                "leak spectrum has no zero: {:?}",
                sol.leak_spectrum
            );
            assert!(
                sol.redundancy_spectrum.min() < 1e-7,
                "redundancy spectrum has no zero: {:?}",
                sol.redundancy_spectrum
            );
        }
    });
}

#[test]
fn c07_leak_reconstruction() {
    criterion("07 leak reconstruction", Duration::from_secs(2), || {
        for &n in &[4usize, 6] {
            for &alpha in &[0.3f64, 0.7, 1.0] {
                let pv = probability_vector(alpha, n).unwrap();
                let leak = leak_gram(&pv, n).unwrap();
                let states = leak_states(&pv, n).unwrap();
                let diff = gram_of(&states)
                    .max_abs_diff(&leak.expand())
                    .unwrap();
                assert!(diff <= 1e-10, "alpha={alpha} n={n}: gram diff {diff}");

                // Entrywise feasibility with success probability 1 - p0 and
                // an all-ones redundancy.
                let p0 = pv.failure();
                let coherent = coherent_gram_row(&CoherentEnsemble::new(alpha, n).unwrap());
                let qubit = qubit_gram_row(&QubitEnsemble::new(n).unwrap());
                for k in 0..n {
                    let rhs = qubit.first_row()[k] * leak.first_row()[k] * (1.0 - p0)
                        + num_complex::Complex64::new(p0, 0.0);
                    let residual = (coherent.first_row()[k] - rhs).norm();
                    assert!(residual < 1e-9, "alpha={alpha} n={n} k={k}: {residual}");
                }
            }
        }
    });
}

#[test]
fn c08_scissors_numbers() {
    criterion("08 scissors closed forms", Duration::from_secs(1), || {
        let eval = evaluate(1.0).unwrap();
        assert!((eval.p_ost - 2.0 / std::f64::consts::E).abs() <= 1e-12);
        assert!((optimal_probability(1.0) - (1.0 - (-2.0f64).exp())).abs() <= 1e-12);

        for step in 1..=100 {
            let alpha = step as f64 / 100.0;
            let a2 = alpha * alpha;
            let eval = evaluate(alpha).unwrap();
            let ratio = optimal_probability(alpha) / eval.p_overall;
            assert!(
                (ratio - a2.sinh() / a2).abs() <= 1e-10,
                "alpha={alpha}: ratio {ratio}"
            );
        }

        for &alpha in &[0.25f64, 0.5, 1.0] {
            let p = overall_with_splits(alpha, 100_000).unwrap();
            assert!((p - optimal_probability(alpha)).abs() <= 1e-4, "alpha={alpha}");
        }
    });
}

#[test]
fn c09_fock_oracle_matches_closed_form() {
    criterion("09 number-basis oracle", Duration::from_secs(1), || {
        for &alpha in &[0.25f64, 0.5, 1.0, 2.0] {
            for &n in &[2usize, 4, 8] {
                let cutoff = symtrans::oracle::default_cutoff(alpha);
                let numeric = fock_gram(alpha, n, cutoff).unwrap();
                let closed = coherent_gram_row(&CoherentEnsemble::new(alpha, n).unwrap()).expand();
                let diff = numeric.max_abs_diff(&closed).unwrap();
                assert!(diff <= 1e-10, "alpha={alpha} n={n}: {diff}");
            }
        }
    });
}

#[test]
fn c10_figure_data_orderings() {
    criterion("10 figure families", Duration::from_secs(2), || {
        let grid1 = alpha_grid(0.01, 1.5, 0.01);
        let fig1 = figure1_data(&grid1, &[4, 8]);
        let optimal = &fig1.curves.last().unwrap().values;
        assert_eq!(fig1.curves.last().unwrap().name, "optimal");
        for curve in &fig1.curves[..fig1.curves.len() - 1] {
            for (v, o) in curve.values.iter().zip(optimal.iter()) {
                assert!(v <= &(o + 1e-12), "{} above optimal", curve.name);
            }
        }

        let grid6 = alpha_grid(0.01, 1.0, 0.01);
        let ms: Vec<u64> = (1..=10).collect();
        let fig6 = figure6_data(&grid6, &ms).unwrap();
        let optimal = fig6.curves.last().unwrap().values.clone();
        for pair in fig6.curves[..fig6.curves.len() - 1].windows(2) {
            for (lo, hi) in pair[0].values.iter().zip(pair[1].values.iter()) {
                assert!(lo <= hi, "scissors curves not increasing in M");
            }
        }
        for curve in &fig6.curves[..fig6.curves.len() - 1] {
            for (v, o) in curve.values.iter().zip(optimal.iter()) {
                assert!(v < o, "{} not below optimal", curve.name);
            }
        }
    });
}
