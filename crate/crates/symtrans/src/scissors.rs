//! Quantum-scissors realization of the coherent-to-qubit transform.
//!
//! Optical state truncation projects a coherent state onto the span of the
//! vacuum and single-photon components. An umbrella transform then
//! rebalances the two amplitudes. Splitting the input beam before scissoring
//! drives the combined success probability toward the optimum
//! `1 - exp(-2*alpha^2)` as the number of beams grows.

use crate::coherent2qubit::optimal_probability;
use crate::error::{Error, Result};
use crate::linalg::ComplexVector;

use num_complex::Complex64;

/// Closed-form figures of merit for a single scissors-plus-umbrella pass at
/// amplitude `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScissorsEvaluation {
    pub alpha: f64,
    /// Truncation success probability `exp(-alpha^2) * (1 + alpha^2)`.
    pub p_ost: f64,
    /// Umbrella re-weighting success probability `2*alpha^2 / (1 + alpha^2)`.
    pub p_umbrella: f64,
    /// Combined probability `2 * alpha^2 * exp(-alpha^2)`.
    pub p_overall: f64,
    /// Umbrella failure weight on the vacuum, `1 - alpha^2`.
    pub gamma: f64,
}

/// Normalized output of successful optical state truncation:
/// `(|0> + alpha e^{i theta} |1>) / sqrt(1 + alpha^2)`.
///
/// At `alpha = 1` this is exactly the target equatorial qubit state.
pub fn ost_output(alpha: f64, theta: f64) -> ComplexVector {
    debug_assert!(alpha > 0.0);
    let norm = (1.0 + alpha * alpha).sqrt();
    ComplexVector::new(vec![
        Complex64::new(1.0 / norm, 0.0),
        Complex64::from_polar(alpha / norm, theta),
    ])
    .expect("two entries")
}

/// Evaluates the truncation and umbrella probabilities at `alpha <= 1` (the
/// umbrella weight `gamma = 1 - alpha^2` must stay nonnegative).
pub fn evaluate(alpha: f64) -> Result<ScissorsEvaluation> {
    if alpha.is_nan() || alpha <= 0.0 || alpha > 1.0 + 1e-12 {
        return Err(Error::AmplitudeOutOfRange { alpha, max: 1.0 });
    }
    let alpha = alpha.min(1.0);
    let a2 = alpha * alpha;
    Ok(ScissorsEvaluation {
        alpha,
        p_ost: (-a2).exp() * (1.0 + a2),
        p_umbrella: 2.0 * a2 / (1.0 + a2),
        p_overall: 2.0 * a2 * (-a2).exp(),
        gamma: 1.0 - a2,
    })
}

/// Success probability of beamsplitting into `M` beams followed by scissors
/// and umbrella on each: `1 - (1 - 2*(alpha^2/M)*exp(-alpha^2/M))^M`.
///
/// Requires `alpha / sqrt(M) <= 1` so each beam admits the umbrella step.
pub fn overall_with_splits(alpha: f64, splits: u64) -> Result<f64> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::AmplitudeOutOfRange {
            alpha,
            max: f64::INFINITY,
        });
    }
    if splits < 1 || alpha * alpha > splits as f64 * (1.0 + 1e-12) {
        return Err(Error::SplitTooCoarse { alpha, splits });
    }
    let per_beam = alpha * alpha / splits as f64;
    // Evaluated as -expm1(M * ln1p(-y)) with y = 2*beta*exp(-beta): forming
    // (1 - y)^M directly would amplify the base's rounding by a factor M.
    let log_fail_per_beam = (-2.0 * per_beam * (-per_beam).exp()).ln_1p();
    Ok(-(splits as f64 * log_fail_per_beam).exp_m1())
}

/// A family of curves over a common amplitude grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub alphas: Vec<f64>,
    pub curves: Vec<Curve>,
}

/// One named curve, parallel to the grid of its table.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    pub values: Vec<f64>,
}

/// Unambiguous-discrimination success probabilities for each state count in
/// `ns` alongside the optimal transform curve, over `alpha_grid`.
///
/// The discrimination probability is the minimum eigenvalue of the coherent
/// Gram spectrum; it never exceeds the optimal transform curve and matches
/// it only for two states.
pub fn figure1_data(alpha_grid: &[f64], ns: &[usize]) -> FigureTable {
    debug_assert!(alpha_grid.iter().all(|&a| a > 0.0));
    let mut curves: Vec<Curve> = ns
        .iter()
        .map(|&n| Curve {
            name: format!("uds_n{n}"),
            values: alpha_grid
                .iter()
                .map(|&alpha| crate::coherent2qubit::analytic_spectrum(alpha, n).min())
                .collect(),
        })
        .collect();
    curves.push(Curve {
        name: "optimal".into(),
        values: alpha_grid.iter().map(|&a| optimal_probability(a)).collect(),
    });
    FigureTable {
        alphas: alpha_grid.to_vec(),
        curves,
    }
}

/// Beamsplit-assisted scissors curves for each beam count in `ms` alongside
/// the optimal transform curve, over `alpha_grid`.
///
/// Larger beam counts dominate smaller ones, and every finite strategy stays
/// below the optimum.
pub fn figure6_data(alpha_grid: &[f64], ms: &[u64]) -> Result<FigureTable> {
    let mut curves: Vec<Curve> = Vec::with_capacity(ms.len() + 1);
    for &m in ms {
        let values = alpha_grid
            .iter()
            .map(|&alpha| overall_with_splits(alpha, m))
            .collect::<Result<Vec<f64>>>()?;
        curves.push(Curve {
            name: format!("scissors_m{m}"),
            values,
        });
    }
    curves.push(Curve {
        name: "optimal".into(),
        values: alpha_grid.iter().map(|&a| optimal_probability(a)).collect(),
    });
    Ok(FigureTable {
        alphas: alpha_grid.to_vec(),
        curves,
    })
}

/// An inclusive grid `start, start + step, ...` capped at `end` (within half
/// a step of rounding).
pub fn alpha_grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    debug_assert!(step > 0.0 && end >= start);
    let count = ((end - start) / step + 0.5).floor() as usize + 1;
    (0..count).map(|k| start + step * k as f64).collect()
}
