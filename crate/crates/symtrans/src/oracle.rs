//! Independent brute-force verifiers.
//!
//! These deliberately avoid the closed forms and the simplex: the Gram
//! matrix of coherent states is rebuilt from truncated number-basis kets,
//! and the optimal transform probability is re-derived by exhaustive search
//! over a lattice on the simplex of candidate leak spectra. Both exist to
//! validate the fast paths, not to be fast themselves.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexVector, DenseMatrix, Spectrum};
use crate::states::{gram_of, StateSet};

/// Largest state count accepted by the lattice search.
pub const MAX_GRID_N: usize = 5;

const MAX_LATTICE_POINTS: u128 = 50_000_000;

/// Outcome of the exhaustive lattice search: the best probability found, a
/// witness satisfying the constraints, and the lattice resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSearchResult {
    pub best_p: f64,
    pub best_x: Vec<f64>,
    pub grid_step: f64,
}

/// Smallest truncation for which the neglected number-basis weight of a
/// coherent state with amplitude `alpha` is certified below `1e-13` by a
/// geometric tail majorant.
pub fn default_cutoff(alpha: f64) -> usize {
    let mut cutoff = 1usize;
    while tail_bound(alpha, cutoff).is_none_or(|t| t >= 1e-13) {
        cutoff += 1;
    }
    cutoff
}

/// Geometric majorant of the neglected weight
/// `sum_{r > cutoff} exp(-alpha^2) alpha^(2r) / r!`; `None` while the ratio
/// `alpha^2 / (cutoff + 2)` is not yet below 1.
fn tail_bound(alpha: f64, cutoff: usize) -> Option<f64> {
    let a2 = alpha * alpha;
    let ratio = a2 / (cutoff + 2) as f64;
    if ratio >= 1.0 {
        return None;
    }
    // First neglected Poisson weight, built incrementally.
    let mut term = (-a2).exp();
    for r in 1..=(cutoff + 1) {
        term *= a2 / r as f64;
    }
    Some(term / (1.0 - ratio))
}

/// Gram matrix of the symmetric coherent ensemble computed from truncated
/// number-basis kets and plain inner products.
///
/// Kets are renormalized after truncation, so diagonal entries are exactly
/// one. Fails when the requested cutoff does not certify a tail below
/// `1e-13`.
pub fn fock_gram(alpha: f64, n: usize, cutoff: usize) -> Result<DenseMatrix> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::AmplitudeOutOfRange {
            alpha,
            max: f64::INFINITY,
        });
    }
    if n < 2 {
        return Err(Error::TooFewStates { n, min: 2 });
    }
    match tail_bound(alpha, cutoff) {
        Some(tail) if tail < 1e-13 => {}
        other => {
            return Err(Error::CutoffTooSmall {
                cutoff,
                tail: other.unwrap_or(f64::INFINITY),
                required: 1e-13,
            });
        }
    }

    // Radial amplitudes alpha^r / sqrt(r!), advanced incrementally.
    let mut radial = Vec::with_capacity(cutoff + 1);
    let mut amp = (-alpha * alpha / 2.0).exp();
    radial.push(amp);
    for r in 1..=cutoff {
        amp *= alpha / (r as f64).sqrt();
        radial.push(amp);
    }
    let norm = radial.iter().map(|a| a * a).sum::<f64>().sqrt();

    let kets: Vec<ComplexVector> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let entries = radial
                .iter()
                .enumerate()
                .map(|(r, &a)| Complex64::from_polar(a / norm, theta * r as f64))
                .collect();
            ComplexVector::new(entries).expect("cutoff + 1 entries")
        })
        .collect();
    Ok(gram_of(&StateSet::new(kets)?))
}

/// Exhaustively maximizes the transform probability over candidate leak
/// spectra on a lattice: every vector of nonnegative multiples of `step`
/// summing to `N` is tried, and for each the largest `p` keeping
/// `lambda_a - p * DCM_{lambda_b} . v` nonnegative is taken.
///
/// The returned `best_x = best_p * v` satisfies the constraints by
/// construction. The true optimum exceeds `best_p` by at most a term of
/// order `step * N`.
pub fn grid_search_optimal(
    lambda_a: &Spectrum,
    lambda_b: &Spectrum,
    step: f64,
) -> Result<GridSearchResult> {
    let n = lambda_a.len();
    if n != lambda_b.len() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: lambda_b.len(),
        });
    }
    if n > MAX_GRID_N {
        return Err(Error::TooLarge { n, max: MAX_GRID_N });
    }
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidStep { step, n });
    }
    let units = (n as f64 / step).round();
    if (units * step - n as f64).abs() > 1e-9 || units < 1.0 {
        return Err(Error::InvalidStep { step, n });
    }
    let units = units as usize;
    if lattice_size(units, n) > MAX_LATTICE_POINTS {
        return Err(Error::TooLarge { n, max: MAX_GRID_N });
    }

    let mut search = LatticeSearch {
        lambda_a: lambda_a.values(),
        lambda_b: lambda_b.values(),
        step,
        candidate: vec![0.0; n],
        best_p: 0.0,
        best_v: vec![0.0; n],
    };
    search.recurse(0, units);

    let best_x = search.best_v.iter().map(|&v| v * search.best_p).collect();
    Ok(GridSearchResult {
        best_p: search.best_p,
        best_x,
        grid_step: step,
    })
}

/// Number of compositions of `units` into `bins` parts.
fn lattice_size(units: usize, bins: usize) -> u128 {
    let mut value: u128 = 1;
    for i in 0..(bins - 1) as u128 {
        value = value.saturating_mul(units as u128 + i + 1) / (i + 1);
    }
    value
}

struct LatticeSearch<'a> {
    lambda_a: &'a [f64],
    lambda_b: &'a [f64],
    step: f64,
    candidate: Vec<f64>,
    best_p: f64,
    best_v: Vec<f64>,
}

impl LatticeSearch<'_> {
    fn recurse(&mut self, bin: usize, remaining: usize) {
        let n = self.candidate.len();
        if bin == n - 1 {
            self.candidate[bin] = remaining as f64 * self.step;
            self.evaluate();
            return;
        }
        for units in 0..=remaining {
            self.candidate[bin] = units as f64 * self.step;
            self.recurse(bin + 1, remaining - units);
        }
    }

    fn evaluate(&mut self) {
        let n = self.candidate.len();
        let mut p = 1.0f64;
        for i in 0..n {
            let produced: f64 = (0..n)
                .map(|j| self.lambda_b[(i + n - j) % n] * self.candidate[j])
                .sum::<f64>()
                / n as f64;
            if produced > 1e-15 {
                p = p.min(self.lambda_a[i] / produced);
            } else if self.lambda_a[i] < 0.0 {
                p = 0.0;
            }
        }
        if p > self.best_p {
            self.best_p = p;
            self.best_v.copy_from_slice(&self.candidate);
        }
    }
}
