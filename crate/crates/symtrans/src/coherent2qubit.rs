//! The coherent-to-qubit transform: analytic spectra, the constructive
//! multiprobabilistic solution, its leak, and the beamsplit extension to
//! arbitrary amplitudes.
//!
//! For an even number of states and amplitude `0 < alpha <= 1`, the source
//! spectrum decomposes exactly over the spectra of tensor powers of the
//! qubit Gram, `lambda_A = M . p`, where `M` stacks those spectra as
//! columns. The solution vector `p` is a probability vector with failure
//! weight `p_0 = exp(-2*alpha^2)`, which realizes the optimal transform
//! success probability `1 - exp(-2*alpha^2)` constructively.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    eigenvalues_of_circulant, CirculantGram, ComplexVector, DenseMatrix, Spectrum,
};
use crate::solver::TransformSolution;
use crate::states::{qubit_gram_row, tensor_power_gram, QubitEnsemble, StateSet};

/// Largest state count for which the binomial mixing matrix is built from
/// exact integers.
pub const MAX_MIXING_N: usize = 64;

/// Largest state count for which explicit leak states are materialized; the
/// ambient dimension `2^(N-2) * (N-1)` grows quickly.
pub const MAX_LEAK_STATES_N: usize = 8;

const ALPHA_SLACK: f64 = 1e-12;

/// The mixing matrix `M` whose columns are the spectra of tensor powers of
/// the qubit Gram, together with its structured factorization `M = M' . D`:
/// `M'` holds binomial-coefficient columns, `D` the diagonal weights
/// `N / 2^k`, and `S` the alternating-sign diagonal used to invert `M'`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingMatrix {
    m: DenseMatrix,
    m_binom: DenseMatrix,
    d: Vec<f64>,
    s: Vec<f64>,
}

impl MixingMatrix {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.m
    }

    pub fn binomial_factor(&self) -> &DenseMatrix {
        &self.m_binom
    }

    pub fn diagonal_weights(&self) -> &[f64] {
        &self.d
    }

    pub fn alternating_signs(&self) -> &[f64] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// The inverse assembled from the structured form
    /// `M^(-1) = D^(-1) . S . M' . S`, never from a generic matrix inverse.
    pub fn inverse(&self) -> DenseMatrix {
        let n = self.len();
        DenseMatrix::from_fn(n, n, |i, j| {
            let value =
                self.s[i] * self.m_binom.get(i, j).re * self.s[j] / self.d[i];
            Complex64::new(value, 0.0)
        })
    }

    /// Applies the structured inverse to a spectrum.
    pub fn solve(&self, lambda: &Spectrum) -> Result<Vec<f64>> {
        let n = self.len();
        if lambda.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: lambda.len(),
            });
        }
        let inverse = self.inverse();
        Ok((0..n)
            .map(|i| (0..n).map(|j| inverse.get(i, j).re * lambda[j]).sum())
            .collect())
    }
}

/// Probability vector `(p_0, ..., p_{N-1})` of the multiprobabilistic
/// transform; index 0 is the failure weight, index `j >= 1` the weight of
/// producing `j` tensor copies of the target.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    /// Validates that the entries sum to 1 within `1e-9` and sit above
    /// `-1e-9`.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Empty);
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidSpectrum {
                detail: format!("probability vector sums to {sum}, expected 1"),
            });
        }
        if let Some(&bad) = probs.iter().find(|&&p| p.is_nan() || p < -1e-9) {
            return Err(Error::InvalidProbability { p: bad });
        }
        Ok(Self { probs })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Failure weight `p_0`.
    pub fn failure(&self) -> f64 {
        self.probs[0]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.probs.iter()
    }
}

/// Spectrum of the symmetric coherent ensemble by direct series summation:
/// `lambda_j = exp(-alpha^2) * N * sum_r alpha^(2(Nr+j)) / (Nr+j)!`,
/// truncated once the next term drops below `1e-16` relative.
pub fn analytic_spectrum(alpha: f64, n: usize) -> Spectrum {
    debug_assert!(n >= 1, "need at least one state");
    debug_assert!(alpha >= 0.0, "amplitude must be nonnegative");
    let a2 = alpha * alpha;
    let prefactor = (-a2).exp() * n as f64;
    let values = (0..n)
        .map(|j| {
            // term = a2^m / m!, advanced incrementally to avoid overflow.
            let mut term = 1.0f64;
            for m in 1..=j {
                term *= a2 / m as f64;
            }
            let mut total = term;
            let mut m = j;
            loop {
                for _ in 0..n {
                    m += 1;
                    term *= a2 / m as f64;
                }
                if term < 1e-16 * (total + 1.0) {
                    total += term;
                    break;
                }
                total += term;
            }
            prefactor * total
        })
        .collect();
    Spectrum::new(values).expect("series terms are nonnegative and sum to N")
}

/// Exact binomial coefficient as `f64`; `n` is bounded by [`MAX_MIXING_N`].
fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut value: u128 = 1;
    for i in 0..k {
        value = value * (n - i) as u128 / (i + 1) as u128;
    }
    value as f64
}

/// Builds the mixing matrix for an even `N`: column `k` is the spectrum of
/// the `k`-fold tensor power of the qubit Gram,
/// `(N / 2^k) * [C(k,0), ..., C(k,k), 0, ..., 0]`.
pub fn mixing_matrix(n: usize) -> Result<MixingMatrix> {
    if n < 2 {
        return Err(Error::TooFewStates { n, min: 2 });
    }
    if n % 2 != 0 {
        return Err(Error::OddN { n });
    }
    if n > MAX_MIXING_N {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_MIXING_N,
        });
    }
    let m_binom = DenseMatrix::from_fn(n, n, |i, k| Complex64::new(binomial(k, i), 0.0));
    let d: Vec<f64> = (0..n).map(|k| n as f64 / 2f64.powi(k as i32)).collect();
    let s: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    let m = DenseMatrix::from_fn(n, n, |i, k| m_binom.get(i, k) * d[k]);
    Ok(MixingMatrix { m, m_binom, d, s })
}

/// Solves `lambda_A = M . p` for the multiprobabilistic probability vector
/// via the structured inverse. Defined for even `N` and `0 < alpha <= 1`
/// (the regime where all weights are provably nonnegative); amplitudes
/// within `1e-12` above 1 are treated as 1.
pub fn probability_vector(alpha: f64, n: usize) -> Result<ProbabilityVector> {
    let alpha = clamp_unit_amplitude(alpha)?;
    let mixing = mixing_matrix(n)?;
    let lambda = analytic_spectrum(alpha, n);
    let probs = mixing.solve(&lambda)?;
    ProbabilityVector::new(probs)
}

/// Gram row of the leak of the constructive transform: the convex
/// combination of tensor-power Gram rows with weights `p_{j+1} / (1 - p_0)`
/// for `j = 0..N-2`.
pub fn leak_gram(pv: &ProbabilityVector, n: usize) -> Result<CirculantGram> {
    if pv.len() != n {
        return Err(Error::DimensionMismatch {
            left: pv.len(),
            right: n,
        });
    }
    let p0 = pv.failure();
    if p0 >= 1.0 - 1e-12 {
        return Err(Error::DegenerateFailure { p0 });
    }
    let qubit_row = qubit_gram_row(&QubitEnsemble::new(n)?);
    let success = 1.0 - p0;
    let mut entries = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..=(n - 2) {
        let weight = (pv.probs()[j + 1] / success).max(0.0);
        if weight == 0.0 {
            continue;
        }
        let power = tensor_power_gram(&qubit_row, j as u32)?;
        for (entry, value) in entries.iter_mut().zip(power.first_row().iter()) {
            *entry += value * weight;
        }
    }
    CirculantGram::new(ComplexVector::new(entries)?)
}

/// Explicit leak states: ket `i` superposes `j` tensor copies of the target
/// qubit state padded with vacuum, tagged by an orthonormal indicator
/// register of dimension `N - 1` appended as the last factor.
pub fn leak_states(pv: &ProbabilityVector, n: usize) -> Result<StateSet> {
    if pv.len() != n {
        return Err(Error::DimensionMismatch {
            left: pv.len(),
            right: n,
        });
    }
    if n % 2 != 0 {
        return Err(Error::OddN { n });
    }
    if n > MAX_LEAK_STATES_N {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_LEAK_STATES_N,
        });
    }
    let p0 = pv.failure();
    if p0 >= 1.0 - 1e-12 {
        return Err(Error::DegenerateFailure { p0 });
    }
    let success = 1.0 - p0;
    let qubits = n - 2;
    let qubit_dim = 1usize << qubits;
    let indicator_dim = n - 1;
    let dim = qubit_dim * indicator_dim;
    let ensemble = QubitEnsemble::new(n)?;
    let inv_sqrt2 = 1.0 / 2.0f64.sqrt();

    let kets = (0..n)
        .map(|i| {
            let theta = ensemble.phase(i);
            let mut entries = vec![Complex64::new(0.0, 0.0); dim];
            for j in 0..=(n - 2) {
                let weight = (pv.probs()[j + 1] / success).max(0.0).sqrt();
                if weight == 0.0 {
                    continue;
                }
                // Amplitudes of |b_i>^(x j) (x) |0>^(x (n-2-j)): the first j
                // qubit factors carry (|0> + e^{i theta}|1>)/sqrt(2), the
                // rest are pinned to |0>. Qubit register index uses the
                // first factor as the most significant bit.
                for bits in 0..(1usize << j) {
                    let ones = bits.count_ones();
                    let amp = Complex64::from_polar(
                        weight * inv_sqrt2.powi(j as i32),
                        theta * ones as f64,
                    );
                    let qubit_index = bits << (qubits - j);
                    entries[qubit_index * indicator_dim + j] += amp;
                }
            }
            ComplexVector::new(entries).expect("dimension is positive")
        })
        .collect::<Vec<_>>();
    StateSet::new(kets)
}

/// Splits an amplitude into `M` beams of amplitude `beta <= 1` with
/// `M * beta^2 = alpha^2`: `beta = alpha / (floor(alpha) + 1)` and
/// `M = (floor(alpha) + 1)^2`.
pub fn beamsplit_plan(alpha: f64) -> (f64, u64) {
    debug_assert!(alpha > 0.0);
    let k = alpha.floor() as u64 + 1;
    (alpha / k as f64, k * k)
}

/// Optimal success probability of the coherent-to-qubit transform,
/// `1 - exp(-2*alpha^2)`, valid for every positive amplitude: directly for
/// `alpha <= 1`, and through the beamsplit composition for `alpha > 1`.
pub fn optimal_probability(alpha: f64) -> f64 {
    debug_assert!(alpha > 0.0);
    1.0 - (-2.0 * alpha * alpha).exp()
}

/// Success probability reachable for an odd number of states by interlacing
/// them into the transform for `2N` states. Optimality is not established
/// for odd `N`, so the flag marks the value as conjectural.
pub fn odd_n_probability(alpha: f64, n_odd: usize) -> (f64, bool) {
    assert!(n_odd >= 3 && n_odd % 2 == 1, "n_odd must be odd and >= 3");
    (optimal_probability(alpha), true)
}

/// The constructive optimal solution as a [`TransformSolution`]: success
/// probability `1 - p_0`, leak spectrum from the convex combination of
/// tensor-power Grams, and an all-ones redundancy.
pub fn constructive_solution(alpha: f64, n: usize) -> Result<TransformSolution> {
    let pv = probability_vector(alpha, n)?;
    let leak = leak_gram(&pv, n)?;
    let leak_spectrum = eigenvalues_of_circulant(&leak)?;
    Ok(TransformSolution::from_parts(
        1.0 - pv.failure(),
        leak_spectrum,
        Spectrum::identical_states(n),
    ))
}

fn clamp_unit_amplitude(alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha <= 0.0 || alpha > 1.0 + ALPHA_SLACK {
        return Err(Error::AmplitudeOutOfRange { alpha, max: 1.0 });
    }
    Ok(alpha.min(1.0))
}
