//! Information-theoretic bounds on the leak and the redundancy.
//!
//! For equiprobable pure states, the accessible information of an ensemble
//! is bounded above by the Shannon entropy of the normalized eigenvalues of
//! its Gram matrix. Applying the bound to the leak and redundancy spectra
//! quantifies, in bits, how much a transform can give away.

use crate::linalg::Spectrum;
use crate::solver::TransformSolution;

/// Eigenvalues below this are treated as exact zeros in entropy sums.
const ZERO_EIGENVALUE: f64 = 1e-12;

/// Upper bounds, in bits, on the accessible information carried by the leak
/// and the redundancy of a transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub leak_bits: f64,
    pub redundancy_bits: f64,
}

/// Shannon entropy of the normalized spectrum, in bits:
/// `-sum_i (lambda_i / N) * log2(lambda_i / N)` with `0 log 0 = 0`.
///
/// Ranges from 0 (identical states) to `log2(N)` (orthonormal states).
pub fn entropy_bound(spectrum: &Spectrum) -> f64 {
    let n = spectrum.len() as f64;
    let bits: f64 = spectrum
        .iter()
        .filter(|&&l| l > ZERO_EIGENVALUE)
        .map(|&l| {
            let w = l / n;
            -w * w.log2()
        })
        .sum();
    // + 0.0 turns the -0.0 produced by a point-mass spectrum into +0.0.
    bits.clamp(0.0, n.log2()) + 0.0
}

/// Entropy bounds for both residual sets of a solution.
pub fn report(sol: &TransformSolution) -> EntropyReport {
    EntropyReport {
        leak_bits: entropy_bound(&sol.leak_spectrum),
        redundancy_bits: entropy_bound(&sol.redundancy_spectrum),
    }
}
