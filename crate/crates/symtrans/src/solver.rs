//! Optimal uniform transforms between symmetric state sets.
//!
//! The search for the optimal uniform success probability reduces, for
//! circulant source and target Grams, to a linear program over eigenvalue
//! vectors: maximize `sum(x)` subject to `DCM_{lambda_B} . x <= lambda_A`
//! and `x >= 0`. The optimum is `p = sum(x)/N`, the leak spectrum is `x/p`,
//! and the redundancy spectrum is the rescaled constraint slack.
//!
//! The solver is a deterministic dense primal simplex with Bland's
//! anti-cycling rule; problems here are `N` variables by `N` constraints
//! with small `N`, so reproducibility matters more than speed.

use crate::error::{Error, Result};
use crate::linalg::{
    convolve_raw, is_gram_of_states, synthesize_states_from_spectrum, CirculantGram,
    ComplexVector, DenseMatrix, Spectrum,
};
use crate::states::gram_of;
use crate::{DEFAULT_TOL, DIAG_TOL};

use num_complex::Complex64;

/// Result of a uniform-transform optimization: the success probability, the
/// leak and redundancy spectra, and diagnostic flags.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformSolution {
    pub p_success: f64,
    pub leak_spectrum: Spectrum,
    pub redundancy_spectrum: Spectrum,
    pub leakless: bool,
    pub redundancy_free: bool,
    pub leak_lin_dependent: bool,
    pub redundancy_lin_dependent: bool,
}

impl TransformSolution {
    /// Assembles a solution from its spectra and runs the default
    /// diagnostics.
    pub fn from_parts(
        p_success: f64,
        leak_spectrum: Spectrum,
        redundancy_spectrum: Spectrum,
    ) -> Self {
        diagnose(
            Self {
                p_success,
                leak_spectrum,
                redundancy_spectrum,
                leakless: false,
                redundancy_free: false,
                leak_lin_dependent: false,
                redundancy_lin_dependent: false,
            },
            DIAG_TOL,
        )
    }

    /// Max-norm residual of the eigenvalue feasibility identity
    /// `lambda_A = p * (lambda_leak conv lambda_B) + (1-p) * lambda_red`.
    pub fn feasibility_residual(&self, lambda_a: &Spectrum, lambda_b: &Spectrum) -> f64 {
        let success = convolve_raw(self.leak_spectrum.values(), lambda_b.values());
        lambda_a
            .iter()
            .zip(success.iter().zip(self.redundancy_spectrum.iter()))
            .map(|(&a, (&s, &r))| {
                (a - self.p_success * s - (1.0 - self.p_success) * r).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Witness for a general (not necessarily uniform) probabilistic transform:
/// per-state success probabilities together with the leak and redundancy
/// Gram matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralWitness {
    success_probs: Vec<f64>,
    leak_gram: DenseMatrix,
    redundancy_gram: DenseMatrix,
}

impl GeneralWitness {
    pub fn new(
        success_probs: Vec<f64>,
        leak_gram: DenseMatrix,
        redundancy_gram: DenseMatrix,
    ) -> Result<Self> {
        if success_probs.len() != leak_gram.rows() {
            return Err(Error::DimensionMismatch {
                left: success_probs.len(),
                right: leak_gram.rows(),
            });
        }
        for &p in &success_probs {
            if !((-DEFAULT_TOL..=1.0 + DEFAULT_TOL).contains(&p)) {
                return Err(Error::InvalidProbability { p });
            }
        }
        if !is_gram_of_states(&leak_gram, DEFAULT_TOL)? {
            return Err(Error::NotGram {
                detail: "leak matrix fails the Gram-of-states conditions".into(),
            });
        }
        if !is_gram_of_states(&redundancy_gram, DEFAULT_TOL)? {
            return Err(Error::NotGram {
                detail: "redundancy matrix fails the Gram-of-states conditions".into(),
            });
        }
        Ok(Self {
            success_probs,
            leak_gram,
            redundancy_gram,
        })
    }

    pub fn success_probs(&self) -> &[f64] {
        &self.success_probs
    }

    pub fn leak_gram(&self) -> &DenseMatrix {
        &self.leak_gram
    }

    pub fn redundancy_gram(&self) -> &DenseMatrix {
        &self.redundancy_gram
    }
}

/// Maximal uniform success probability for transforming a source set with
/// Gram spectrum `lambda_a` into a target set with Gram spectrum `lambda_b`.
///
/// The degenerate target `N*e_1` (all target states identical) is handled by
/// the same program and yields the deterministic contraction `p = 1`.
pub fn optimize_uniform(lambda_a: &Spectrum, lambda_b: &Spectrum) -> Result<TransformSolution> {
    let n = lambda_a.len();
    if n != lambda_b.len() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: lambda_b.len(),
        });
    }
    let rows = dcm_rows(lambda_b);
    let x = maximize_sum(&rows, lambda_a.values())?;
    Ok(solution_from_witness(lambda_a, lambda_b, &x))
}

/// Whether any `x >= 0` with `sum(x) = p*N` satisfies
/// `DCM_{lambda_b} . x <= lambda_a`; returns one such witness when feasible.
///
/// Feasibility is monotone in `p`, so the check reduces to comparing `p`
/// against the optimum and scaling the optimal witness down.
pub fn feasible_at(
    lambda_a: &Spectrum,
    lambda_b: &Spectrum,
    p: f64,
) -> Result<Option<Vec<f64>>> {
    let n = lambda_a.len();
    if n != lambda_b.len() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: lambda_b.len(),
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability { p });
    }
    if p == 0.0 {
        return Ok(Some(vec![0.0; n]));
    }
    let rows = dcm_rows(lambda_b);
    let x = maximize_sum(&rows, lambda_a.values())?;
    let total: f64 = x.iter().sum();
    let target = p * n as f64;
    if target > total + 1e-12 {
        return Ok(None);
    }
    let scale = (target / total).min(1.0);
    Ok(Some(x.iter().map(|&v| v * scale).collect()))
}

/// Optimal success probability of unambiguous discrimination: the smallest
/// eigenvalue of the source Gram matrix. Zero exactly when the source set is
/// linearly dependent.
pub fn uds_probability(lambda_a: &Spectrum) -> f64 {
    lambda_a.min()
}

/// Checks a general witness against the transform existence identity
/// `G_A = P_s o Pi_s o G_B + P_f o Pi_f`, where
/// `P_s[i][j] = sqrt(p_i p_j)` and `P_f[i][j] = sqrt((1-p_i)(1-p_j))`.
pub fn verify_general(
    g_a: &DenseMatrix,
    g_b: &DenseMatrix,
    witness: &GeneralWitness,
    tol: f64,
) -> Result<bool> {
    let n = g_a.rows();
    for m in [g_a, g_b, witness.leak_gram(), witness.redundancy_gram()] {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: m.rows(),
            });
        }
    }
    if witness.success_probs().len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: witness.success_probs().len(),
        });
    }
    if !is_gram_of_states(witness.leak_gram(), tol)?
        || !is_gram_of_states(witness.redundancy_gram(), tol)?
    {
        return Ok(false);
    }
    let probs = witness.success_probs();
    let mut residual = 0.0f64;
    for i in 0..n {
        let root_pi = probs[i].clamp(0.0, 1.0).sqrt();
        let root_qi = (1.0 - probs[i].clamp(0.0, 1.0)).sqrt();
        for j in 0..n {
            let root_pj = probs[j].clamp(0.0, 1.0).sqrt();
            let root_qj = (1.0 - probs[j].clamp(0.0, 1.0)).sqrt();
            let rhs = witness.leak_gram().get(i, j) * g_b.get(i, j) * (root_pi * root_pj)
                + witness.redundancy_gram().get(i, j) * (root_qi * root_qj);
            residual = residual.max((g_a.get(i, j) - rhs).norm());
        }
    }
    Ok(residual <= tol)
}

/// Uniform success probability obtained by averaging per-state
/// probabilities.
pub fn uniformize(probs: &[f64]) -> Result<f64> {
    if probs.is_empty() {
        return Err(Error::Empty);
    }
    for &p in probs {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability { p });
        }
    }
    Ok(probs.iter().sum::<f64>() / probs.len() as f64)
}

/// Projects a Gram matrix onto the circulant Grams by averaging its cyclic
/// diagonals: `row[d] = (1/N) * sum_i Pi[i][(i+d) mod N]`.
///
/// Circulant inputs are fixed points, and a feasible (p, leak, redundancy)
/// pair stays feasible at the same `p` after symmetrization.
pub fn symmetrize_gram(pi: &DenseMatrix) -> Result<CirculantGram> {
    if !is_gram_of_states(pi, DEFAULT_TOL)? {
        return Err(Error::NotGram {
            detail: "input fails the Gram-of-states conditions".into(),
        });
    }
    let n = pi.rows();
    let entries: Vec<Complex64> = (0..n)
        .map(|d| {
            (0..n).map(|i| pi.get(i, (i + d) % n)).sum::<Complex64>() / n as f64
        })
        .collect();
    CirculantGram::new(ComplexVector::new(entries)?)
}

/// Fills in the diagnostic flags of a solution.
///
/// `leakless` / `redundancy_free` hold when the corresponding spectrum is
/// `N*e_1` within `tol` (all residual states equal); `*_lin_dependent` holds
/// when the spectrum has an entry below `tol`.
pub fn diagnose(mut sol: TransformSolution, tol: f64) -> TransformSolution {
    sol.leakless = is_point_mass(&sol.leak_spectrum, tol);
    sol.redundancy_free = is_point_mass(&sol.redundancy_spectrum, tol);
    sol.leak_lin_dependent = sol.leak_spectrum.min() < tol;
    sol.redundancy_lin_dependent = sol.redundancy_spectrum.min() < tol;
    sol
}

/// Rebuilds a dense witness for a uniform solution: equal per-state
/// probabilities and leak/redundancy Grams realized by explicit state sets
/// synthesized from the spectra.
pub fn uniform_witness(sol: &TransformSolution) -> Result<GeneralWitness> {
    let n = sol.leak_spectrum.len();
    let leak = gram_of(&synthesize_states_from_spectrum(&sol.leak_spectrum));
    let redundancy = gram_of(&synthesize_states_from_spectrum(&sol.redundancy_spectrum));
    GeneralWitness::new(vec![sol.p_success; n], leak, redundancy)
}

fn is_point_mass(spectrum: &Spectrum, tol: f64) -> bool {
    let n = spectrum.len();
    if (spectrum[0] - n as f64).abs() > tol {
        return false;
    }
    spectrum.iter().skip(1).all(|&v| v.abs() <= tol)
}

/// Constraint rows of the normalized discrete convolution matrix:
/// `rows[i][j] = lambda_b[(i - j) mod N] / N`.
fn dcm_rows(lambda_b: &Spectrum) -> Vec<Vec<f64>> {
    let n = lambda_b.len();
    (0..n)
        .map(|i| (0..n).map(|j| lambda_b[(i + n - j) % n] / n as f64).collect())
        .collect()
}

/// Builds the solution record from an LP witness `x`, recomputing the slack
/// against the original data.
fn solution_from_witness(
    lambda_a: &Spectrum,
    lambda_b: &Spectrum,
    x: &[f64],
) -> TransformSolution {
    let n = lambda_a.len();
    let total: f64 = x.iter().sum();
    let p = (total / n as f64).clamp(0.0, 1.0);

    let leak = if total <= DEFAULT_TOL {
        Spectrum::identical_states(n)
    } else {
        Spectrum::normalized(x.iter().map(|&v| v * (n as f64 / total)).collect())
            .expect("LP witness is nonnegative and sums to p*N")
    };

    let redundancy = if 1.0 - p <= DEFAULT_TOL {
        Spectrum::identical_states(n)
    } else {
        let produced = convolve_raw(leak.values(), lambda_b.values());
        let slack: Vec<f64> = lambda_a
            .iter()
            .zip(produced.iter())
            .map(|(&a, &s)| ((a - p * s) / (1.0 - p)).max(0.0))
            .collect();
        Spectrum::normalized(slack).expect("slack is nonnegative and sums to (1-p)*N")
    };

    TransformSolution::from_parts(p, leak, redundancy)
}

/// Maximizes `sum(x)` subject to `rows . x <= rhs`, `x >= 0` with a dense
/// primal simplex. All right-hand sides are nonnegative, so the slack basis
/// is feasible and no artificial phase is needed. Entering and leaving
/// variables follow Bland's rule (lowest index), which makes the pivot
/// sequence deterministic and cycle-free.
fn maximize_sum(rows: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    const EPS: f64 = 1e-10;
    const MAX_PIVOTS: usize = 10_000;

    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let total_vars = n + m;

    // Tableau: m constraint rows plus the objective row; last column is the
    // right-hand side.
    let mut tableau = vec![vec![0.0f64; total_vars + 1]; m + 1];
    let mut basis = vec![0usize; m];
    for (i, row) in rows.iter().enumerate() {
        tableau[i][..n].copy_from_slice(row);
        tableau[i][n + i] = 1.0;
        tableau[i][total_vars] = rhs[i];
        basis[i] = n + i;
    }
    // Maximizing sum(x): reduced costs start at +1 for the decision vars.
    for j in 0..n {
        tableau[m][j] = 1.0;
    }

    let mut pivots = 0usize;
    while let Some(entering) = (0..total_vars).find(|&j| tableau[m][j] > EPS) {
        let mut leaving: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            let coeff = tableau[i][entering];
            if coeff > EPS {
                let ratio = tableau[i][total_vars] / coeff;
                let better = ratio < best_ratio - EPS
                    || (ratio <= best_ratio + EPS
                        && leaving.is_none_or(|l| basis[i] < basis[l]));
                if better {
                    best_ratio = ratio;
                    leaving = Some(i);
                }
            }
        }
        let Some(leaving) = leaving else {
            // Every DCM column has positive mass, so the program is bounded;
            // reaching this would mean corrupted input.
            return Err(Error::IterationLimit { limit: pivots });
        };

        let pivot_value = tableau[leaving][entering];
        for value in tableau[leaving].iter_mut() {
            *value /= pivot_value;
        }
        for i in 0..=m {
            if i == leaving {
                continue;
            }
            let factor = tableau[i][entering];
            if factor == 0.0 {
                continue;
            }
            for j in 0..=total_vars {
                tableau[i][j] -= factor * tableau[leaving][j];
            }
        }
        basis[leaving] = entering;

        pivots += 1;
        if pivots > MAX_PIVOTS {
            return Err(Error::IterationLimit { limit: MAX_PIVOTS });
        }
    }

    let mut x = vec![0.0f64; n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = tableau[i][total_vars].max(0.0);
        }
    }
    Ok(x)
}
