//! State ensembles and their Gram matrices.
//!
//! All ensembles use the phases `theta_k = 2*pi*k/N`, which makes every set
//! symmetric (cycled by a fixed unitary) and every Gram matrix circulant.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{CirculantGram, ComplexVector, DenseMatrix};

/// Symmetric set of `N` coherent states with a common real amplitude and
/// phases at the `N`-th roots of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentEnsemble {
    alpha: f64,
    n_states: usize,
}

impl CoherentEnsemble {
    pub fn new(alpha: f64, n_states: usize) -> Result<Self> {
        if alpha <= 0.0 || !alpha.is_finite() {
            return Err(Error::AmplitudeOutOfRange {
                alpha,
                max: f64::INFINITY,
            });
        }
        if n_states < 2 {
            return Err(Error::TooFewStates { n: n_states, min: 2 });
        }
        Ok(Self { alpha, n_states })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn phase(&self, k: usize) -> f64 {
        2.0 * PI * (k % self.n_states) as f64 / self.n_states as f64
    }
}

/// Symmetric set of `N` equatorial qubit states
/// `(|0> + exp(i*theta_k)|1>)/sqrt(2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitEnsemble {
    n_states: usize,
}

impl QubitEnsemble {
    pub fn new(n_states: usize) -> Result<Self> {
        if n_states < 2 {
            return Err(Error::TooFewStates { n: n_states, min: 2 });
        }
        Ok(Self { n_states })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn phase(&self, k: usize) -> f64 {
        2.0 * PI * (k % self.n_states) as f64 / self.n_states as f64
    }

    /// The explicit two-dimensional kets.
    pub fn kets(&self) -> StateSet {
        let inv_sqrt2 = Complex64::new(1.0 / 2.0f64.sqrt(), 0.0);
        let kets = (0..self.n_states)
            .map(|k| {
                let entries = vec![
                    inv_sqrt2,
                    Complex64::from_polar(1.0, self.phase(k)) * inv_sqrt2,
                ];
                ComplexVector::new(entries).expect("two entries")
            })
            .collect();
        StateSet::new_unchecked(kets)
    }
}

/// A finite list of unit-norm kets of common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSet {
    kets: Vec<ComplexVector>,
}

impl StateSet {
    /// Validates that the kets share a dimension and are normalized within
    /// `1e-10`.
    pub fn new(kets: Vec<ComplexVector>) -> Result<Self> {
        if kets.is_empty() {
            return Err(Error::Empty);
        }
        let dim = kets[0].len();
        for ket in &kets {
            if ket.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: ket.len(),
                });
            }
            let norm = ket.norm();
            if (norm - 1.0).abs() > 1e-10 {
                return Err(Error::NotGram {
                    detail: format!("ket norm {norm} is not 1"),
                });
            }
        }
        Ok(Self { kets })
    }

    /// Constructor for kets normalized by construction.
    pub(crate) fn new_unchecked(kets: Vec<ComplexVector>) -> Self {
        Self { kets }
    }

    pub fn len(&self) -> usize {
        self.kets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kets.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.kets[0].len()
    }

    pub fn kets(&self) -> &[ComplexVector] {
        &self.kets
    }

    pub fn ket(&self, i: usize) -> &ComplexVector {
        &self.kets[i]
    }
}

/// Gram row of a symmetric coherent ensemble, in closed form:
/// `row[k] = exp(alpha^2 * (exp(2*pi*i*k/N) - 1))`.
pub fn coherent_gram_row(ensemble: &CoherentEnsemble) -> CirculantGram {
    let n = ensemble.n_states();
    let a2 = ensemble.alpha() * ensemble.alpha();
    let entries = (0..n)
        .map(|k| {
            let root = Complex64::from_polar(1.0, ensemble.phase(k));
            ((root - Complex64::new(1.0, 0.0)) * a2).exp()
        })
        .collect();
    CirculantGram::new(ComplexVector::new(entries).expect("n >= 2"))
        .expect("coherent overlaps form a valid Gram row")
}

/// Gram row of the equatorial qubit ensemble:
/// `row[k] = (1 + exp(2*pi*i*k/N)) / 2`.
pub fn qubit_gram_row(ensemble: &QubitEnsemble) -> CirculantGram {
    let n = ensemble.n_states();
    let entries = (0..n)
        .map(|k| (Complex64::from_polar(1.0, ensemble.phase(k)) + 1.0) * 0.5)
        .collect();
    CirculantGram::new(ComplexVector::new(entries).expect("n >= 2"))
        .expect("qubit overlaps form a valid Gram row")
}

/// Gram row of `j`-fold tensor copies of the states behind `gram`: the
/// entrywise `j`-th power. `j = 0` yields the all-ones row (the Gram of
/// identical trivial states).
pub fn tensor_power_gram(gram: &CirculantGram, power: u32) -> Result<CirculantGram> {
    let entries = gram
        .first_row()
        .iter()
        .map(|&e| e.powu(power))
        .collect();
    CirculantGram::new(ComplexVector::new(entries)?)
}

/// Gram matrix of pairwise inner products; Hermitian with unit diagonal.
pub fn gram_of(set: &StateSet) -> DenseMatrix {
    let n = set.len();
    DenseMatrix::from_fn(n, n, |i, j| {
        set.ket(i)
            .inner(set.ket(j))
            .expect("common dimension enforced by StateSet")
    })
}

/// Whether `g[i][j]` depends only on `(j - i) mod N` within `tol`, i.e.
/// whether the underlying set is symmetric.
pub fn is_symmetric_set(g: &DenseMatrix, tol: f64) -> Result<bool> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let n = g.rows();
    for i in 0..n {
        for j in 0..n {
            let reference = g.get(0, (j + n - i) % n);
            if (g.get(i, j) - reference).norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{circular_convolution, eigenvalues_of_circulant};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coherent_row_tends_to_ones_at_small_alpha() {
        let gram = coherent_gram_row(&CoherentEnsemble::new(1e-8, 4).unwrap());
        for k in 0..4 {
            assert!((gram.first_row()[k] - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn coherent_row_two_states() {
        let alpha = 0.9;
        let gram = coherent_gram_row(&CoherentEnsemble::new(alpha, 2).unwrap());
        let overlap = (-2.0 * alpha * alpha).exp();
        assert!((gram.first_row()[1] - c(overlap, 0.0)).norm() < 1e-15);
        let spectrum = eigenvalues_of_circulant(&gram).unwrap();
        assert!((spectrum.min() - (1.0 - overlap)).abs() < 1e-12);
    }

    #[test]
    fn coherent_row_modulus_bounded_and_unit_leading() {
        let gram = coherent_gram_row(&CoherentEnsemble::new(1.3, 7).unwrap());
        assert_eq!(gram.first_row()[0], c(1.0, 0.0));
        for k in 0..7 {
            assert!(gram.first_row()[k].norm() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn coherent_row_antipodal_overlap() {
        for n in [2usize, 4, 8] {
            let alpha = 0.75;
            let gram = coherent_gram_row(&CoherentEnsemble::new(alpha, n).unwrap());
            let expected = (-2.0 * alpha * alpha).exp();
            assert!((gram.first_row()[n / 2] - c(expected, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn qubit_row_two_states_orthogonal() {
        let gram = qubit_gram_row(&QubitEnsemble::new(2).unwrap());
        assert!((gram.first_row()[1]).norm() < 1e-15);
    }

    #[test]
    fn qubit_row_four_states() {
        let gram = qubit_gram_row(&QubitEnsemble::new(4).unwrap());
        let expected = [c(1.0, 0.0), c(0.5, 0.5), c(0.0, 0.0), c(0.5, -0.5)];
        for k in 0..4 {
            assert!((gram.first_row()[k] - expected[k]).norm() < 1e-15);
        }
    }

    #[test]
    fn qubit_row_matches_explicit_kets() {
        let ensemble = QubitEnsemble::new(6).unwrap();
        let gram = gram_of(&ensemble.kets());
        let row = qubit_gram_row(&ensemble);
        for j in 0..6 {
            assert!((gram.get(0, j) - row.first_row()[j]).norm() < 1e-14);
        }
    }

    #[test]
    fn tensor_power_zero_is_all_ones() {
        let b = qubit_gram_row(&QubitEnsemble::new(4).unwrap());
        let powered = tensor_power_gram(&b, 0).unwrap();
        assert_eq!(powered, CirculantGram::all_ones(4).unwrap());
    }

    #[test]
    fn tensor_power_one_is_identity_op() {
        let b = qubit_gram_row(&QubitEnsemble::new(4).unwrap());
        let powered = tensor_power_gram(&b, 1).unwrap();
        for k in 0..4 {
            assert!((powered.first_row()[k] - b.first_row()[k]).norm() < 1e-15);
        }
    }

    #[test]
    fn qubit_tensor_power_spectrum_is_binomial() {
        let n = 8usize;
        let b = qubit_gram_row(&QubitEnsemble::new(n).unwrap());
        for k in 0..n as u32 {
            let powered = tensor_power_gram(&b, k).unwrap();
            let spectrum = eigenvalues_of_circulant(&powered).unwrap();
            let scale = n as f64 / 2f64.powi(k as i32);
            let mut expected = vec![0.0; n];
            let mut binom = 1.0;
            for i in 0..=k as usize {
                expected[i] = scale * binom;
                binom = binom * (k as usize - i) as f64 / (i + 1) as f64;
            }
            for i in 0..n {
                assert!((spectrum[i] - expected[i]).abs() < 1e-9, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn tensor_power_spectrum_matches_iterated_convolution() {
        let b = coherent_gram_row(&CoherentEnsemble::new(0.6, 5).unwrap());
        let base = eigenvalues_of_circulant(&b).unwrap();
        let mut conv = base.clone();
        for j in 2..=4u32 {
            conv = circular_convolution(&conv, &base).unwrap();
            let powered = tensor_power_gram(&b, j).unwrap();
            let spectrum = eigenvalues_of_circulant(&powered).unwrap();
            assert!(spectrum.max_abs_diff(&conv) < 1e-10);
        }
    }

    #[test]
    fn gram_of_orthonormal_kets_is_identity() {
        let kets = vec![
            ComplexVector::from_real(&[1.0, 0.0, 0.0]).unwrap(),
            ComplexVector::from_real(&[0.0, 1.0, 0.0]).unwrap(),
            ComplexVector::from_real(&[0.0, 0.0, 1.0]).unwrap(),
        ];
        let gram = gram_of(&StateSet::new(kets).unwrap());
        assert!(gram.max_abs_diff(&DenseMatrix::identity(3)).unwrap() < 1e-15);
    }

    #[test]
    fn gram_of_copies_is_all_ones() {
        let ket = ComplexVector::from_real(&[0.6, 0.8]).unwrap();
        let gram = gram_of(&StateSet::new(vec![ket.clone(), ket.clone(), ket]).unwrap());
        let ones = CirculantGram::all_ones(3).unwrap().expand();
        assert!(gram.max_abs_diff(&ones).unwrap() < 1e-14);
    }

    #[test]
    fn symmetric_set_detection() {
        let row = coherent_gram_row(&CoherentEnsemble::new(0.5, 4).unwrap());
        assert!(is_symmetric_set(&row.expand(), 1e-12).unwrap());

        let zero = ComplexVector::from_real(&[1.0, 0.0]).unwrap();
        let one = ComplexVector::from_real(&[0.0, 1.0]).unwrap();
        let gram = gram_of(&StateSet::new(vec![zero.clone(), zero, one]).unwrap());
        assert!(!is_symmetric_set(&gram, 1e-12).unwrap());
    }

    #[test]
    fn state_set_rejects_unnormalized() {
        let ket = ComplexVector::from_real(&[0.5, 0.5]).unwrap();
        assert!(StateSet::new(vec![ket]).is_err());
    }

    #[test]
    fn ensemble_validation() {
        assert!(CoherentEnsemble::new(0.0, 4).is_err());
        assert!(CoherentEnsemble::new(-1.0, 4).is_err());
        assert!(CoherentEnsemble::new(0.5, 1).is_err());
        assert!(QubitEnsemble::new(1).is_err());
    }
}
