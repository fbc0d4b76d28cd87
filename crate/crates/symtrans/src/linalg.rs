//! Complex vectors and matrices, circulant algebra, and the spectral toolkit.
//!
//! Circulant Gram matrices are stored by their first row. The unnormalized
//! forward DFT with kernel `exp(-2*pi*i*j*k/N)` maps a first row to the
//! eigenvalue vector of the expanded matrix, so Gram spectra sum to `N`
//! directly. The circular convolution carries a `1/N` factor so that the
//! spectrum of a Hadamard product equals the convolution of the spectra.

use std::f64::consts::PI;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::StateSet;
use crate::{DEFAULT_TOL, MAX_CIRCULANT_N};

/// Ordered complex amplitudes of fixed positive length.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    /// A vector from explicit entries. Fails on empty input.
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { entries })
    }

    /// A vector with the given real parts and zero imaginary parts.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.entries.iter()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub(crate) fn scale(&self, factor: Complex64) -> Self {
        Self {
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }
}

impl Index<usize> for ComplexVector {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.entries[index]
    }
}

/// First row of an `N x N` Hermitian positive-semidefinite circulant with
/// unit diagonal; entry `(i, j)` of the expanded matrix is
/// `first_row[(j - i) mod N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantGram {
    first_row: ComplexVector,
}

impl CirculantGram {
    /// Validates the row: unit leading entry, conjugate symmetry, and a
    /// nonnegative spectrum within [`DEFAULT_TOL`].
    pub fn new(first_row: ComplexVector) -> Result<Self> {
        let n = first_row.len();
        if n > MAX_CIRCULANT_N {
            return Err(Error::DimensionTooLarge {
                n,
                max: MAX_CIRCULANT_N,
            });
        }
        if (first_row[0] - Complex64::new(1.0, 0.0)).norm() > DEFAULT_TOL {
            return Err(Error::NotGram {
                detail: format!("leading entry {} is not 1", first_row[0]),
            });
        }
        let mut sym_residual = 0.0f64;
        for k in 0..n {
            let mirror = first_row[(n - k) % n].conj();
            sym_residual = sym_residual.max((first_row[k] - mirror).norm());
        }
        if sym_residual > DEFAULT_TOL {
            return Err(Error::NotHermitian {
                residual: sym_residual,
                tol: DEFAULT_TOL,
            });
        }
        let gram = Self { first_row };
        // PSD check: the DFT of the row is the spectrum.
        eigenvalues_of_circulant(&gram)?;
        Ok(gram)
    }

    /// The Gram row of an orthonormal set: `[1, 0, ..., 0]`.
    pub fn identity(n: usize) -> Result<Self> {
        let mut row = vec![Complex64::new(0.0, 0.0); n];
        if n > 0 {
            row[0] = Complex64::new(1.0, 0.0);
        }
        Self::new(ComplexVector::new(row)?)
    }

    /// The Gram row of `n` identical states: all entries 1.
    pub fn all_ones(n: usize) -> Result<Self> {
        Self::new(ComplexVector::new(vec![Complex64::new(1.0, 0.0); n])?)
    }

    /// The unique circulant Gram with the given spectrum, obtained by the
    /// inverse DFT of the eigenvalue vector.
    pub fn from_spectrum(spectrum: &Spectrum) -> Result<Self> {
        let lambda = ComplexVector::from_real(spectrum.values())?;
        Self::new(dft_inverse(&lambda))
    }

    pub fn len(&self) -> usize {
        self.first_row.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_row(&self) -> &ComplexVector {
        &self.first_row
    }

    /// Entry `(i, j)` of the expanded matrix.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        let n = self.len();
        self.first_row[(j % n + n - i % n) % n]
    }

    /// The full dense matrix.
    pub fn expand(&self) -> DenseMatrix {
        let n = self.len();
        DenseMatrix::from_fn(n, n, |i, j| self.first_row[(j + n - i) % n])
    }
}

/// Eigenvalue vector of a circulant Gram matrix: real, nonnegative entries
/// summing to `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Validates nonnegativity (entries in `[-tol, 0)` are clamped to zero)
    /// and that the entries sum to `N` within tolerance.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let clamped = clamp_nonnegative(values)?;
        let sum: f64 = clamped.iter().sum();
        let tol = DEFAULT_TOL * n as f64;
        if (sum - n as f64).abs() > tol {
            return Err(Error::InvalidSpectrum {
                detail: format!("entries sum to {sum}, expected {n}"),
            });
        }
        Ok(Self { values: clamped })
    }

    /// Clamps small negatives and rescales the entries to sum exactly to `N`.
    /// Rejects inputs that are more than mildly denormalized.
    pub fn normalized(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let clamped = clamp_nonnegative(values)?;
        let sum: f64 = clamped.iter().sum();
        if sum.is_nan() || sum <= 0.0 || (sum - n as f64).abs() > 1e-6 * n as f64 {
            return Err(Error::InvalidSpectrum {
                detail: format!("entries sum to {sum}, too far from {n} to rescale"),
            });
        }
        let scale = n as f64 / sum;
        Ok(Self {
            values: clamped.into_iter().map(|v| v * scale).collect(),
        })
    }

    /// Spectrum of the identity Gram (an orthonormal set): all ones.
    pub fn orthonormal(n: usize) -> Self {
        Self {
            values: vec![1.0; n],
        }
    }

    /// Spectrum of the all-ones Gram (`n` identical states): `N` followed by
    /// zeros.
    pub fn identical_states(n: usize) -> Self {
        let mut values = vec![0.0; n];
        values[0] = n as f64;
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.values.iter()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest absolute difference against another spectrum.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for Spectrum {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.values[index]
    }
}

fn clamp_nonnegative(values: Vec<f64>) -> Result<Vec<f64>> {
    let mut out = values;
    for v in &mut out {
        if !v.is_finite() || *v < -DEFAULT_TOL {
            return Err(Error::InvalidSpectrum {
                detail: format!("entry {v} below -{DEFAULT_TOL:e}"),
            });
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    Ok(out)
}

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                left: data.len(),
                right: rows * cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Largest deviation from conjugate symmetry.
    pub fn hermiticity_residual(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut residual = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                residual = residual.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        Ok(residual)
    }

    /// Real eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let m = nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j));
        let mut eigenvalues: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        eigenvalues.sort_by(f64::total_cmp);
        Ok(eigenvalues)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect())
    }

    /// Largest entrywise absolute difference against another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

fn kernel_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|m| Complex64::from_polar(1.0, -2.0 * PI * m as f64 / n as f64))
        .collect()
}

/// Unnormalized forward DFT: `out[j] = sum_k v[k] exp(-2*pi*i*j*k/N)`.
///
/// Applied to the first row of a circulant matrix this yields the vector of
/// its eigenvalues.
pub fn dft_forward(v: &ComplexVector) -> ComplexVector {
    let n = v.len();
    let table = kernel_table(n);
    let entries = (0..n)
        .map(|j| (0..n).map(|k| v[k] * table[(j * k) % n]).sum())
        .collect();
    ComplexVector { entries }
}

/// Inverse DFT with the conjugated kernel and a `1/N` factor; round-trips
/// with [`dft_forward`].
pub fn dft_inverse(v: &ComplexVector) -> ComplexVector {
    let n = v.len();
    let table = kernel_table(n);
    let scale = 1.0 / n as f64;
    let entries = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| v[k] * table[(j * k) % n].conj())
                .sum::<Complex64>()
                * scale
        })
        .collect();
    ComplexVector { entries }
}

/// Eigenvalues of a circulant Gram matrix via the DFT of its first row.
///
/// Fails with [`Error::NotHermitian`] when the transform carries imaginary
/// residue, or [`Error::NotPsd`] when an eigenvalue sits below `-tol`.
/// Eigenvalues within `[-tol, 0)` are clamped to zero.
pub fn eigenvalues_of_circulant(c: &CirculantGram) -> Result<Spectrum> {
    let transformed = dft_forward(&c.first_row);
    let tol = DEFAULT_TOL;
    let mut values = Vec::with_capacity(transformed.len());
    let mut imag_residual = 0.0f64;
    for entry in transformed.iter() {
        imag_residual = imag_residual.max(entry.im.abs());
        values.push(entry.re);
    }
    if imag_residual > tol {
        return Err(Error::NotHermitian {
            residual: imag_residual,
            tol,
        });
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -tol {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
            tol,
        });
    }
    Spectrum::new(values)
}

/// Entrywise (Hadamard) product of two circulant Grams; the result is again
/// a circulant Gram.
pub fn hadamard(a: &CirculantGram, b: &CirculantGram) -> Result<CirculantGram> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let row = ComplexVector {
        entries: a
            .first_row
            .iter()
            .zip(b.first_row.iter())
            .map(|(x, y)| x * y)
            .collect(),
    };
    CirculantGram::new(row)
}

/// Normalized circular convolution:
/// `z_i = (1/N) * sum_j x_j * y_((N - j + i) mod N)`.
///
/// For Gram spectra this matches the spectrum of the Hadamard product of the
/// underlying circulants.
pub fn circular_convolution(x: &Spectrum, y: &Spectrum) -> Result<Spectrum> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Spectrum::new(convolve_raw(x.values(), y.values()))
}

/// The convolution formula on raw slices (no spectrum validation).
pub(crate) fn convolve_raw(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| x[j] * y[(n - j + i) % n])
                .sum::<f64>()
                * scale
        })
        .collect()
}

/// Discrete convolution matrix of `x`, normalized so that
/// `dcm(x) . y = circular_convolution(x, y)` holds exactly.
///
/// Its transpose is circulant with first row `x / N`.
pub fn dcm(x: &Spectrum) -> DenseMatrix {
    let n = x.len();
    let scale = 1.0 / n as f64;
    DenseMatrix::from_fn(n, n, |i, j| {
        Complex64::new(x[(i + n - j) % n] * scale, 0.0)
    })
}

/// Whether `m` is a valid Gram matrix of normalized states: Hermitian and
/// positive semidefinite within `tol`, with every diagonal entry equal to 1
/// within `tol`.
pub fn is_gram_of_states(m: &DenseMatrix, tol: f64) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.hermiticity_residual()? > tol {
        return Ok(false);
    }
    for i in 0..m.rows() {
        if (m.get(i, i) - Complex64::new(1.0, 0.0)).norm() > tol {
            return Ok(false);
        }
    }
    let eigenvalues = m.hermitian_eigenvalues()?;
    Ok(eigenvalues.first().copied().unwrap_or(0.0) >= -tol)
}

/// Extracts the first-row representation of a dense circulant Gram matrix,
/// verifying circulancy within `tol`.
pub fn gram_row_of_dense(m: &DenseMatrix, tol: f64) -> Result<CirculantGram> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let reference = m.get(0, (j + n - i) % n);
            if (m.get(i, j) - reference).norm() > tol {
                return Err(Error::NotGram {
                    detail: format!("matrix is not circulant at entry ({i}, {j})"),
                });
            }
        }
    }
    CirculantGram::new(ComplexVector::new((0..n).map(|j| m.get(0, j)).collect())?)
}

/// Builds `N` unit kets in an `N`-dimensional space whose Gram matrix is the
/// circulant with the given spectrum.
///
/// Ket `k` has coordinates `sqrt(lambda_j) * exp(2*pi*i*k*j/N) / sqrt(N)` in
/// an orthonormal basis; coordinates vanish where `lambda_j = 0`.
pub fn synthesize_states_from_spectrum(spectrum: &Spectrum) -> StateSet {
    let n = spectrum.len();
    let amplitudes: Vec<f64> = spectrum.iter().map(|&l| l.sqrt()).collect();
    let root_n = (n as f64).sqrt();
    let kets: Vec<ComplexVector> = (0..n)
        .map(|k| {
            let entries: Vec<Complex64> = (0..n)
                .map(|j| {
                    let phase = 2.0 * PI * ((k * j) % n) as f64 / n as f64;
                    Complex64::from_polar(amplitudes[j] / root_n, phase)
                })
                .collect();
            let ket = ComplexVector { entries };
            let norm = ket.norm();
            ket.scale(Complex64::new(1.0 / norm, 0.0))
        })
        .collect();
    StateSet::new_unchecked(kets)
}
