//! Optimal probabilistic transforms between symmetric sets of pure quantum
//! states.
//!
//! A heralded quantum operation can map each state of a `source` ensemble to
//! the corresponding state of a `target` ensemble with some success
//! probability, leaking information through the residual states it produces.
//! When both ensembles are symmetric (cycled by a fixed unitary), their Gram
//! matrices are circulant, and the optimal uniform transform is the solution
//! of a small linear program over eigenvalue vectors. This crate implements
//! that reduction end to end:
//!
//! - [`linalg`] — circulant Gram rows, spectra via the DFT, Hadamard
//!   products, normalized circular convolution, discrete convolution
//!   matrices, and synthesis of explicit states from a spectrum.
//! - [`states`] — symmetric coherent and equatorial-qubit ensembles, tensor
//!   powers, Gram construction and symmetry checks.
//! - [`solver`] — the linear program for optimal uniform transforms,
//!   unambiguous-discrimination bounds, witness verification,
//!   uniformization, symmetrization, and solution diagnostics.
//! - [`info`] — entropy bounds on the information carried by the leak and
//!   the redundancy.
//! - [`coherent2qubit`] — the coherent-to-qubit application: analytic
//!   spectra, the constructive probability vector, explicit leak states, and
//!   beamsplit plans for large amplitudes.
//! - [`scissors`] — optical state truncation, umbrella re-weighting, and
//!   beamsplit-assisted strategies approaching the optimum.
//! - [`oracle`] — brute-force cross-checks: truncated number-basis Grams
//!   and exhaustive lattice search over leak spectra.
//! - [`cli`] — the `symtrans` command-line surface emitting JSON and CSV
//!   reports.
//!
//! # Quick start
//!
//! ```
//! use symtrans::coherent2qubit::analytic_spectrum;
//! use symtrans::linalg::eigenvalues_of_circulant;
//! use symtrans::solver::optimize_uniform;
//! use symtrans::states::{qubit_gram_row, QubitEnsemble};
//!
//! // Transform four phase-encoded coherent states (amplitude 0.5) into the
//! // four matching equatorial qubit states.
//! let source = analytic_spectrum(0.5, 4);
//! let target = eigenvalues_of_circulant(&qubit_gram_row(&QubitEnsemble::new(4)?))?;
//! let solution = optimize_uniform(&source, &target)?;
//!
//! let expected = 1.0 - (-2.0f64 * 0.25).exp();
//! assert!((solution.p_success - expected).abs() < 1e-8);
//! # Ok::<(), symtrans::Error>(())
//! ```
//!
//! All operations are pure functions over immutable data and are safe to
//! call concurrently.

pub mod cli;
pub mod coherent2qubit;
mod error;
pub mod info;
pub mod linalg;
pub mod oracle;
pub mod scissors;
pub mod solver;
pub mod states;

pub use error::{Error, Result};

/// Default tolerance for Gram validity, positive-semidefiniteness clamping,
/// and feasibility residuals.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default tolerance for the linear-dependence and leakless/redundancy-free
/// diagnostics.
pub const DIAG_TOL: f64 = 1e-7;

/// Upper bound on the size of circulant operations.
pub const MAX_CIRCULANT_N: usize = 4096;
