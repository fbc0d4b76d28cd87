//! Cross-check the fast paths against the brute-force oracles: the
//! closed-form coherent Gram against truncated number-basis kets, and the
//! simplex against exhaustive lattice search.
//!
//! ```bash
//! cargo run -p symtrans --example oracle_crosscheck
//! ```

use symtrans::linalg::Spectrum;
use symtrans::oracle::{default_cutoff, fock_gram, grid_search_optimal};
use symtrans::solver::optimize_uniform;
use symtrans::states::{coherent_gram_row, CoherentEnsemble};

fn main() -> Result<(), symtrans::Error> {
    let alpha = 0.5;
    let n = 4;
    let cutoff = default_cutoff(alpha);
    let numeric = fock_gram(alpha, n, cutoff)?;
    let closed = coherent_gram_row(&CoherentEnsemble::new(alpha, n)?).expand();
    println!("number-basis Gram (cutoff {cutoff}) vs closed form:");
    println!("  max deviation = {:.3e}", numeric.max_abs_diff(&closed)?);

    let lambda_a = Spectrum::new(vec![1.6, 0.8, 0.6])?;
    let lambda_b = Spectrum::new(vec![1.3, 0.9, 0.8])?;
    let step = 0.01;
    let lp = optimize_uniform(&lambda_a, &lambda_b)?;
    let grid = grid_search_optimal(&lambda_a, &lambda_b, step)?;
    println!("\nlattice search (step {step}) vs simplex, N = 3:");
    println!("  grid best_p = {:.12}", grid.best_p);
    println!("  LP optimum  = {:.12}", lp.p_success);
    println!("  gap         = {:.3e} (bound {})", lp.p_success - grid.best_p, step * 3.0);
    Ok(())
}
