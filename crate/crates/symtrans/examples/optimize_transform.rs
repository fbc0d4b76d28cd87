//! Solve for the optimal uniform transform between two symmetric ensembles
//! and inspect its leak and redundancy.
//!
//! ```bash
//! cargo run -p symtrans --example optimize_transform
//! ```

use symtrans::info;
use symtrans::linalg::eigenvalues_of_circulant;
use symtrans::solver::optimize_uniform;
use symtrans::states::{coherent_gram_row, qubit_gram_row, CoherentEnsemble, QubitEnsemble};

fn main() -> Result<(), symtrans::Error> {
    let alpha = 0.5;
    let n = 4;

    let source = eigenvalues_of_circulant(&coherent_gram_row(&CoherentEnsemble::new(alpha, n)?))?;
    let target = eigenvalues_of_circulant(&qubit_gram_row(&QubitEnsemble::new(n)?))?;

    let sol = optimize_uniform(&source, &target)?;
    let bits = info::report(&sol);

    println!("coherent(alpha = {alpha}) -> equatorial qubits, N = {n}");
    println!("  p_success            = {:.12}", sol.p_success);
    println!("  closed form 1-e^-2a2 = {:.12}", 1.0 - (-2.0 * alpha * alpha).exp());
    println!("  leak spectrum        = {:?}", sol.leak_spectrum.values());
    println!("  redundancy spectrum  = {:?}", sol.redundancy_spectrum.values());
    println!("  leak linearly dependent?       {}", sol.leak_lin_dependent);
    println!("  redundancy linearly dependent? {}", sol.redundancy_lin_dependent);
    println!("  leak bound       = {:.6} bits", bits.leak_bits);
    println!("  redundancy bound = {:.6} bits", bits.redundancy_bits);
    println!(
        "  feasibility residual = {:.3e}",
        sol.feasibility_residual(&source, &target)
    );
    Ok(())
}
