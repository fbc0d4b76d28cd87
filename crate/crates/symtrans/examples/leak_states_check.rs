//! Materialize the leak states of the constructive transform and confirm
//! that their Gram matrix reproduces the predicted circulant.
//!
//! ```bash
//! cargo run -p symtrans --example leak_states_check
//! ```

use symtrans::coherent2qubit::{leak_gram, leak_states, probability_vector};
use symtrans::info::entropy_bound;
use symtrans::linalg::eigenvalues_of_circulant;
use symtrans::states::gram_of;

fn main() -> Result<(), symtrans::Error> {
    let alpha = 0.7;
    let n = 4;

    let pv = probability_vector(alpha, n)?;
    let predicted = leak_gram(&pv, n)?;
    let states = leak_states(&pv, n)?;

    println!("alpha = {alpha}, N = {n}");
    println!(
        "  leak states live in dimension {} (qubit register x indicator)",
        states.dim()
    );
    let reconstructed = gram_of(&states);
    let diff = reconstructed.max_abs_diff(&predicted.expand())?;
    println!("  |gram(states) - predicted|_max = {diff:.3e}");

    let spectrum = eigenvalues_of_circulant(&predicted)?;
    println!("  leak spectrum  = {:?}", spectrum.values());
    println!("  leak carries at most {:.6} bits", entropy_bound(&spectrum));
    Ok(())
}
