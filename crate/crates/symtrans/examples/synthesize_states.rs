//! Any nonnegative vector summing to N is the spectrum of a symmetric state
//! set: synthesize explicit kets from a spectrum and recover it from their
//! Gram matrix.
//!
//! ```bash
//! cargo run -p symtrans --example synthesize_states
//! ```

use symtrans::linalg::{
    eigenvalues_of_circulant, gram_row_of_dense, synthesize_states_from_spectrum, Spectrum,
};
use symtrans::states::{gram_of, is_symmetric_set};

fn main() -> Result<(), symtrans::Error> {
    let spectrum = Spectrum::new(vec![2.2, 0.0, 0.8, 1.0])?;
    println!("target spectrum: {:?}", spectrum.values());

    let states = synthesize_states_from_spectrum(&spectrum);
    println!("synthesized {} kets of dimension {}", states.len(), states.dim());
    for (k, ket) in states.kets().iter().enumerate() {
        let coords: Vec<String> = ket.iter().map(|c| format!("{c:.4}")).collect();
        println!("  |psi_{k}> = [{}]", coords.join(", "));
    }

    let gram = gram_of(&states);
    println!("Gram is circulant: {}", is_symmetric_set(&gram, 1e-10)?);

    let recovered = eigenvalues_of_circulant(&gram_row_of_dense(&gram, 1e-10)?)?;
    println!("recovered spectrum: {:?}", recovered.values());
    println!(
        "max deviation: {:.3e}",
        recovered.max_abs_diff(&spectrum)
    );
    Ok(())
}
