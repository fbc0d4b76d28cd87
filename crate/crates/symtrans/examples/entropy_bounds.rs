//! Information bounds for symmetric ensembles: how many bits the leak of an
//! optimal transform can give away, as a function of the amplitude.
//!
//! ```bash
//! cargo run -p symtrans --example entropy_bounds
//! ```

use symtrans::coherent2qubit::constructive_solution;
use symtrans::info::{entropy_bound, report};
use symtrans::coherent2qubit::analytic_spectrum;

fn main() -> Result<(), symtrans::Error> {
    let n = 4;
    println!("N = {n}");
    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "alpha", "source bits", "leak bits", "redundancy"
    );
    for step in 1..=10 {
        let alpha = step as f64 / 10.0;
        let source_bits = entropy_bound(&analytic_spectrum(alpha, n));
        let sol = constructive_solution(alpha, n)?;
        let bits = report(&sol);
        println!(
            "{alpha:>6.1} {source_bits:>14.8} {:>14.8} {:>14.8}",
            bits.leak_bits, bits.redundancy_bits
        );
    }
    println!("(the constructive transform is redundancy-free: 0 redundancy bits)");
    Ok(())
}
