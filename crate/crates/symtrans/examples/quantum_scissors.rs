//! Quantum-scissors realization: truncation and umbrella probabilities, and
//! how beamsplitting closes the gap to the optimal transform.
//!
//! ```bash
//! cargo run -p symtrans --example quantum_scissors
//! ```

use symtrans::coherent2qubit::optimal_probability;
use symtrans::scissors::{evaluate, ost_output, overall_with_splits};

fn main() -> Result<(), symtrans::Error> {
    let alpha = 1.0;
    let eval = evaluate(alpha)?;
    println!("alpha = {alpha}");
    println!("  p_ost      = {:.12}", eval.p_ost);
    println!("  p_umbrella = {:.12}", eval.p_umbrella);
    println!("  p_overall  = {:.12}", eval.p_overall);
    println!("  optimal    = {:.12}", optimal_probability(alpha));

    let out = ost_output(alpha, 0.0);
    println!(
        "  truncated state at theta = 0: [{:.6}, {:.6}] (the target qubit)",
        out[0], out[1]
    );

    println!("\nbeamsplit-assisted strategy at alpha = {alpha}:");
    println!("{:>8} {:>18} {:>12}", "beams", "p_overall", "shortfall");
    for m in [1u64, 2, 5, 10, 100, 10_000] {
        let p = overall_with_splits(alpha, m)?;
        println!(
            "{m:>8} {p:>18.12} {:>12.3e}",
            optimal_probability(alpha) - p
        );
    }
    Ok(())
}
