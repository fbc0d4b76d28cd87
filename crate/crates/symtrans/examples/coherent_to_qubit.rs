//! The constructive coherent-to-qubit transform: the probability vector over
//! tensor-power targets, its failure weight, and the beamsplit plan for
//! amplitudes above one.
//!
//! ```bash
//! cargo run -p symtrans --example coherent_to_qubit
//! ```

use symtrans::coherent2qubit::{
    beamsplit_plan, constructive_solution, mixing_matrix, optimal_probability,
    probability_vector,
};

fn main() -> Result<(), symtrans::Error> {
    let alpha = 0.5;
    let n = 6;

    let mixing = mixing_matrix(n)?;
    println!("mixing matrix (N = {n}), upper triangular with column sums N:");
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|k| format!("{:7.3}", mixing.matrix().get(i, k).re))
            .collect();
        println!("  [{}]", row.join(" "));
    }

    let pv = probability_vector(alpha, n)?;
    println!("\nalpha = {alpha}");
    println!("  probability vector = {:?}", pv.probs());
    println!("  p_failure          = {:.12}", pv.failure());
    println!("  exp(-2 alpha^2)    = {:.12}", (-2.0 * alpha * alpha).exp());

    let sol = constructive_solution(alpha, n)?;
    println!("  p_success          = {:.12}", sol.p_success);
    println!("  redundancy-free?   {}", sol.redundancy_free);

    let big = 2.5;
    let (beta, m) = beamsplit_plan(big);
    println!("\nalpha = {big}: split into {m} beams of amplitude {beta:.6}");
    println!("  p_success          = {:.12}", optimal_probability(big));
    Ok(())
}
