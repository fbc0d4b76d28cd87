//! Unambiguous discrimination of symmetric coherent states: the success
//! probability is the smallest Gram eigenvalue, and it degrades with the
//! number of states while the optimal qubit transform does not.
//!
//! ```bash
//! cargo run -p symtrans --example uds_discrimination
//! ```

use symtrans::coherent2qubit::{analytic_spectrum, optimal_probability};
use symtrans::solver::{optimize_uniform, uds_probability};
use symtrans::linalg::Spectrum;

fn main() -> Result<(), symtrans::Error> {
    let alpha = 1.0;
    println!("alpha = {alpha}");
    println!("{:>4} {:>16} {:>16}", "N", "UDS", "qubit transform");
    for n in [2usize, 4, 8, 16] {
        let spectrum = analytic_spectrum(alpha, n);
        let uds = uds_probability(&spectrum);

        // The same value through the solver: orthogonal targets reduce the
        // linear program to discrimination.
        let lp = optimize_uniform(&spectrum, &Spectrum::orthonormal(n))?;
        assert!((lp.p_success - uds).abs() < 1e-9);

        println!("{n:>4} {uds:>16.12} {:>16.12}", optimal_probability(alpha));
    }
    println!("(discrimination falls with N; the transform target keeps p fixed)");
    Ok(())
}
