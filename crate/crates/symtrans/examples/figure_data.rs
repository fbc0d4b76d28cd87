//! Emit the discrimination-vs-transform curve family as CSV on stdout,
//! ready for a plotting tool.
//!
//! ```bash
//! cargo run -p symtrans --example figure_data > fig1.csv
//! ```

use symtrans::scissors::{alpha_grid, figure1_data};

fn main() {
    let grid = alpha_grid(0.05, 1.5, 0.05);
    let table = figure1_data(&grid, &[4, 8]);

    println!("alpha,curve_name,value");
    for (row, alpha) in table.alphas.iter().enumerate() {
        for curve in &table.curves {
            println!("{alpha},{},{}", curve.name, curve.values[row]);
        }
    }
}
