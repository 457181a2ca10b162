//! Hilbert quasi-polynomial of `K[x1..x5]` graded by `[1, 2, 3, 4, 6]`.
//!
//! Run with `cargo run --example ring_quasi_polynomial -- 1 2 3 4 6`.

use hilbert_quasi::{evaluate, solve, Problem, SolveOptions, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let weights = if args.is_empty() { vec![1, 2, 3, 4, 6] } else { args };
    let w = WeightVector::new(weights)?;
    let sol = solve(&Problem::ring(w.clone()), &SolveOptions::default())?;
    let qp = &sol.quasi_polynomial;

    println!("W = {w}, period {}", qp.period());
    for (i, p) in qp.polys().iter().enumerate() {
        println!("P_{i}(x) = {}", p.to_text("x"));
    }
    let n = 2 * w.lcm();
    println!("H({n}) = {}", evaluate(qp, n));
    Ok(())
}
