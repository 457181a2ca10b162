//! Per-coefficient periods and the fixed part of a ring quasi-polynomial.

use hilbert_quasi::{solve, Problem, SolveOptions, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for weights in [vec![1, 2, 3, 4, 6], vec![2, 4, 8, 16, 32], vec![6, 10, 15]] {
        let w = WeightVector::new(weights)?;
        let sol = solve(&Problem::ring(w.clone()), &SolveOptions::default())?;
        let rep = sol.structure.expect("reported for rings");
        println!("W = {w}, delta = {}", sol.normalized_weights.delta());
        println!("  observed periods  {:?}", rep.observed_periods);
        println!("  predicted periods {:?}", rep.predicted_periods);
        println!("  fixed part        {}", rep.fixed_part.to_text("x"));
        match rep.periodic_part_degree {
            Some(d) => println!("  periodic part has degree {d}"),
            None => println!("  no periodic part"),
        }
    }
    Ok(())
}
