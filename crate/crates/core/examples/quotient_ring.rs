//! Quotient of a weighted ring by a monomial ideal.
//!
//! The quasi-polynomial of `R/I` comes from the one of `R` and the h-vector
//! of `I`; here it is also re-derived by direct interpolation and checked
//! against brute-force enumeration.

use hilbert_quasi::{solve, verify_with_oracle, Monomial, Problem, SolveOptions, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightVector::new(vec![1, 2, 3, 4, 6])?;
    // I = (x1^3, x2*x3)
    let gens = vec![
        Monomial::new(vec![3, 0, 0, 0, 0]),
        Monomial::new(vec![0, 1, 1, 0, 0]),
    ];
    let problem = Problem::quotient(w, gens)?;
    let opts = SolveOptions {
        cross_check: true,
        ..SolveOptions::default()
    };
    let sol = solve(&problem, &opts)?;

    println!("h-vector: {:?}", sol.hvector.coefficients());
    for (i, p) in sol.quasi_polynomial.polys().iter().enumerate() {
        println!("P_{i}(x) = {}", p.to_text("x"));
    }
    let report = verify_with_oracle(&problem, &sol, 100_000_000)?;
    println!(
        "stabilization index {}, enumeration agrees on [{}, {}]",
        sol.quasi_polynomial.stabilization_index(),
        report.from,
        report.to
    );
    Ok(())
}
