//! Top coefficients from closed formulas versus interpolation.

use hilbert_quasi::{
    closed_c_k2, closed_c_k3, closed_leading_coefficient, quasipoly::interpolate_ring_full,
    HilbertTable, InterpolationLimits, TableMethod, WeightVector,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for weights in [vec![1, 1, 2, 3], vec![1, 1, 1, 1, 2], vec![1, 2, 3, 4, 6]] {
        let w = WeightVector::new(weights)?;
        let k = w.k();
        let mut table = HilbertTable::ring(&w, 0, TableMethod::Recursion)?;
        let p = interpolate_ring_full(&w, &mut table, InterpolationLimits::default())?;
        println!("W = {w}, delta = {}", w.delta());
        println!(
            "  c_(k-1): closed {}, interpolated {}",
            closed_leading_coefficient(&w)?,
            p.poly(0).coeff(k - 1)
        );
        match closed_c_k2(&w) {
            Ok(c) => println!("  c_(k-2): closed {c}, interpolated {}", p.poly(0).coeff(k - 2)),
            Err(e) => println!("  c_(k-2): {e}"),
        }
        match closed_c_k3(&w) {
            Ok(c) => println!("  c_(k-3): closed {c}, interpolated {}", p.poly(0).coeff(k - 3)),
            Err(e) => println!("  c_(k-3): {e}"),
        }
    }
    Ok(())
}
