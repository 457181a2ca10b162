//! Weights with a common factor: `[2, 4, 8, 16, 32]`.
//!
//! The computation runs on `[1, 2, 4, 8, 16]` and is scaled back, so every
//! odd residue polynomial is zero.

use hilbert_quasi::{
    interpolate_ring, scale_transform, HilbertTable, InterpolationLimits, TableMethod,
    WeightVector,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightVector::new(vec![2, 4, 8, 16, 32])?;
    let (normalized, a) = w.normalize();
    println!("{w} = {a} * {normalized}");

    let mut table = HilbertTable::ring(&normalized, 0, TableMethod::Recursion)?;
    let base = interpolate_ring(&normalized, &mut table, InterpolationLimits::default())?;
    let scaled = scale_transform(&base, a)?;

    for (i, p) in scaled.polys().iter().enumerate() {
        if !p.is_zero() {
            println!("P_{i}(x) = {}", p.to_text("x"));
        }
    }
    let zeros = scaled.polys().iter().filter(|p| p.is_zero()).count();
    println!("{zeros} of {} residues are zero", scaled.period());
    Ok(())
}
