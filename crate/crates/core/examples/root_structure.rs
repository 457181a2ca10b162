//! Grading data: `d`, `delta`, `delta_r` and the root sets `M_s`, `T_r`.

use hilbert_quasi::WeightVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightVector::new(vec![1, 2, 3, 4, 6])?;
    let roots = w.root_structure()?;
    println!("W = {w}, d = {}, delta = {}", w.lcm(), roots.delta);
    println!("delta_r = {:?}", roots.delta_r);
    for s in 1..=w.k() {
        println!("M_{s} = {:?}", roots.m(s));
    }
    for r in 1..=w.k() {
        println!("T_{r} = {:?}", roots.t(r));
    }
    println!(
        "sum r|T_r| + k = {} = sum d_i = {}",
        roots.root_multiplicity_total() + w.k() as u64,
        w.sum()
    );
    Ok(())
}
