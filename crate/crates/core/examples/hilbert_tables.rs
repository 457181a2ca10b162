//! Three ways to tabulate `H(n)`: enumeration, convolution and the
//! log-derivative recursion.

use std::time::Instant;

use hilbert_quasi::{hilbert_enum_oracle, HilbertTable, TableMethod, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightVector::new(vec![1, 2, 3, 4, 6])?;

    let brute: Vec<String> = (0..=20)
        .map(|n| hilbert_enum_oracle(&w, None, n, u64::MAX).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("enumeration H(0..=20): {}", brute.join(" "));

    for n in [1000, 2000, 4000] {
        let t0 = Instant::now();
        let dp = HilbertTable::ring(&w, n, TableMethod::Convolution)?;
        let t1 = Instant::now();
        let rec = HilbertTable::ring(&w, n, TableMethod::Recursion)?;
        let t2 = Instant::now();
        assert_eq!(dp.values(), rec.values());
        println!(
            "N = {n}: convolution {:?}, recursion {:?}, H(N) = {}",
            t1 - t0,
            t2 - t1,
            rec.values()[n]
        );
    }
    Ok(())
}
