//! Coefficient periodicity of a ring quasi-polynomial and its split into a
//! fixed polynomial part plus a lower-degree periodic part.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::grading::WeightVector;
use crate::poly::RationalPolynomial;
use crate::quasipoly::QuasiPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// Coefficients of degree `>= delta`, identical for every residue.
    pub fixed_part: RationalPolynomial,
    /// `delta - 1`, or `None` when there is no periodic part (`delta = 0`).
    pub periodic_part_degree: Option<usize>,
    /// Smallest period of the coefficient of `x^r` across residues.
    pub observed_periods: Vec<u64>,
    /// `delta_r` for each slot.
    pub predicted_periods: Vec<u64>,
}

/// Smallest `p | len` with `seq[i] == seq[(i + p) mod len]` for all `i`.
pub fn minimal_cyclic_period<T: PartialEq>(seq: &[T]) -> usize {
    let len = seq.len();
    (1..=len)
        .filter(|p| len.is_multiple_of(*p))
        .find(|&p| (0..len).all(|i| seq[i] == seq[(i + p) % len]))
        .unwrap_or(len)
}

/// Reports per-slot periods of `p`, the ring quasi-polynomial of `weights`.
///
/// Every observed period must divide `delta_r`, and when `gcd(W) = 1` the
/// slots `r >= delta` must be constant; anything else is reported as
/// [`Error::StructuralViolation`].
pub fn structure_report(p: &QuasiPolynomial, weights: &WeightVector) -> Result<StructureReport> {
    if p.period() as u64 != weights.lcm() {
        return Err(Error::InvalidArgument(format!(
            "quasi-polynomial has period {}, weights {} have lcm {}",
            p.period(),
            weights,
            weights.lcm()
        )));
    }
    let k = weights.k();
    if let Some(deg) = p.degree() {
        if deg >= k {
            return Err(Error::StructuralViolation(format!(
                "degree {deg} exceeds k - 1 = {}",
                k - 1
            )));
        }
    }
    let predicted = weights.delta_periods();
    let mut observed = Vec::with_capacity(k);
    for (r, &pred) in predicted.iter().enumerate() {
        let slot: Vec<BigRational> = p.polys().iter().map(|q| q.coeff(r)).collect();
        let period = minimal_cyclic_period(&slot) as u64;
        if pred % period != 0 {
            return Err(Error::StructuralViolation(format!(
                "coefficient of x^{r} has period {period}, which does not divide {pred}"
            )));
        }
        observed.push(period);
    }

    let delta = weights.delta();
    let mut fixed = vec![BigRational::from_integer(0.into()); k];
    if weights.is_normalized() {
        for r in delta..k {
            if observed[r] != 1 {
                return Err(Error::StructuralViolation(format!(
                    "coefficient of x^{r} varies although r >= delta = {delta}"
                )));
            }
            fixed[r] = p.poly(0).coeff(r);
        }
    }
    let fixed_part = RationalPolynomial::new(fixed);
    let periodic_part_degree = delta.checked_sub(1);
    if weights.is_normalized() && fixed_part.degree() != Some(k - 1) {
        return Err(Error::StructuralViolation(format!(
            "fixed part has degree {:?}, expected {}",
            fixed_part.degree(),
            k - 1
        )));
    }
    Ok(StructureReport {
        fixed_part,
        periodic_part_degree,
        observed_periods: observed,
        predicted_periods: predicted,
    })
}
