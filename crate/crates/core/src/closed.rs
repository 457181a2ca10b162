//! Closed-form coefficients of the ring quasi-polynomial.
//!
//! For `gcd(W) = 1` every residue polynomial has degree `k - 1`, and the
//! coefficients of `x^{k-1}`, `x^{k-2}` (when `delta <= k - 2`) and `x^{k-3}`
//! (when `delta <= k - 3`) do not depend on the residue:
//!
//! ```text
//! c_{k-1} = 1 / ((k-1)! prod d_i)
//! c_{k-2} = (sum d_i) / (2 (k-2)! prod d_i)
//! c_{k-3} = (3 (sum d_i)^2 - sum d_i^2) / (24 (k-3)! prod d_i)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::grading::WeightVector;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn weight_product(w: &WeightVector) -> BigInt {
    w.weights().iter().fold(BigInt::one(), |acc, &d| acc * d)
}

fn weight_sum(w: &WeightVector) -> BigInt {
    w.weights().iter().fold(BigInt::from(0), |acc, &d| acc + d)
}

fn check_delta(w: &WeightVector, slot_offset: usize) -> Result<()> {
    let k = w.k();
    let bound = k as i64 - slot_offset as i64;
    let delta = w.delta();
    if bound < 0 || delta as i64 > bound {
        return Err(Error::DeltaPrecondition {
            slot: k.saturating_sub(slot_offset),
            bound,
            delta,
        });
    }
    Ok(())
}

/// Leading coefficient `1 / ((k-1)! prod d_i)`.
pub fn closed_leading_coefficient(w: &WeightVector) -> Result<BigRational> {
    w.require_normalized()?;
    Ok(BigRational::new(
        BigInt::one(),
        factorial(w.k() - 1) * weight_product(w),
    ))
}

/// Coefficient of `x^{k-2}`; needs `delta <= k - 2`.
pub fn closed_c_k2(w: &WeightVector) -> Result<BigRational> {
    w.require_normalized()?;
    check_delta(w, 2)?;
    Ok(BigRational::new(
        weight_sum(w),
        BigInt::from(2) * factorial(w.k() - 2) * weight_product(w),
    ))
}

/// Coefficient of `x^{k-3}`; needs `delta <= k - 3`.
pub fn closed_c_k3(w: &WeightVector) -> Result<BigRational> {
    w.require_normalized()?;
    check_delta(w, 3)?;
    let sum = weight_sum(w);
    let sum_sq = w
        .weights()
        .iter()
        .fold(BigInt::from(0), |acc, &d| acc + BigInt::from(d) * d);
    Ok(BigRational::new(
        BigInt::from(3) * &sum * &sum - sum_sq,
        BigInt::from(24) * factorial(w.k() - 3) * weight_product(w),
    ))
}
