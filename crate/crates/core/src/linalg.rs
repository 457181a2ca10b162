//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves `A y = b` for square `A`, exactly.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("system is not square".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] * &inv;
            let (top, bottom) = a.split_at_mut(row);
            for (target, source) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *target -= &factor * source;
            }
            let delta = &factor * &b[col];
            b[row] -= delta;
        }
    }
    let mut y = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc -= &a[row][c] * &y[c];
        }
        y[row] = acc / &a[row][row];
    }
    Ok(y)
}

/// Vandermonde matrix `[x_i^j]` for `j = 0..xs.len()`.
pub fn vandermonde(xs: &[BigInt]) -> Vec<Vec<BigRational>> {
    xs.iter()
        .map(|x| {
            let mut row = Vec::with_capacity(xs.len());
            let mut p = BigInt::one();
            for _ in 0..xs.len() {
                row.push(BigRational::from_integer(p.clone()));
                p *= x;
            }
            row
        })
        .collect()
}
