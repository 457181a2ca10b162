//! Weight vectors and the period data derived from them.
//!
//! A weight vector `W = [d_1, .., d_k]` grades `K[x_1, .., x_k]` by
//! `deg(x_i) = d_i`. The denominator `g(t) = prod (1 - t^{d_i})` of the
//! Hilbert–Poincaré series has the root `1` with multiplicity `k` and the
//! roots `zeta^j` (`zeta` a primitive `d`-th root of unity, `d = lcm W`) for
//! `j` in the sets `M_s`. Everything here is integer bookkeeping over the
//! exponents `j`; no cyclotomic arithmetic is performed.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARIABLES: usize = 24;

/// Largest period for which [`WeightVector::root_structure`] materializes the
/// `M_s` and `T_r` sets.
pub const MAX_ROOT_STRUCTURE_PERIOD: u64 = 1 << 24;

/// Positive integer weights `d_1..d_k` together with their lcm and gcd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<u64>,
    lcm: u64,
    gcd: u64,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("at least one weight is required".into()));
        }
        if weights.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                k: weights.len(),
                max: MAX_VARIABLES,
            });
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!("weight d_{} is zero", pos + 1)));
        }
        let mut lcm = 1u64;
        let mut gcd = 0u64;
        for &w in &weights {
            let g = lcm.gcd(&w);
            lcm = (lcm / g)
                .checked_mul(w)
                .ok_or_else(|| Error::PeriodTooLarge(format!("lcm of {weights:?} overflows u64")))?;
            gcd = gcd.gcd(&w);
        }
        Ok(WeightVector { weights, lcm, gcd })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Number of variables `k`.
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    /// `d = lcm(d_1..d_k)`, the period of the Hilbert quasi-polynomial.
    pub fn lcm(&self) -> u64 {
        self.lcm
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn is_normalized(&self) -> bool {
        self.gcd == 1
    }

    pub fn sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Fails with [`Error::NotCoprime`] unless `gcd(W) = 1`.
    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotCoprime { gcd: self.gcd })
        }
    }

    /// Splits `W = a * W'` with `gcd(W') = 1`, returning `(W', a)`.
    pub fn normalize(&self) -> (WeightVector, u64) {
        let a = self.gcd;
        let weights = self.weights.iter().map(|w| w / a).collect();
        (
            WeightVector {
                weights,
                lcm: self.lcm / a,
                gcd: 1,
            },
            a,
        )
    }

    /// Largest size of an index set whose weights share a common factor.
    ///
    /// Equals the largest number of weights divisible by a single prime;
    /// `0` when every weight is `1`, and `k` when `W` is not normalized.
    pub fn delta(&self) -> usize {
        prime_factors(&self.weights)
            .into_iter()
            .map(|p| self.weights.iter().filter(|&&w| w % p == 0).count())
            .max()
            .unwrap_or(0)
    }

    /// Period `delta_r` of the coefficient of `x^r`: the lcm over all
    /// `(r+1)`-subsets of the gcd of their weights.
    ///
    /// For each prime `p` the exponent of `p` in `delta_r` is the
    /// `(r+1)`-th largest `p`-adic valuation among the weights.
    pub fn delta_r(&self, r: usize) -> Result<u64> {
        let k = self.k();
        if r >= k {
            return Err(Error::InvalidArgument(format!(
                "coefficient slot {r} out of range 0..{k}"
            )));
        }
        let mut period = 1u64;
        for p in prime_factors(&self.weights) {
            let mut valuations: Vec<u32> = self.weights.iter().map(|&w| valuation(w, p)).collect();
            valuations.sort_unstable_by(|a, b| b.cmp(a));
            // p^e divides the lcm, so this cannot overflow
            period *= p.pow(valuations[r]);
        }
        Ok(period)
    }

    /// `delta_0, .., delta_{k-1}`.
    pub fn delta_periods(&self) -> Vec<u64> {
        (0..self.k())
            .map(|r| self.delta_r(r).expect("slot in range"))
            .collect()
    }

    /// `M_s`, `T_r` and the periods; requires `gcd(W) = 1`.
    pub fn root_structure(&self) -> Result<RootStructure> {
        self.require_normalized()?;
        let d = self.lcm;
        if d > MAX_ROOT_STRUCTURE_PERIOD {
            return Err(Error::PeriodTooLarge(format!(
                "root structure for period {d} exceeds {MAX_ROOT_STRUCTURE_PERIOD}"
            )));
        }
        let m_sets: Vec<Vec<u64>> = self
            .weights
            .iter()
            .map(|&ds| {
                let step = d / ds;
                (1..ds).map(|m| m * step).collect()
            })
            .collect();

        let mut membership = vec![0usize; d as usize];
        for set in &m_sets {
            for &j in set {
                membership[j as usize] += 1;
            }
        }
        let mut t_sets = vec![Vec::new(); self.k()];
        for (j, &count) in membership.iter().enumerate() {
            if count > 0 {
                t_sets[count - 1].push(j as u64);
            }
        }

        Ok(RootStructure {
            delta: self.delta(),
            m_sets,
            t_sets,
            delta_r: self.delta_periods(),
        })
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

/// Exponent sets describing the non-trivial roots of `prod (1 - t^{d_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootStructure {
    pub delta: usize,
    /// `m_sets[s - 1] = M_s = {d/d_s, 2 d/d_s, .., (d_s - 1) d/d_s}`, sorted.
    pub m_sets: Vec<Vec<u64>>,
    /// `t_sets[r - 1] = T_r`: exponents lying in exactly `r` of the `M_s`.
    pub t_sets: Vec<Vec<u64>>,
    /// `delta_r[r]` for `r = 0..k`.
    pub delta_r: Vec<u64>,
}

impl RootStructure {
    /// `T_r` for `1 <= r <= k`.
    pub fn t(&self, r: usize) -> &[u64] {
        &self.t_sets[r - 1]
    }

    /// `M_s` for `1 <= s <= k`.
    pub fn m(&self, s: usize) -> &[u64] {
        &self.m_sets[s - 1]
    }

    /// Number of non-trivial roots of `g(t)` counted with multiplicity.
    pub fn root_multiplicity_total(&self) -> u64 {
        self.t_sets
            .iter()
            .enumerate()
            .map(|(i, t)| (i as u64 + 1) * t.len() as u64)
            .sum()
    }
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Distinct primes dividing at least one of `values`, ascending.
fn prime_factors(values: &[u64]) -> Vec<u64> {
    let mut primes = Vec::new();
    for &v in values {
        let mut n = v;
        let mut p = 2u64;
        while p * p <= n {
            if n % p == 0 {
                primes.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            primes.push(n);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    primes
}
