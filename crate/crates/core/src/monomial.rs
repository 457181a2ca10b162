//! Monomials as exponent vectors and minimally generated monomial ideals.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::WeightVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial `1` in `k` variables.
    pub fn one(k: usize) -> Self {
        Monomial {
            exponents: vec![0; k],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `sum d_i * alpha_i`.
    pub fn degree(&self, weights: &WeightVector) -> u64 {
        self.exponents
            .iter()
            .zip(weights.weights())
            .map(|(&e, &d)| e as u64 * d)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `self / gcd(self, other)`: componentwise subtraction clamped at zero.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal of `K[x_1..x_k]` graded by `weights`, stored by its
/// minimal generators in (degree, exponent) order. No generators means the
/// zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    weights: WeightVector,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(weights: WeightVector) -> Self {
        MonomialIdeal {
            weights,
            generators: Vec::new(),
        }
    }

    pub fn unit(weights: WeightVector) -> Self {
        let k = weights.k();
        MonomialIdeal {
            weights,
            generators: vec![Monomial::one(k)],
        }
    }

    /// Builds the ideal generated by `generators`, dropping redundant ones.
    pub fn new(weights: WeightVector, generators: Vec<Monomial>) -> Result<Self> {
        let k = weights.k();
        if let Some(bad) = generators.iter().find(|m| m.num_vars() != k) {
            return Err(Error::ExponentLength {
                expected: k,
                got: bad.num_vars(),
            });
        }
        let generators = minimalize(&weights, generators);
        Ok(MonomialIdeal {
            weights,
            generators,
        })
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Same generators, regraded by `weights` (which must have the same `k`).
    pub fn with_weights(&self, weights: WeightVector) -> Result<Self> {
        MonomialIdeal::new(weights, self.generators.clone())
    }

    /// The colon ideal `(self : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.num_vars() != self.weights.k() {
            return Err(Error::ExponentLength {
                expected: self.weights.k(),
                got: m.num_vars(),
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.quotient_by_gcd(m))
            .collect();
        Ok(MonomialIdeal {
            weights: self.weights.clone(),
            generators: minimalize(&self.weights, gens),
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn generator_order(weights: &WeightVector, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree(weights)
        .cmp(&b.degree(weights))
        .then_with(|| a.exponents.cmp(&b.exponents))
}

fn minimalize(weights: &WeightVector, mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| generator_order(weights, a, b));
    gens.dedup();
    // a divisor never has larger degree, so earlier entries are the only candidates
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}
