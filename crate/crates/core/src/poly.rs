//! Univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `c_0 + c_1 x + .. + c_m x^m`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        RationalPolynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// Coefficients from integer numerator/denominator pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        RationalPolynomial::new(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of `x^r` (zero beyond the degree).
    pub fn coeff(&self, r: usize) -> BigRational {
        self.coefficients.get(r).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coefficients.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(other.coefficients.len());
        RationalPolynomial::new((0..len).map(|r| self.coeff(r) + other.coeff(r)).collect())
    }

    pub fn scale(&self, factor: &BigRational) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// `p(x - shift)`, expanded with binomial coefficients.
    pub fn shift(&self, shift: &BigInt) -> RationalPolynomial {
        if shift.is_zero() || self.is_zero() {
            return self.clone();
        }
        let m = self.coefficients.len();
        let minus = -shift.clone();
        // powers of -shift
        let mut powers = Vec::with_capacity(m);
        powers.push(BigInt::one());
        for i in 1..m {
            let next = &powers[i - 1] * &minus;
            powers.push(next);
        }
        let mut out = vec![BigRational::zero(); m];
        for (r, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (x - s)^r = sum_i C(r, i) x^i (-s)^{r-i}
            let mut binom = BigInt::one();
            for i in 0..=r {
                if i > 0 {
                    binom = binom * (r - i + 1) / i;
                }
                let term = c * BigRational::from_integer(&binom * &powers[r - i]);
                out[i] += term;
            }
        }
        RationalPolynomial::new(out)
    }

    /// `p(x / a)`.
    pub fn substitute_scaled(&self, a: &BigInt) -> RationalPolynomial {
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            out.push(c / BigRational::from_integer(pow.clone()));
            pow *= a;
        }
        RationalPolynomial::new(out)
    }

    /// Integer representation `(N(x), D)` with `p = N / D` for fast evaluation.
    pub fn integer_form(&self) -> IntegerForm {
        let den = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = self
            .coefficients
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        IntegerForm { numerators, den }
    }

    /// Renders with `var` as the indeterminate, e.g. `1/16*x^2 + 1/2*x + 1`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (r, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            match r {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&abs.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if r > 1 {
                        out.push('^');
                        out.push_str(&r.to_string());
                    }
                }
            }
        }
        out
    }

    /// LaTeX rendering, `\frac{1}{16}x^{2} + \frac{1}{2}x + 1`.
    pub fn to_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (r, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let show_coeff = r == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    out.push_str(&abs.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
                }
            }
            match r {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{{{r}}}")),
            }
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

/// A rational polynomial as integer numerator coefficients over a common
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerForm {
    pub numerators: Vec<BigInt>,
    pub den: BigInt,
}

impl IntegerForm {
    /// `N(x)`.
    pub fn eval_numerator(&self, x: &BigInt) -> BigInt {
        self.numerators
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Whether `p(x) == value` exactly.
    pub fn agrees(&self, x: &BigInt, value: &BigInt) -> bool {
        self.eval_numerator(x) == value * &self.den
    }
}
