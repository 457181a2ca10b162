//! Hilbert quasi-polynomials: interpolation, the quotient and scaling
//! transforms, and evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::closed::{closed_c_k2, closed_c_k3, closed_leading_coefficient};
use crate::error::{Error, Result};
use crate::grading::WeightVector;
use crate::linalg::{solve, vandermonde};
use crate::monomial::MonomialIdeal;
use crate::poly::RationalPolynomial;
use crate::series::{HVector, HilbertTable, TableSource};

/// Number of times the sample window is moved up by one period before an
/// interpolation is declared failed.
pub const DEFAULT_MAX_RETRIES: usize = 16;

/// Default cap on the length of Hilbert tables built during interpolation.
pub const DEFAULT_MAX_TABLE_LEN: usize = 2_000_000;

/// Budgets for interpolation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InterpolationLimits {
    pub max_table_len: usize,
    pub max_retries: usize,
}

impl Default for InterpolationLimits {
    fn default() -> Self {
        InterpolationLimits {
            max_table_len: DEFAULT_MAX_TABLE_LEN,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }
}

/// `s` polynomials; `n` is served by `polys[n mod s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    polys: Vec<RationalPolynomial>,
    stabilization_index: u64,
}

impl QuasiPolynomial {
    pub fn new(polys: Vec<RationalPolynomial>, stabilization_index: u64) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::InvalidArgument("quasi-polynomial needs a positive period".into()));
        }
        Ok(QuasiPolynomial {
            polys,
            stabilization_index,
        })
    }

    pub fn zero(period: usize) -> Self {
        QuasiPolynomial {
            polys: vec![RationalPolynomial::zero(); period.max(1)],
            stabilization_index: 0,
        }
    }

    pub fn period(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    pub fn poly(&self, residue: usize) -> &RationalPolynomial {
        &self.polys[residue]
    }

    /// Smallest verified `n_0` from which the quasi-polynomial matches the
    /// Hilbert function.
    pub fn stabilization_index(&self) -> u64 {
        self.stabilization_index
    }

    pub fn with_stabilization_index(mut self, n0: u64) -> Self {
        self.stabilization_index = n0;
        self
    }

    /// Largest degree over all residues (`None` if every polynomial is zero).
    pub fn degree(&self) -> Option<usize> {
        self.polys.iter().filter_map(RationalPolynomial::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.polys.iter().all(RationalPolynomial::is_zero)
    }

    /// Coefficient-wise equality, ignoring stabilization indices.
    pub fn same_polynomials(&self, other: &QuasiPolynomial) -> bool {
        self.polys == other.polys
    }
}

/// `P_{n mod s}(n)`.
pub fn evaluate(p: &QuasiPolynomial, n: u64) -> BigRational {
    let residue = (n % p.period() as u64) as usize;
    p.polys[residue].eval_int(&BigInt::from(n))
}

struct Plan {
    /// Number of low-order coefficients found by solving.
    unknowns: usize,
    /// Known coefficients of `x^unknowns, x^{unknowns+1}, ..`.
    fixed_top: Vec<BigRational>,
    start: u64,
    /// Sample points checked per residue, including the solve points.
    checks_per_residue: usize,
}

/// Ring quasi-polynomial of `weights` (which must be coprime) interpolated
/// from `table`, extending the table when it is too short.
///
/// With `delta <= k - 3` the three top coefficients come from the closed
/// formulas and only `k - 3` unknowns are solved for.
pub fn interpolate_ring(
    weights: &WeightVector,
    table: &mut HilbertTable,
    limits: InterpolationLimits,
) -> Result<QuasiPolynomial> {
    weights.require_normalized()?;
    check_table(weights, table)?;
    let k = weights.k();
    let plan = if k >= 3 && weights.delta() + 3 <= k {
        Plan {
            unknowns: k - 3,
            fixed_top: vec![
                closed_c_k3(weights)?,
                closed_c_k2(weights)?,
                closed_leading_coefficient(weights)?,
            ],
            start: k as u64 - 1,
            checks_per_residue: k + 1,
        }
    } else {
        Plan {
            unknowns: k,
            fixed_top: Vec::new(),
            start: k as u64 - 1,
            checks_per_residue: k + 1,
        }
    };
    interpolate_with_plan(weights.lcm(), table, &plan, limits)
}

/// Like [`interpolate_ring`], but solves for all `k` coefficients even when
/// the closed formulas apply.
pub fn interpolate_ring_full(
    weights: &WeightVector,
    table: &mut HilbertTable,
    limits: InterpolationLimits,
) -> Result<QuasiPolynomial> {
    weights.require_normalized()?;
    check_table(weights, table)?;
    let k = weights.k();
    let plan = Plan {
        unknowns: k,
        fixed_top: Vec::new(),
        start: k as u64 - 1,
        checks_per_residue: k + 1,
    };
    interpolate_with_plan(weights.lcm(), table, &plan, limits)
}

/// Quotient quasi-polynomial interpolated directly from `table`, using the
/// degree bound `k - 2` (so `k - 1` points per residue).
pub fn interpolate_quotient_direct(
    ideal: &MonomialIdeal,
    table: &mut HilbertTable,
    limits: InterpolationLimits,
) -> Result<QuasiPolynomial> {
    let weights = ideal.weights();
    weights.require_normalized()?;
    if ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "direct quotient interpolation needs a nonzero ideal".into(),
        ));
    }
    let TableSource::Quotient(h) = table.source().clone() else {
        return Err(Error::InvalidArgument("table does not describe a quotient".into()));
    };
    check_table(weights, table)?;
    let k = weights.k();
    let start = (k as u64 - 1).max(h.degree().unwrap_or(0) as u64);
    let plan = Plan {
        unknowns: k - 1,
        fixed_top: Vec::new(),
        start,
        checks_per_residue: k + 1,
    };
    interpolate_with_plan(weights.lcm(), table, &plan, limits)
}

fn check_table(weights: &WeightVector, table: &HilbertTable) -> Result<()> {
    if table.weights() != weights {
        return Err(Error::InvalidArgument(format!(
            "table is graded by {}, expected {}",
            table.weights(),
            weights
        )));
    }
    Ok(())
}

fn interpolate_with_plan(
    period: u64,
    table: &mut HilbertTable,
    plan: &Plan,
    limits: InterpolationLimits,
) -> Result<QuasiPolynomial> {
    let d = period;
    let d_us = usize::try_from(d).map_err(|_| Error::PeriodTooLarge(d.to_string()))?;
    let mut last_failure = None;
    for attempt in 0..=limits.max_retries {
        let s0 = plan.start + attempt as u64 * d;
        let window_end = s0 + plan.checks_per_residue as u64 * d;
        let needed = usize::try_from(window_end).map_err(|_| Error::PeriodTooLarge(d.to_string()))?;
        if needed > limits.max_table_len {
            return Err(Error::ResourceGuard(format!(
                "interpolation needs H(0..{needed}), above the limit of {}",
                limits.max_table_len
            )));
        }
        table.extend_to(needed)?;
        let values = table.values();

        let residues: Vec<std::result::Result<RationalPolynomial, Error>> = (0..d_us)
            .into_par_iter()
            .map(|j| fit_residue(j as u64, d, s0, plan, values))
            .collect();

        let mut polys = Vec::with_capacity(d_us);
        let mut failed = None;
        for r in residues {
            match r {
                Ok(p) => polys.push(p),
                Err(e @ Error::Verification { .. }) => {
                    failed = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if let Some(e) = failed {
            last_failure = Some(e);
            continue;
        }

        let stabilization = scan_down(&polys, values, s0);
        return QuasiPolynomial::new(polys, stabilization);
    }
    Err(last_failure.expect("at least one attempt was made"))
}

/// Solves for residue `j` on the points `x_r = j + (beta + r) d`, where
/// `beta` is the least integer with `j + beta d >= s0`, and checks the result
/// on `checks_per_residue` consecutive points of the class.
fn fit_residue(
    j: u64,
    d: u64,
    s0: u64,
    plan: &Plan,
    values: &[BigInt],
) -> Result<RationalPolynomial> {
    let beta = if j >= s0 { 0 } else { (s0 - j).div_ceil(d) };
    let first = j + beta * d;
    let point = |r: usize| first + r as u64 * d;

    let xs: Vec<BigInt> = (0..plan.unknowns).map(|r| BigInt::from(point(r))).collect();
    let rhs: Vec<BigRational> = xs
        .iter()
        .enumerate()
        .map(|(r, x)| {
            let mut y = BigRational::from_integer(values[point(r) as usize].clone());
            let mut pow = num_traits::pow(x.clone(), plan.unknowns);
            for c in &plan.fixed_top {
                y -= c * BigRational::from_integer(pow.clone());
                pow *= x;
            }
            y
        })
        .collect();
    let mut coefficients = solve(vandermonde(&xs), rhs)?;
    coefficients.extend(plan.fixed_top.iter().cloned());
    let poly = RationalPolynomial::new(coefficients);

    let form = poly.integer_form();
    for r in 0..plan.checks_per_residue {
        let n = point(r);
        let expected = &values[n as usize];
        if !form.agrees(&BigInt::from(n), expected) {
            return Err(Error::Verification {
                n,
                expected: expected.to_string(),
                actual: poly.eval_int(&BigInt::from(n)).to_string(),
            });
        }
    }
    Ok(poly)
}

/// Smallest `n0 <= verified_from` such that the polynomials match `values`
/// on `[n0, verified_from)`.
fn scan_down(polys: &[RationalPolynomial], values: &[BigInt], verified_from: u64) -> u64 {
    let s = polys.len() as u64;
    let forms: Vec<_> = polys.iter().map(RationalPolynomial::integer_form).collect();
    let mut n0 = verified_from.min(values.len() as u64);
    while n0 > 0 {
        let n = n0 - 1;
        if !forms[(n % s) as usize].agrees(&BigInt::from(n), &values[n as usize]) {
            break;
        }
        n0 = n;
    }
    n0
}

/// Smallest `n0` such that `p` matches every entry of `table` from `n0` on.
///
/// Fails if the last entry already disagrees.
pub fn certify(p: &QuasiPolynomial, table: &HilbertTable) -> Result<u64> {
    let values = table.values();
    if values.is_empty() {
        return Err(Error::InvalidArgument("empty table".into()));
    }
    let top = values.len() as u64 - 1;
    let residue = (top % p.period() as u64) as usize;
    let value = p.polys[residue].eval_int(&BigInt::from(top));
    if value != BigRational::from_integer(values[top as usize].clone()) {
        return Err(Error::Verification {
            n: top,
            expected: values[top as usize].to_string(),
            actual: value.to_string(),
        });
    }
    Ok(scan_down(&p.polys, values, top))
}

/// Quotient quasi-polynomial from the ring one:
/// `Q_i(x) = sum_j a_j P_{(i - j) mod d}(x - j)`.
///
/// The stabilization index is the sound bound `n0(P) + deg h`; tighten it
/// with [`certify`].
pub fn quotient_from_ring(p: &QuasiPolynomial, h: &HVector) -> QuasiPolynomial {
    let Some(deg) = h.degree() else {
        return QuasiPolynomial::zero(p.period());
    };
    let d = p.period();
    let terms: Vec<(usize, i64)> = h.terms().collect();
    let polys = (0..d)
        .into_par_iter()
        .map(|i| {
            terms.iter().fold(RationalPolynomial::zero(), |acc, &(j, a)| {
                let source = &p.polys[(i + d - j % d) % d];
                let shifted = source.shift(&BigInt::from(j));
                acc.add(&shifted.scale(&BigRational::from_integer(a.into())))
            })
        })
        .collect();
    QuasiPolynomial {
        polys,
        stabilization_index: p.stabilization_index + deg as u64,
    }
}

/// Quasi-polynomial for the weights `a * W` from the one for `W`:
/// `P'_i = 0` unless `a | i`, and `P'_i(x) = P_{i/a}(x / a)` otherwise.
pub fn scale_transform(p: &QuasiPolynomial, a: u64) -> Result<QuasiPolynomial> {
    if a == 0 {
        return Err(Error::InvalidArgument("scale factor must be positive".into()));
    }
    if a == 1 {
        return Ok(p.clone());
    }
    let a_us = usize::try_from(a).map_err(|_| Error::PeriodTooLarge(a.to_string()))?;
    let period = p
        .period()
        .checked_mul(a_us)
        .ok_or_else(|| Error::PeriodTooLarge(format!("{} * {a}", p.period())))?;
    let a_big = BigInt::from(a);
    let polys = (0..period)
        .map(|i| {
            if i % a_us == 0 {
                p.polys[i / a_us].substitute_scaled(&a_big)
            } else {
                RationalPolynomial::zero()
            }
        })
        .collect();
    Ok(QuasiPolynomial {
        polys,
        stabilization_index: p.stabilization_index * a,
    })
}

/// Number of entries of `table` (from `from` on) where `p` disagrees.
pub fn count_mismatches(p: &QuasiPolynomial, table: &HilbertTable, from: u64) -> usize {
    let forms: Vec<_> = p.polys.iter().map(RationalPolynomial::integer_form).collect();
    let s = p.period() as u64;
    table
        .values()
        .iter()
        .enumerate()
        .skip(from as usize)
        .filter(|(n, v)| !forms[(*n as u64 % s) as usize].agrees(&BigInt::from(*n), v))
        .count()
}

/// Whether `p(n)` is a non-negative integer.
pub fn is_natural_value(p: &QuasiPolynomial, n: u64) -> bool {
    let v = evaluate(p, n);
    v.is_integer() && !v.is_negative()
}
