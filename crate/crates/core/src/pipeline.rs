//! End-to-end computation: normalize the weights, interpolate the ring
//! quasi-polynomial, apply the quotient and scaling transforms, and certify
//! the result against the Hilbert function.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::grading::WeightVector;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::quasipoly::{
    certify, evaluate, interpolate_quotient_direct, interpolate_ring, quotient_from_ring,
    scale_transform, InterpolationLimits, QuasiPolynomial,
};
use crate::series::{hilbert_enum_oracle, hvector, HVector, HilbertTable, TableMethod};
use crate::structure::{structure_report, StructureReport};

/// A weighted polynomial ring, optionally modulo a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub weights: WeightVector,
    /// `None` or an empty generator list both mean the full ring.
    pub ideal: Option<MonomialIdeal>,
}

impl Problem {
    pub fn ring(weights: WeightVector) -> Self {
        Problem {
            weights,
            ideal: None,
        }
    }

    pub fn quotient(weights: WeightVector, generators: Vec<Monomial>) -> Result<Self> {
        let ideal = MonomialIdeal::new(weights.clone(), generators)?;
        Ok(Problem {
            weights,
            ideal: Some(ideal),
        })
    }

    fn nonzero_ideal(&self) -> Option<&MonomialIdeal> {
        self.ideal.as_ref().filter(|i| !i.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub method: TableMethod,
    pub limits: InterpolationLimits,
    /// Also interpolate the quotient directly and require equality with the
    /// transformed ring quasi-polynomial.
    pub cross_check: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: TableMethod::Recursion,
            limits: InterpolationLimits::default(),
            cross_check: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weights: WeightVector,
    pub normalized_weights: WeightVector,
    pub scale: u64,
    /// h-vector in the original grading.
    pub hvector: HVector,
    pub quasi_polynomial: QuasiPolynomial,
    /// Present for the full ring only.
    pub structure: Option<StructureReport>,
}

/// Computes the Hilbert quasi-polynomial of `problem`.
pub fn solve(problem: &Problem, opts: &SolveOptions) -> Result<Solution> {
    let weights = &problem.weights;
    let (normalized, scale) = weights.normalize();
    let mut ring_table = HilbertTable::ring(&normalized, 0, opts.method)?;
    let ring_qp = interpolate_ring(&normalized, &mut ring_table, opts.limits)?;

    let (qp, h) = match problem.nonzero_ideal() {
        None => (ring_qp, HVector::one()),
        Some(ideal) => {
            let ideal_n = ideal.with_weights(normalized.clone())?;
            let h = hvector(&ideal_n)?;
            let transformed = quotient_from_ring(&ring_qp, &h);
            let needed = ring_table.len().max(transformed.stabilization_index() as usize + 1);
            let mut table = HilbertTable::from_hvector(&normalized, h.clone(), needed, opts.method)?;
            let n0 = certify(&transformed, &table)?;
            let transformed = transformed.with_stabilization_index(n0);
            if opts.cross_check {
                let direct = interpolate_quotient_direct(&ideal_n, &mut table, opts.limits)?;
                if !direct.same_polynomials(&transformed) {
                    return Err(Error::Verification {
                        n: n0,
                        expected: "direct interpolation".into(),
                        actual: "transformed ring quasi-polynomial".into(),
                    });
                }
            }
            (transformed, h)
        }
    };

    let qp = scale_transform(&qp, scale)?;
    let a = usize::try_from(scale).map_err(|_| Error::PeriodTooLarge(scale.to_string()))?;
    let hvector = h.inflate(a);
    let structure = match problem.nonzero_ideal() {
        None => Some(structure_report(&qp, weights)?),
        Some(_) => None,
    };
    Ok(Solution {
        weights: weights.clone(),
        normalized_weights: normalized,
        scale,
        hvector,
        quasi_polynomial: qp,
        structure,
    })
}

/// Hilbert table of `problem` in its original grading.
pub fn problem_table(problem: &Problem, n: usize, method: TableMethod) -> Result<HilbertTable> {
    // the recursion needs coprime weights
    let method = if problem.weights.is_normalized() {
        method
    } else {
        TableMethod::Convolution
    };
    match problem.nonzero_ideal() {
        None => HilbertTable::ring(&problem.weights, n, method),
        Some(ideal) => HilbertTable::quotient(ideal, n, method),
    }
}

/// Outcome of checking a solution against brute-force enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub from: u64,
    pub to: u64,
}

/// Compares the quasi-polynomial with [`hilbert_enum_oracle`] on
/// `[n0, n0 + 2 * period]`.
pub fn verify_with_oracle(
    problem: &Problem,
    solution: &Solution,
    node_limit: u64,
) -> Result<VerificationReport> {
    let qp = &solution.quasi_polynomial;
    let from = qp.stabilization_index();
    let to = from + 2 * qp.period() as u64;
    for n in from..=to {
        let brute = hilbert_enum_oracle(&problem.weights, problem.ideal.as_ref(), n, node_limit)?;
        let value = evaluate(qp, n);
        if value != BigRational::from_integer(brute.clone()) {
            return Err(Error::Verification {
                n,
                expected: brute.to_string(),
                actual: value.to_string(),
            });
        }
    }
    Ok(VerificationReport { from, to })
}

/// `P(n)` for each requested `n`, as exact rationals.
pub fn evaluations(solution: &Solution, points: &[u64]) -> Vec<(u64, BigRational)> {
    points
        .iter()
        .map(|&n| (n, evaluate(&solution.quasi_polynomial, n)))
        .collect()
}
