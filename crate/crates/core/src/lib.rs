//! Exact Hilbert quasi-polynomials of weighted polynomial rings.
//!
//! For a positive weight vector `W = [d_1, .., d_k]` the Hilbert function of
//! `K[x_1, .., x_k] / I` (with `I` a monomial ideal) agrees, for large `n`,
//! with a quasi-polynomial of period `d = lcm(W)`. This crate computes that
//! quasi-polynomial with exact rational coefficients:
//!
//! - [`grading`]: weight vectors, `delta`, the periods `delta_r`, and the
//!   root sets `M_s`, `T_r`.
//! - [`series`]: Hilbert function tables (brute force, convolution and the
//!   log-derivative recursion) and h-vectors of monomial ideals.
//! - [`quasipoly`]: interpolation, the quotient and scaling transforms.
//! - [`closed`]: closed forms of the top three coefficients.
//! - [`structure`]: coefficient periods and the fixed/periodic split.
//! - [`pipeline`]: the end-to-end computation.
//! - [`cli`]: problem files and output formats for the binary.
//!
//! ```
//! use hilbert_quasi::{solve, Problem, SolveOptions, WeightVector};
//!
//! let w = WeightVector::new(vec![1, 2]).unwrap();
//! let sol = solve(&Problem::ring(w), &SolveOptions::default()).unwrap();
//! let qp = &sol.quasi_polynomial;
//! assert_eq!(qp.period(), 2);
//! assert_eq!(qp.poly(0).to_text("x"), "1/2*x + 1");
//! assert_eq!(qp.poly(1).to_text("x"), "1/2*x + 1/2");
//! ```

pub mod cli;
pub mod closed;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod monomial;
pub mod pipeline;
pub mod poly;
pub mod quasipoly;
pub mod series;
pub mod structure;

pub use closed::{closed_c_k2, closed_c_k3, closed_leading_coefficient};
pub use error::{Error, Result};
pub use grading::{RootStructure, WeightVector};
pub use monomial::{Monomial, MonomialIdeal};
pub use pipeline::{solve, verify_with_oracle, Problem, Solution, SolveOptions};
pub use poly::RationalPolynomial;
pub use quasipoly::{
    certify, evaluate, interpolate_quotient_direct, interpolate_ring, interpolate_ring_full,
    quotient_from_ring,
    scale_transform, InterpolationLimits, QuasiPolynomial,
};
pub use series::{
    hilbert_enum_count, hilbert_enum_oracle, hilbert_quotient, hilbert_ring_dp, hilbert_ring_recursive, hvector,
    HVector, HilbertTable, TableMethod, TableSource,
};
pub use structure::{structure_report, StructureReport};
