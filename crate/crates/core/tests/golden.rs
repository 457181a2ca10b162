//! Worked examples checked residue by residue, plus values taken from
//! independent oracles.

mod common;

use hilbert_quasi::{
    closed_c_k2, closed_c_k3, evaluate, hilbert_enum_oracle, hilbert_ring_dp, hvector, solve,
    verify_with_oracle, Monomial, MonomialIdeal, Problem, QuasiPolynomial, SolveOptions,
    WeightVector,
};
use num_rational::BigRational;

fn wv(v: &[u64]) -> WeightVector {
    WeightVector::new(v.to_vec()).unwrap()
}

fn ring(w: &[u64]) -> QuasiPolynomial {
    solve(&Problem::ring(wv(w)), &SolveOptions::default())
        .unwrap()
        .quasi_polynomial
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn ring_12346() {
    let p = ring(&[1, 2, 3, 4, 6]);
    assert_eq!(p.period(), 12);
    for (i, desc) in common::RING_12346 {
        assert_eq!(p.poly(*i), &common::poly(desc), "residue {i}");
    }
}

#[test]
fn quotient_12346() {
    let w = wv(&[1, 2, 3, 4, 6]);
    let problem = Problem::quotient(
        w,
        vec![Monomial::new(vec![3, 0, 0, 0, 0]), Monomial::new(vec![0, 1, 1, 0, 0])],
    )
    .unwrap();
    let sol = solve(&problem, &SolveOptions { cross_check: true, ..SolveOptions::default() }).unwrap();
    for (i, desc) in common::QUOTIENT_12346 {
        assert_eq!(sol.quasi_polynomial.poly(*i), &common::poly(desc), "residue {i}");
    }
    verify_with_oracle(&problem, &sol, 100_000_000).unwrap();
}

#[test]
fn ring_2_to_32() {
    let p = ring(&[2, 4, 8, 16, 32]);
    assert_eq!(p.period(), 32);
    for i in 0..32 {
        let expected = common::RING_2_TO_32
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, d)| common::poly(d))
            .unwrap_or_default();
        assert_eq!(p.poly(i), &expected, "residue {i}");
    }
}

#[test]
fn evaluation_matches_enumeration() {
    let w = wv(&[1, 2, 3, 4, 6]);
    let p = ring(&[1, 2, 3, 4, 6]);
    for n in [0u64, 1, 5, 12, 23, 40] {
        let brute = hilbert_enum_oracle(&w, None, n, u64::MAX).unwrap();
        assert_eq!(evaluate(&p, n), BigRational::from_integer(brute), "n = {n}");
    }
    assert_eq!(evaluate(&p, 12), q(44, 1));
}

#[test]
fn quotient_prefix_matches_enumeration() {
    let w = wv(&[1, 2, 3, 4, 6]);
    let i = MonomialIdeal::new(
        w.clone(),
        vec![Monomial::new(vec![3, 0, 0, 0, 0]), Monomial::new(vec![0, 1, 1, 0, 0])],
    )
    .unwrap();
    let values: Vec<i64> = (0..6)
        .map(|n| {
            hilbert_enum_oracle(&w, Some(&i), n, u64::MAX)
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    assert_eq!(values, vec![1, 1, 2, 2, 4, 3]);
    assert_eq!(hvector(&i).unwrap().coefficients(), &[1, 0, 0, -1, 0, -1, 0, 0, 1]);
}

#[test]
fn closed_forms_match_interpolation() {
    // interpolated slots agree with the closed formulas where they apply
    let p = ring(&[1, 1, 2, 3]);
    assert_eq!(closed_c_k2(&wv(&[1, 1, 2, 3])).unwrap(), q(7, 24));
    assert!(p.polys().iter().all(|r| r.coeff(2) == q(7, 24)));
    assert_eq!(closed_c_k3(&wv(&[1, 1, 2, 3])).unwrap(), q(11, 12));

    let p = ring(&[1, 1, 1, 1, 2]);
    assert_eq!(closed_c_k3(&wv(&[1, 1, 1, 1, 2])).unwrap(), q(25, 24));
    assert!(p.polys().iter().all(|r| r.coeff(2) == q(25, 24)));
}

#[test]
fn standard_grading_is_binomial() {
    // dim of degree-n forms in 3 variables: (n + 1)(n + 2) / 2
    let p = ring(&[1, 1, 1]);
    assert_eq!(p.period(), 1);
    assert_eq!(p.poly(0), &hilbert_quasi::RationalPolynomial::from_ratios(&[(1, 1), (3, 2), (1, 2)]));
    let dp = hilbert_ring_dp(&wv(&[1, 1, 1]), 10);
    assert_eq!(dp.values()[10], 66.into());
}
