//! Hilbert function values by three independent routes, and h-vectors.
//!
//! * [`hilbert_enum_oracle`] counts exponent vectors one by one.
//! * [`hilbert_ring_dp`] convolves `1/(1 - t^{d_i})` one weight at a time.
//! * [`hilbert_ring_recursive`] runs the log-derivative recursion
//!   `n H(n) = sum_{r=1}^{n} c(r) H(n - r)`.
//!
//! In the recursion, `c(r)` is the sum over the roots `zeta^j` of
//! `prod (1 - t^{d_i})`, counted with multiplicity, of `zeta^{j r}`. Each
//! factor `1 - t^{d_s}` contributes `sum_{m < d_s} zeta_{d_s}^{m r}`, which is
//! `d_s` when `d_s | r` and `0` otherwise, so `c(r) = sum_{s : d_s | r} d_s`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::grading::WeightVector;
use crate::monomial::{Monomial, MonomialIdeal};

/// Default node budget of [`hilbert_enum_oracle`].
pub const DEFAULT_ENUM_NODE_LIMIT: u64 = 100_000_000;

/// How ring tables are produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TableMethod {
    /// Log-derivative recursion, `O(N^2)`.
    #[default]
    Recursion,
    /// Restricted-partition convolution, `O(k N)`.
    Convolution,
}

/// Numerator `h(t)` of the Hilbert–Poincaré series over `prod (1 - t^{d_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector {
    coefficients: Vec<i64>,
}

impl HVector {
    /// Trailing zeros are trimmed; the zero polynomial has no coefficients.
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        HVector { coefficients }
    }

    pub fn one() -> Self {
        HVector {
            coefficients: vec![1],
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// `h(1)`.
    pub fn value_at_one(&self) -> i128 {
        self.coefficients.iter().map(|&c| c as i128).sum()
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
    }

    /// `h(t^a)`, the h-vector after scaling every weight by `a`.
    pub fn inflate(&self, a: usize) -> HVector {
        if self.is_zero() {
            return self.clone();
        }
        let mut coefficients = vec![0; self.coefficients.len() * a - a + 1];
        for (j, c) in self.terms() {
            coefficients[j * a] = c;
        }
        HVector::new(coefficients)
    }

    fn sub_shifted(&self, shift: usize, other: &HVector) -> Result<HVector> {
        let len = self.coefficients.len().max(other.coefficients.len() + shift);
        let mut out = vec![0i64; len];
        out[..self.coefficients.len()].copy_from_slice(&self.coefficients);
        for (j, c) in other.terms() {
            out[j + shift] = out[j + shift]
                .checked_sub(c)
                .ok_or(Error::Overflow("h-vector"))?;
        }
        Ok(HVector::new(out))
    }
}

/// Which graded module a table describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableSource {
    Ring,
    Quotient(HVector),
}

/// Exact values `H(0..len)` of a Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    weights: WeightVector,
    source: TableSource,
    method: TableMethod,
    values: Vec<BigInt>,
}

impl HilbertTable {
    /// `H_R(0..=n)`.
    pub fn ring(weights: &WeightVector, n: usize, method: TableMethod) -> Result<Self> {
        let values = match method {
            TableMethod::Convolution => ring_convolution(weights, n),
            TableMethod::Recursion => ring_recursion(weights, n)?,
        };
        Ok(HilbertTable {
            weights: weights.clone(),
            source: TableSource::Ring,
            method,
            values,
        })
    }

    /// `H_{R/I}(0..=n)`.
    pub fn quotient(ideal: &MonomialIdeal, n: usize, method: TableMethod) -> Result<Self> {
        let h = hvector(ideal)?;
        Self::from_hvector(ideal.weights(), h, n, method)
    }

    /// `H(0..=n)` of the module with Hilbert–Poincaré numerator `h`.
    pub fn from_hvector(
        weights: &WeightVector,
        h: HVector,
        n: usize,
        method: TableMethod,
    ) -> Result<Self> {
        let ring = HilbertTable::ring(weights, n, method)?;
        let values = apply_hvector(&ring.values, &h);
        Ok(HilbertTable {
            weights: weights.clone(),
            source: TableSource::Quotient(h),
            method,
            values,
        })
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn source(&self) -> &TableSource {
        &self.source
    }

    pub fn method(&self) -> TableMethod {
        self.method
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Number of stored values (`N + 1`).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }

    /// Recomputes the table so that it holds at least `H(0..=n)`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        if n < self.values.len() {
            return Ok(());
        }
        let fresh = match &self.source {
            TableSource::Ring => HilbertTable::ring(&self.weights, n, self.method)?,
            TableSource::Quotient(h) => {
                HilbertTable::from_hvector(&self.weights, h.clone(), n, self.method)?
            }
        };
        *self = fresh;
        Ok(())
    }
}

/// Counts monomials of `W`-degree `n` outside `ideal` by exhaustive search.
///
/// Exponents of the first `k - 1` variables are enumerated; the last one is
/// forced by the degree. Every visited partial vector counts towards
/// `node_limit`, and exceeding it aborts with [`Error::ResourceGuard`].
pub fn hilbert_enum_oracle(
    weights: &WeightVector,
    ideal: Option<&MonomialIdeal>,
    n: u64,
    node_limit: u64,
) -> Result<BigInt> {
    hilbert_enum_count(weights, ideal, n, node_limit).map(|(count, _)| count)
}

/// [`hilbert_enum_oracle`], also returning the number of nodes visited.
pub fn hilbert_enum_count(
    weights: &WeightVector,
    ideal: Option<&MonomialIdeal>,
    n: u64,
    node_limit: u64,
) -> Result<(BigInt, u64)> {
    if let Some(i) = ideal {
        if i.weights().k() != weights.k() {
            return Err(Error::ExponentLength {
                expected: weights.k(),
                got: i.weights().k(),
            });
        }
    }
    let gens: &[Monomial] = ideal.map(|i| i.generators()).unwrap_or(&[]);
    let mut search = Enumeration {
        weights: weights.weights(),
        gens,
        exponents: vec![0; weights.k()],
        nodes: 0,
        node_limit,
        count: 0,
    };
    search.visit(0, n)?;
    Ok((BigInt::from(search.count), search.nodes))
}

struct Enumeration<'a> {
    weights: &'a [u64],
    gens: &'a [Monomial],
    exponents: Vec<u32>,
    nodes: u64,
    node_limit: u64,
    count: u128,
}

impl Enumeration<'_> {
    fn visit(&mut self, var: usize, remaining: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::ResourceGuard(format!(
                "enumeration exceeded {} nodes",
                self.node_limit
            )));
        }
        let d = self.weights[var];
        if var + 1 == self.weights.len() {
            if remaining.is_multiple_of(d) {
                let e = u32::try_from(remaining / d).map_err(|_| Error::Overflow("exponent"))?;
                self.exponents[var] = e;
                let excluded = self.gens.iter().any(|g| {
                    g.exponents()
                        .iter()
                        .zip(&self.exponents)
                        .all(|(a, b)| a <= b)
                });
                if !excluded {
                    self.count += 1;
                }
            }
            return Ok(());
        }
        for e in 0..=remaining / d {
            self.exponents[var] = u32::try_from(e).map_err(|_| Error::Overflow("exponent"))?;
            self.visit(var + 1, remaining - e * d)?;
        }
        Ok(())
    }
}

/// `H_R(0..=n)` by multiplying the truncated series of `1/(1 - t^{d_i})`.
pub fn hilbert_ring_dp(weights: &WeightVector, n: usize) -> HilbertTable {
    HilbertTable::ring(weights, n, TableMethod::Convolution).expect("convolution cannot fail")
}

/// `H_R(0..=n)` by the log-derivative recursion; requires `gcd(W) = 1`.
pub fn hilbert_ring_recursive(weights: &WeightVector, n: usize) -> Result<HilbertTable> {
    HilbertTable::ring(weights, n, TableMethod::Recursion)
}

/// `H_{R/I}(0..=n)` from the h-vector and the ring table.
pub fn hilbert_quotient(ideal: &MonomialIdeal, n: usize, method: TableMethod) -> Result<HilbertTable> {
    HilbertTable::quotient(ideal, n, method)
}

/// `c(r) = sum_{s : d_s | r} d_s` for `r = 0..=n` (`c(0)` is unused and `0`).
pub fn root_power_sums(weights: &WeightVector, n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    for &d in weights.weights() {
        let d_us = d as usize;
        if d_us == 0 || d_us > n {
            continue;
        }
        let mut r = d_us;
        while r <= n {
            c[r] += d;
            r += d_us;
        }
    }
    c
}

fn ring_convolution(weights: &WeightVector, n: usize) -> Vec<BigInt> {
    let mut values = vec![BigInt::zero(); n + 1];
    values[0] = BigInt::one();
    for &d in weights.weights() {
        let d = d as usize;
        for m in d..=n {
            let prev = values[m - d].clone();
            values[m] += prev;
        }
    }
    values
}

fn ring_recursion(weights: &WeightVector, n: usize) -> Result<Vec<BigInt>> {
    weights.require_normalized()?;
    let c = root_power_sums(weights, n);
    if let Some(values) = ring_recursion_i128(&c, n) {
        return Ok(values.into_iter().map(BigInt::from).collect());
    }
    Ok(ring_recursion_big(&c, n))
}

/// Fixed-width pass; `None` as soon as any intermediate overflows.
fn ring_recursion_i128(c: &[u64], n: usize) -> Option<Vec<i128>> {
    let mut h = vec![0i128; n + 1];
    h[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for r in 1..=m {
            if c[r] != 0 {
                acc = acc.checked_add((c[r] as i128).checked_mul(h[m - r])?)?;
            }
        }
        debug_assert_eq!(acc % m as i128, 0);
        h[m] = acc / m as i128;
    }
    Some(h)
}

fn ring_recursion_big(c: &[u64], n: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); n + 1];
    h[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for r in 1..=m {
            if c[r] != 0 {
                acc += &h[m - r] * c[r];
            }
        }
        h[m] = acc / m;
    }
    h
}

fn apply_hvector(ring: &[BigInt], h: &HVector) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); ring.len()];
    for (j, a) in h.terms() {
        for n in j..ring.len() {
            out[n] += &ring[n - j] * a;
        }
    }
    out
}

/// h-vector of a monomial ideal, by peeling off generators:
/// `<(m_1..m_s)> = <(m_1..m_{s-1})> - t^{deg m_s} <(m_1..m_{s-1}) : m_s>`.
pub fn hvector(ideal: &MonomialIdeal) -> Result<HVector> {
    hvector_of(ideal.weights(), ideal.generators())
}

fn hvector_of(weights: &WeightVector, gens: &[Monomial]) -> Result<HVector> {
    let Some((last, rest)) = gens.split_last() else {
        return Ok(HVector::one());
    };
    let rest_ideal = MonomialIdeal::new(weights.clone(), rest.to_vec())?;
    let colon = rest_ideal.colon(last)?;
    let head = hvector_of(weights, rest_ideal.generators())?;
    let tail = hvector_of(weights, colon.generators())?;
    let shift = usize::try_from(last.degree(weights)).map_err(|_| Error::Overflow("degree"))?;
    head.sub_shifted(shift, &tail)
}

/// Truncated product `(sum_{n<=N} H(n) t^n) * prod (1 - t^{d_i})` up to `t^N`.
pub fn truncated_series_times_denominator(weights: &WeightVector, values: &[BigInt]) -> Vec<BigInt> {
    let mut out = values.to_vec();
    for &d in weights.weights() {
        let d = d as usize;
        for n in (d..out.len()).rev() {
            let prev = out[n - d].clone();
            out[n] -= prev;
        }
    }
    out
}

/// Converts a non-negative table entry to `u64` when it fits.
pub fn value_to_u64(v: &BigInt) -> Option<u64> {
    if v.is_negative() {
        None
    } else {
        v.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(v: &[u64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    fn ideal(w: &WeightVector, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(w.clone(), gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn enum_oracle_examples() {
        let lim = DEFAULT_ENUM_NODE_LIMIT;
        assert_eq!(hilbert_enum_oracle(&wv(&[1, 2]), None, 4, lim).unwrap(), 3.into());
        assert_eq!(hilbert_enum_oracle(&wv(&[5, 7, 9]), None, 0, lim).unwrap(), 1.into());
        let w = wv(&[1, 1]);
        let i = ideal(&w, &[&[1, 0]]);
        assert_eq!(hilbert_enum_oracle(&w, Some(&i), 3, lim).unwrap(), 1.into());
    }

    #[test]
    fn enum_oracle_guard() {
        let w = wv(&[1, 1, 1, 1]);
        assert!(matches!(
            hilbert_enum_oracle(&w, None, 200, 10_000),
            Err(Error::ResourceGuard(_))
        ));
    }

    #[test]
    fn dp_examples() {
        assert_eq!(hilbert_ring_dp(&wv(&[1, 1, 1]), 5).values(), ints(&[1, 3, 6, 10, 15, 21]));
        assert_eq!(hilbert_ring_dp(&wv(&[1, 2, 3, 4, 6]), 4).values(), ints(&[1, 1, 2, 3, 5]));
        assert_eq!(hilbert_ring_dp(&wv(&[2]), 3).values(), ints(&[1, 0, 1, 0]));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(
            hilbert_ring_recursive(&wv(&[1, 2]), 4).unwrap().values(),
            ints(&[1, 1, 2, 2, 3])
        );
        let w = wv(&[1, 2, 3, 4, 6]);
        assert_eq!(
            hilbert_ring_recursive(&w, 12).unwrap().get(12),
            hilbert_ring_dp(&w, 12).get(12)
        );
        assert!(hilbert_ring_recursive(&wv(&[1]), 50)
            .unwrap()
            .values()
            .iter()
            .all(|v| *v == BigInt::one()));
        assert_eq!(
            hilbert_ring_recursive(&wv(&[2, 4]), 4),
            Err(Error::NotCoprime { gcd: 2 })
        );
    }

    #[test]
    fn recursion_big_path_matches_fixed_width() {
        let w = wv(&[1, 2, 3, 5, 7]);
        let c = root_power_sums(&w, 300);
        let small: Vec<BigInt> = ring_recursion_i128(&c, 300).unwrap().into_iter().map(BigInt::from).collect();
        assert_eq!(small, ring_recursion_big(&c, 300));
    }

    #[test]
    fn recursion_falls_back_on_overflow() {
        // H grows like n^11 / 11!, beyond i128 well before n = 20000
        let w = wv(&[1; 12]);
        let table = hilbert_ring_recursive(&w, 3000).unwrap();
        let dp = hilbert_ring_dp(&w, 3000);
        assert_eq!(table.values()[3000], dp.values()[3000]);
    }

    /// Sums of roots of unity evaluated numerically over the multiset
    /// `{0 (k times)} ∪ M_1 ∪ .. ∪ M_k`.
    #[test]
    fn root_power_sums_match_complex_evaluation() {
        for v in [&[1u64, 2][..], &[1, 2, 3, 4, 6], &[3, 4, 5], &[2, 3, 9, 10]] {
            let w = wv(v);
            let rs = w.root_structure().unwrap();
            let d = w.lcm() as f64;
            let c = root_power_sums(&w, 60);
            for (r, &cr) in c.iter().enumerate().skip(1) {
                let mut re = w.k() as f64;
                let mut im = 0.0;
                for (i, t) in rs.t_sets.iter().enumerate() {
                    for &j in t {
                        let angle = 2.0 * std::f64::consts::PI * (j as f64) * (r as f64) / d;
                        re += (i + 1) as f64 * angle.cos();
                        im += (i + 1) as f64 * angle.sin();
                    }
                }
                assert!(im.abs() < 1e-9, "imaginary part {im} for {v:?}, r={r}");
                assert!((re - cr as f64).abs() < 1e-9, "{v:?} r={r}: {re} vs {cr}");
            }
        }
    }

    #[test]
    fn hvector_examples() {
        let w = wv(&[1, 2, 3, 4, 6]);
        assert_eq!(hvector(&MonomialIdeal::zero(w.clone())).unwrap(), HVector::one());
        let i = ideal(&w, &[&[3, 0, 0, 0, 0], &[0, 1, 1, 0, 0]]);
        assert_eq!(
            hvector(&i).unwrap().coefficients(),
            &[1, 0, 0, -1, 0, -1, 0, 0, 1]
        );
        let w2 = wv(&[1, 1]);
        let i = ideal(&w2, &[&[2, 0], &[1, 1]]);
        assert_eq!(hvector(&i).unwrap().coefficients(), &[1, 0, -2, 1]);
        let unit = MonomialIdeal::unit(w2);
        assert!(hvector(&unit).unwrap().is_zero());
    }

    #[test]
    fn hvector_matches_enumeration() {
        let w = wv(&[1, 2, 3, 4, 6]);
        let i = ideal(&w, &[&[3, 0, 0, 0, 0], &[0, 1, 1, 0, 0]]);
        let table = hilbert_quotient(&i, 30, TableMethod::Convolution).unwrap();
        for n in 0..=30u64 {
            let brute = hilbert_enum_oracle(&w, Some(&i), n, DEFAULT_ENUM_NODE_LIMIT).unwrap();
            assert_eq!(table.values()[n as usize], brute, "n = {n}");
        }
    }

    #[test]
    fn quotient_examples() {
        let w = wv(&[1, 2, 3, 4, 6]);
        let zero = hilbert_quotient(&MonomialIdeal::zero(w.clone()), 20, TableMethod::Recursion).unwrap();
        assert_eq!(zero.values(), hilbert_ring_dp(&w, 20).values());

        let i = ideal(&w, &[&[3, 0, 0, 0, 0], &[0, 1, 1, 0, 0]]);
        let t = hilbert_quotient(&i, 5, TableMethod::Recursion).unwrap();
        assert_eq!(t.values(), ints(&[1, 1, 2, 2, 4, 3]));

        let t = hilbert_quotient(&MonomialIdeal::unit(w), 10, TableMethod::Recursion).unwrap();
        assert!(t.values().iter().all(Zero::is_zero));
    }

    #[test]
    fn extend_to_recomputes() {
        let w = wv(&[1, 2, 3]);
        let i = ideal(&w, &[&[2, 0, 0]]);
        let mut t = hilbert_quotient(&i, 5, TableMethod::Recursion).unwrap();
        t.extend_to(40).unwrap();
        assert_eq!(t.len(), 41);
        assert_eq!(t, hilbert_quotient(&i, 40, TableMethod::Recursion).unwrap());
    }

    #[test]
    fn generating_function_identity() {
        let w = wv(&[2, 3, 5, 7]);
        let t = hilbert_ring_dp(&w, 200);
        let prod = truncated_series_times_denominator(&w, t.values());
        assert_eq!(prod[0], BigInt::one());
        assert!(prod[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn inflate_substitutes_power() {
        let h = HVector::new(vec![1, 0, -2, 1]);
        assert_eq!(h.inflate(2).coefficients(), &[1, 0, 0, 0, -2, 0, 1]);
        assert_eq!(h.inflate(1), h);
    }
}
