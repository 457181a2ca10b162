//! Reference tables shared by the integration tests.
//! Each entry is `(residue, coefficients from the top degree down)`.
#![allow(dead_code)]

use hilbert_quasi::RationalPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

/// `K[x1..x5]` graded by `[1, 2, 3, 4, 6]`.
pub const RING_12346: &[(usize, &str)] = &[
    (0, "1/3456 1/108 5/48 1/2 1"),
    (1, "1/3456 1/108 19/192 43/108 1705/3456"),
    (2, "1/3456 1/108 5/48 25/54 125/216"),
    (3, "1/3456 1/108 19/192 5/12 75/128"),
    (4, "1/3456 1/108 5/48 13/27 20/27"),
    (5, "1/3456 1/108 19/192 41/108 1001/3456"),
    (6, "1/3456 1/108 5/48 1/2 7/8"),
    (7, "1/3456 1/108 19/192 43/108 1705/3456"),
    (8, "1/3456 1/108 5/48 25/54 19/27"),
    (9, "1/3456 1/108 19/192 5/12 75/128"),
    (10, "1/3456 1/108 5/48 13/27 133/216"),
    (11, "1/3456 1/108 19/192 41/108 1001/3456"),
];

/// The same ring modulo `(x1^3, x2*x3)`.
pub const QUOTIENT_12346: &[(usize, &str)] = &[
    (0, "1/16 1/2 1"),
    (1, "1/24 1/3 5/8"),
    (2, "1/16 1/2 3/4"),
    (3, "1/24 1/3 5/8"),
    (4, "1/16 1/2 1"),
    (5, "1/24 1/3 7/24"),
    (6, "1/16 1/2 3/4"),
    (7, "1/24 1/3 5/8"),
    (8, "1/16 1/2 1"),
    (9, "1/24 1/3 5/8"),
    (10, "1/16 1/2 3/4"),
    (11, "1/24 1/3 7/24"),
];

/// `[2, 4, 8, 16, 32]`, even residues only; odd residues vanish.
pub const RING_2_TO_32: &[(usize, &str)] = &[
    (0, "1/393216 1/3072 43/3072 11/48 1"),
    (2, "1/393216 5/16384 595/49152 725/4096 4875/8192"),
    (4, "1/393216 1/3072 169/12288 167/768 455/512"),
    (6, "1/393216 5/16384 583/49152 681/4096 4147/8192"),
    (8, "1/393216 1/3072 43/3072 11/48 35/32"),
    (10, "1/393216 5/16384 595/49152 725/4096 5643/8192"),
    (12, "1/393216 1/3072 169/12288 161/768 455/512"),
    (14, "1/393216 5/16384 583/49152 649/4096 4275/8192"),
    (16, "1/393216 1/3072 43/3072 11/48 5/4"),
    (18, "1/393216 5/16384 595/49152 725/4096 6923/8192"),
    (20, "1/393216 1/3072 169/12288 167/768 583/512"),
    (22, "1/393216 5/16384 583/49152 681/4096 6195/8192"),
    (24, "1/393216 1/3072 43/3072 11/48 35/32"),
    (26, "1/393216 5/16384 595/49152 725/4096 5643/8192"),
    (28, "1/393216 1/3072 169/12288 161/768 327/512"),
    (30, "1/393216 5/16384 583/49152 649/4096 2227/8192"),
];

/// Parses `"1/16 1/2 1"` (descending degree) into a polynomial.
pub fn poly(desc: &str) -> RationalPolynomial {
    let mut coeffs: Vec<BigRational> = desc
        .split_whitespace()
        .map(|t| match t.split_once('/') {
            Some((n, d)) => BigRational::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap()),
            None => BigRational::from_integer(t.parse::<BigInt>().unwrap()),
        })
        .collect();
    coeffs.reverse();
    RationalPolynomial::new(coeffs)
}
