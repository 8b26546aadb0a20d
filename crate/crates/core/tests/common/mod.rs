#![allow(dead_code)]

pub mod diagrams;

use num_bigint::BigInt;
use num_traits::One;
use qhmin::root_system::Family;

/// Every supported space up to rank 7 that is cheap to enumerate.
pub const SPACES: &[&str] = &[
    "A1/P1", "A2/P1", "A2/P2", "A3/P1", "A3/P2", "A4/P2", "A5/P3", "B2/P1", "B3/P1", "B4/P1",
    "C2/P2", "C3/P3", "C4/P4", "D4/P1", "D4/P3", "D4/P4", "D5/P1", "D5/P5", "D6/P6", "E6/P1",
    "E6/P6", "E7/P7",
];

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_plus_t_pow(i: usize) -> Vec<u64> {
    let mut p = vec![0; i + 1];
    p[0] = 1;
    p[i] = 1;
    p
}

/// Gaussian binomial `[n choose k]_t` via Pascal's rule.
fn gaussian(n: usize, k: usize) -> Vec<u64> {
    if k == 0 || k == n {
        return vec![1];
    }
    // [n,k] = [n-1,k-1] + t^k [n-1,k]
    let a = gaussian(n - 1, k - 1);
    let b = gaussian(n - 1, k);
    let mut out = vec![0; (k * (n - k)) + 1];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + k] += x;
    }
    out
}

/// Betti numbers from the classical Poincaré polynomials.
pub fn betti(family: Family) -> Vec<u64> {
    match family {
        Family::Grassmannian { k, n } => gaussian(n, k),
        Family::Quadric { m } => {
            let mut b = vec![1; m + 1];
            if m % 2 == 0 {
                b[m / 2] = 2;
            }
            b
        }
        Family::Lagrangian { n } => (1..=n).fold(vec![1], |p, i| poly_mul(&p, &one_plus_t_pow(i))),
        Family::Spinor { n } => (1..n).fold(vec![1], |p, i| poly_mul(&p, &one_plus_t_pow(i))),
        Family::CayleyPlane => vec![1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1],
        Family::Freudenthal => vec![
            1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1,
        ],
    }
}

/// Degree in the minimal embedding from the classical product formulas.
/// `None` for the exceptional families.
pub fn degree(family: Family) -> Option<BigInt> {
    let ratio = |num: BigInt, den: BigInt| {
        assert!((&num % &den) == BigInt::from(0));
        num / den
    };
    Some(match family {
        Family::Grassmannian { k, n } => {
            let (mut num, mut den) = (factorial(k * (n - k)), BigInt::one());
            for i in 0..k {
                num *= factorial(i);
                den *= factorial(n - k + i);
            }
            ratio(num, den)
        }
        Family::Quadric { .. } => BigInt::from(2),
        Family::Lagrangian { n } => {
            let (mut num, mut den) = (factorial(n * (n + 1) / 2) << (n * (n - 1) / 2), BigInt::one());
            for i in 1..=n {
                num *= factorial(i - 1);
                den *= factorial(2 * i - 1);
            }
            ratio(num, den)
        }
        Family::Spinor { n } => {
            let (mut num, mut den) = (factorial(n * (n - 1) / 2), BigInt::one());
            for i in 0..n - 1 {
                num *= factorial(i);
                den *= factorial(2 * i + 1);
            }
            ratio(num, den)
        }
        Family::CayleyPlane | Family::Freudenthal => return None,
    })
}
