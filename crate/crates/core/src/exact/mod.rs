//! Arbitrary-precision exact scalars, polynomials, and dense matrices.
//!
//! The ground ring for the whole crate. Scalars are [`Integer`] and
//! [`Rational`] (always in lowest terms, positive denominator); polynomials
//! and matrices are dense with rational entries.

mod matrix;
mod poly;

pub use matrix::ExactMatrix;
pub use poly::Poly;

use num_traits::{One, Zero};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by construction.
pub type Rational = num_rational::BigRational;

/// Shorthand for an [`Integer`] from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Shorthand for a [`Rational`] from a machine integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// Binomial coefficient `n` choose `k`.
///
/// Returns 0 whenever `k < 0` or `k > n`, so sums over binomials can run over
/// any index range without guards. The upper index is a natural number by
/// type; all the entry formulas in this crate only ever need natural upper
/// indices.
pub fn binom(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        // Exact at every step: the running product of j consecutive
        // descending factors is divisible by j!.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
