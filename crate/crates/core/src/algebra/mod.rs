//! Exact integer helpers and graded polynomials.
//!
//! All quantities are unbounded [`ExactInt`]s; nothing in this crate rounds.

mod poly;

pub use poly::GradedPolynomial;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every Euler characteristic.
pub type ExactInt = BigInt;

/// `x (x-1) ... (x-k+1)`, with the empty product equal to 1.
pub fn falling_factorial(x: &ExactInt, k: usize) -> ExactInt {
    let mut acc = ExactInt::one();
    let mut term = x.clone();
    for _ in 0..k {
        if term.is_zero() {
            return ExactInt::zero();
        }
        acc *= &term;
        term -= 1;
    }
    acc
}

pub fn factorial(n: usize) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Generalized binomial `a (a-1) ... (a-k+1) / k!`, defined for every integer `a`.
///
/// `binomial_gen(chi + n - 1, n)` is the coefficient of `q^n` in `(1-q)^(-chi)`,
/// which extends `C(chi+n-1, chi-1)` to `chi <= 0`.
pub fn binomial_gen(a: &ExactInt, k: usize) -> ExactInt {
    let num = falling_factorial(a, k);
    let den = factorial(k);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "falling factorial not divisible by k!");
    q
}

/// Exact quotient `num / den`, failing if the division leaves a remainder.
pub fn exact_div(num: &ExactInt, den: &ExactInt, context: &str) -> Result<ExactInt> {
    if den.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "{context}: division by zero"
        )));
    }
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InternalConsistency(format!(
            "{context}: {num}/{den} is not an integer"
        )))
    }
}

/// Converts an averaged rational back to an integer, or reports the failure.
pub fn rational_to_int(value: &BigRational, context: &str) -> Result<ExactInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::InternalConsistency(format!(
            "{context}: {value} is not an integer"
        )))
    }
}

/// `x^k` for a small non-negative exponent.
pub fn pow(x: &ExactInt, k: usize) -> ExactInt {
    num_traits::pow(x.clone(), k)
}

/// `(-1)^k` as an integer.
pub fn sign(k: usize) -> ExactInt {
    if k.is_multiple_of(2) {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}
