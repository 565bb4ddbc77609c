//! Exact scalar types shared by every algebra in the crate.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(v: Int) -> Scalar {
    BigRational::from_integer(v)
}

pub fn is_integral(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * BigInt::from(k))
}

/// `n!` for small `n` as a machine integer.
pub fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    ((n - k + 1)..=n).fold(Int::one(), |acc, v| acc * BigInt::from(v))
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `a`, `-a` or `a/b` into an exact rational.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        BigInt::from_str(text).ok().map(BigRational::from_integer)
    }
}

/// Returns the value as `i64` when it fits and is integral.
pub fn scalar_to_i64(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        s.numer().to_i64()
    } else {
        None
    }
}

pub fn sign(len: usize) -> i64 {
    if len.is_even() {
        1
    } else {
        -1
    }
}
