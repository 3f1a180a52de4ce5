//! Exact scalars: big integers, rationals, univariate rational polynomials,
//! small dense linear algebra over Q, and number fields Q(θ) of degree 1..=4.
//!
//! Nothing in this module (or the crate) touches floating point.

mod field;
mod linalg;
mod poly;

pub use field::{linearly_independent, NFElement, NumberField, MAX_FIELD_DEGREE};
pub use linalg::{left_kernel, rank, rref, solve_unique, QMatrix};
pub use poly::{rational_roots, QPoly};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. `BigRational` keeps `den > 0` and `gcd(num, den) = 1`,
/// with zero stored as `0/1`.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Largest `r` with `r * r <= n` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    n.sqrt()
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Positive divisors of a nonzero integer, ascending, by trial division.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Trial-division primality for `|n|`.
pub fn is_prime(n: &BigInt) -> bool {
    let n = n.abs();
    if n < BigInt::from(2) {
        return false;
    }
    smallest_factor(&n) == n
}

/// Smallest prime factor of `|n| >= 2`.
pub fn smallest_factor(n: &BigInt) -> BigInt {
    let n = n.abs();
    let two = BigInt::from(2);
    if n.is_even() {
        return two;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            return d;
        }
        d += 2;
    }
    n
}
