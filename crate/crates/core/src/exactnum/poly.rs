use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, fmt_rational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        QPoly::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer polynomial with the same roots: denominators cleared, content removed.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{}", fmt_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", fmt_rational(&a))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// All rational roots of a nonzero polynomial, ascending, without multiplicity.
///
/// Roots of the monic integer transform are integers, so they are isolated by
/// Sturm-sequence bisection over half-integer endpoints; every root returned
/// is confirmed by exact evaluation.
pub fn rational_roots(p: &QPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("rational_roots of the zero polynomial"));
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        let shift = q.coeffs.iter().take_while(|c| c.is_zero()).count();
        q = QPoly::new(q.coeffs[shift..].to_vec());
    }
    if q.degree().unwrap_or(0) > 0 {
        let g = q.gcd(&q.derivative());
        let squarefree = q.div_rem(&g).0;
        let ints = squarefree.primitive_integer();
        let d = ints.len() - 1;
        if d > 0 {
            let lead = ints[d].clone();
            // y = lead * x turns the polynomial monic with integer coefficients.
            let mut monic = Vec::with_capacity(d + 1);
            for (i, c) in ints.iter().enumerate().take(d) {
                monic.push(c * num_traits::pow(lead.clone(), d - 1 - i));
            }
            monic.push(BigInt::one());
            let monic = QPoly::new(monic.into_iter().map(Rational::from_integer).collect());
            for y in integer_roots_monic(&monic) {
                let x = Rational::new(y, lead.clone());
                if p.eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn sturm_sequence(p: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[QPoly], x: &Rational) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for s in seq {
        let v = s.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

fn integer_roots_monic(p: &QPoly) -> Vec<BigInt> {
    let bound: BigInt = p
        .coeffs
        .iter()
        .map(|c| c.abs().to_integer())
        .max()
        .unwrap_or_default()
        + 1;
    let seq = sturm_sequence(p);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let at = |n: &BigInt, up: bool| {
        let x = Rational::from_integer(n.clone());
        if up {
            x + &half
        } else {
            x - &half
        }
    };
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &at(&lo, false)) - sign_changes(&seq, &at(&hi, true));
        if count == 0 {
            continue;
        }
        if lo == hi {
            if p.eval(&Rational::from_integer(lo.clone())).is_zero() {
                out.push(lo);
            }
            continue;
        }
        let mid: BigInt = num_integer::Integer::div_floor(&(&lo + &hi), &BigInt::from(2));
        stack.push((&mid + 1, hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn roots_examples() {
        assert_eq!(
            rational_roots(&QPoly::from_ints(&[-1, 0, 1])).unwrap(),
            vec![rat(-1, 1), rat(1, 1)]
        );
        assert_eq!(
            rational_roots(&QPoly::from_ints(&[-3, 2])).unwrap(),
            vec![rat(3, 2)]
        );
        assert!(rational_roots(&QPoly::from_ints(&[-2, 0, 1])).unwrap().is_empty());
        assert!(matches!(
            rational_roots(&QPoly::zero()),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn roots_with_multiplicity_and_zero() {
        // t^2 (2t - 1)^3 (t + 4)
        let a = QPoly::from_ints(&[0, 0, 1]);
        let b = QPoly::from_ints(&[-1, 2]);
        let c = QPoly::from_ints(&[4, 1]);
        let p = &(&a * &(&(&b * &b) * &b)) * &c;
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![rat(-4, 1), rat(0, 1), rat(1, 2)]
        );
    }

    #[test]
    fn roots_rational_coefficients() {
        // (t - 2/3)(t + 5/7)(t^2 + 1)
        let p = &(&QPoly::new(vec![rat(-2, 3), rat(1, 1)]) * &QPoly::new(vec![rat(5, 7), rat(1, 1)]))
            * &QPoly::from_ints(&[1, 0, 1]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-5, 7), rat(2, 3)]);
    }

    #[test]
    fn gcd_and_division() {
        let p = QPoly::from_ints(&[-1, 0, 1]);
        let q = QPoly::from_ints(&[1, 1]);
        assert_eq!(p.gcd(&q), QPoly::from_ints(&[1, 1]));
        let (quo, rem) = p.div_rem(&q);
        assert_eq!(quo, QPoly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_ints(&[-1, 0, 2]).to_string(), "2*t^2 - 1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
