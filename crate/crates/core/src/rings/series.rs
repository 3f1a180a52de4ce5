//! Truncated elements of K[[t², t³]] with K = Q.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, Rational};

/// Power series in `t` with zero `t¹` coefficient, stored up to degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

/// Exponents of ⟨2,3⟩ are exactly the integers other than 1.
pub fn in_semigroup(e: i64) -> bool {
    e == 0 || e >= 2
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

impl Series {
    pub fn new(coeffs: Vec<Rational>, trunc: usize) -> Result<Series> {
        let coeffs = trim(coeffs);
        if coeffs.get(1).is_some_and(|c| !c.is_zero()) {
            return Err(Error::InvalidElement("semigroup ring element has a t^1 term".into()));
        }
        if coeffs.len() > trunc + 1 {
            return Err(Error::InvalidElement(format!("degree exceeds truncation {trunc}")));
        }
        Ok(Series { coeffs })
    }

    /// Drops everything above `trunc`.
    pub(crate) fn truncated(mut coeffs: Vec<Rational>, trunc: usize) -> Series {
        coeffs.truncate(trunc + 1);
        Series { coeffs: trim(coeffs) }
    }

    pub fn zero() -> Series {
        Series { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Series {
        Series { coeffs: trim(vec![c]) }
    }

    pub fn monomial(e: usize) -> Series {
        debug_assert!(in_semigroup(e as i64));
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Series { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `c · t^e` if the series has a single term.
    pub fn as_monomial(&self) -> Option<(usize, &Rational)> {
        let e = self.order()?;
        (e + 1 == self.coeffs.len()).then(|| (e, &self.coeffs[e]))
    }

    pub fn add(&self, o: &Series) -> Series {
        let n = self.coeffs.len().max(o.coeffs.len());
        Series {
            coeffs: trim((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect()),
        }
    }

    pub fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Series) -> Series {
        self.add(&o.neg())
    }

    pub fn scale(&self, q: &Rational) -> Series {
        Series { coeffs: trim(self.coeffs.iter().map(|c| c * q).collect()) }
    }

    pub fn mul(&self, o: &Series, trunc: usize) -> Series {
        if self.is_zero() || o.is_zero() {
            return Series::zero();
        }
        let n = (self.coeffs.len() + o.coeffs.len() - 1).min(trunc + 1);
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Series { coeffs: trim(out) }
    }

    /// Quotient `self / d` in the truncated ring, validated by re-multiplication.
    pub fn div_exact(&self, d: &Series, trunc: usize) -> Result<Option<Series>> {
        let m = d.order().ok_or(Error::ZeroInput("divisor"))?;
        let Some(n) = self.order() else {
            return Ok(Some(Series::zero()));
        };
        if n < m {
            return Ok(None);
        }
        let shift = n - m;
        if shift == 1 {
            return Ok(None);
        }
        // q = t^shift · (x / t^n) / (d / t^m), known modulo t^(trunc - m + 1).
        let len = (trunc - m + 1).saturating_sub(shift);
        let u: Vec<Rational> = d.coeffs[m..].to_vec();
        let v: Vec<Rational> = self.coeffs[n..].to_vec();
        let get = |s: &[Rational], i: usize| s.get(i).cloned().unwrap_or_else(Rational::zero);
        let inv0 = u[0].recip();
        let mut w: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = get(&v, k);
            for i in 1..=k {
                acc -= get(&u, i) * &w[k - i];
            }
            w.push(acc * &inv0);
        }
        let mut q = vec![Rational::zero(); shift];
        q.extend(w);
        if q.get(1).is_some_and(|c| !c.is_zero()) {
            return Ok(None);
        }
        let q = Series::truncated(q, trunc);
        if &d.mul(&q, trunc) != self {
            return Ok(None);
        }
        Ok(Some(q))
    }

    /// Splits off the leading monomial: `self = t^n · v` with `v(0) = 1`,
    /// returning `(n, leading coefficient, v)`. `v` is only valid up to degree `trunc - n`.
    pub fn normalize(&self) -> Option<(usize, Rational, Vec<Rational>)> {
        let n = self.order()?;
        let lead = self.coeffs[n].clone();
        let inv = lead.recip();
        let v = self.coeffs[n..].iter().map(|c| c * &inv).collect();
        Some((n, lead, v))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            if k == 0 {
                write!(f, "{}", fmt_rational(&a))?;
                continue;
            }
            if !a.is_one() {
                if a.denom().is_one() {
                    write!(f, "{}*", a.numer())?;
                } else {
                    write!(f, "({})*", fmt_rational(&a))?;
                }
            }
            write!(f, "t^{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn s(cs: &[i64]) -> Series {
        Series::new(cs.iter().map(|&c| rat(c, 1)).collect(), 24).unwrap()
    }

    #[test]
    fn rejects_linear_term() {
        assert!(Series::new(vec![rat(0, 1), rat(1, 1)], 24).is_err());
        assert!(Series::new(vec![rat(1, 1)], 24).is_ok());
    }

    #[test]
    fn monomial_division() {
        let q = Series::monomial(5).div_exact(&Series::monomial(2), 24).unwrap();
        assert_eq!(q, Some(Series::monomial(3)));
        assert_eq!(Series::monomial(3).div_exact(&Series::monomial(2), 24).unwrap(), None);
        assert_eq!(Series::monomial(2).div_exact(&Series::monomial(3), 24).unwrap(), None);
    }

    #[test]
    fn unit_inverse_truncates() {
        // 1 / (1 - t^2) = 1 + t^2 + t^4 + ...
        let one = s(&[1]);
        let u = s(&[1, 0, -1]);
        let q = one.div_exact(&u, 12).unwrap().unwrap();
        assert_eq!(q.degree(), Some(12));
        assert!(q.coeffs().iter().step_by(2).all(|c| c == &rat(1, 1)));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(s(&[0, 0, 1, -2]).to_string(), "t^2 - 2*t^3");
        assert_eq!(s(&[1]).to_string(), "1");
        assert_eq!(Series::zero().to_string(), "0");
    }
}
