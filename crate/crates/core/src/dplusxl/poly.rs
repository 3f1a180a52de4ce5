use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, NFElement, NumberField};

/// Polynomial in X over a number field, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LPoly {
    field: Arc<NumberField>,
    coeffs: Vec<NFElement>,
}

impl LPoly {
    pub fn new(field: &Arc<NumberField>, mut coeffs: Vec<NFElement>) -> LPoly {
        while coeffs.last().is_some_and(NFElement::is_zero) {
            coeffs.pop();
        }
        LPoly { field: Arc::clone(field), coeffs }
    }

    pub fn zero(field: &Arc<NumberField>) -> LPoly {
        LPoly { field: Arc::clone(field), coeffs: Vec::new() }
    }

    pub fn constant(c: NFElement) -> LPoly {
        let field = Arc::clone(c.field());
        LPoly::new(&field, vec![c])
    }

    pub fn monomial(c: NFElement, k: usize) -> LPoly {
        let field = Arc::clone(c.field());
        let mut coeffs = vec![NFElement::zero(&field); k];
        coeffs.push(c);
        LPoly::new(&field, coeffs)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> NFElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| NFElement::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &LPoly) -> LPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        LPoly::new(&self.field, (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn neg(&self) -> LPoly {
        LPoly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &LPoly) -> LPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &LPoly) -> LPoly {
        if self.is_zero() || o.is_zero() {
            return LPoly::zero(&self.field);
        }
        let mut out = vec![NFElement::zero(&self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        LPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &NFElement) -> LPoly {
        LPoly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> LPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![NFElement::zero(&self.field); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LPoly::new(&self.field, coeffs)
    }

    /// Exact division by `X^k`.
    pub fn unshift(&self, k: usize) -> Option<LPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(LPoly::new(&self.field, self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &LPoly) -> Result<Option<LPoly>> {
        let dd = d.degree().ok_or(Error::ZeroInput("division by the zero polynomial"))?;
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let lead_inv = d.coeffs[dd].inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok(None);
        }
        let mut quot = vec![NFElement::zero(&self.field); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * dc);
            }
            quot[k] = c;
        }
        Ok(rem.iter().all(NFElement::is_zero).then(|| LPoly::new(&self.field, quot)))
    }

    pub fn eval(&self, x: &NFElement) -> NFElement {
        self.coeffs
            .iter()
            .rev()
            .fold(NFElement::zero(&self.field), |acc, c| &(&acc * x) + c)
    }
}

fn x_power(k: usize) -> String {
    if k == 1 {
        "X".into()
    } else {
        format!("X^{k}")
    }
}

/// Sign and body of the term `c·X^k`.
fn term(c: &NFElement, k: usize) -> (bool, String) {
    if let Some(q) = c.as_rational() {
        let a = q.abs();
        let body = match k {
            0 => fmt_rational(&a),
            _ if a.is_one() => x_power(k),
            _ if a.is_integer() => format!("{}*{}", a, x_power(k)),
            _ => format!("({})*{}", fmt_rational(&a), x_power(k)),
        };
        return (q.is_negative(), body);
    }
    let single = c.coords().iter().filter(|x| !x.is_zero()).count() == 1;
    let (neg, c) = match c.coords().iter().find(|x| !x.is_zero()) {
        Some(lead) if single && lead.is_negative() => (true, -c),
        _ => (false, c.clone()),
    };
    let body = match (k, single) {
        (0, _) => c.to_string(),
        (_, true) => format!("{}*{}", c, x_power(k)),
        (_, false) => format!("({})*{}", c, x_power(k)),
    };
    (neg, body)
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = term(c, k);
            match (wrote, neg) {
                (false, false) => write!(f, "{body}")?,
                (false, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, " + {body}")?,
                (true, true) => write!(f, " - {body}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
