use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{rank, solve_unique};
use super::poly::{rational_roots, QPoly};
use super::{exact_sqrt, fmt_rational, positive_divisors, Rational};
use crate::error::{Error, Result};

pub const MAX_FIELD_DEGREE: usize = 4;

/// Q(θ) for a monic irreducible integer polynomial of degree 1..=4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    minpoly: Vec<BigInt>,
    /// θ^k in the power basis for k in 0..2n-1.
    powers: Vec<Vec<Rational>>,
}

impl NumberField {
    /// Builds the field from ascending monic integer coefficients, checking
    /// irreducibility (rational-root test, plus the quadratic-split test for
    /// quartics).
    pub fn new(minpoly: Vec<BigInt>) -> Result<Arc<NumberField>> {
        let n = minpoly.len().saturating_sub(1);
        if n == 0 || n > MAX_FIELD_DEGREE {
            return Err(Error::InvalidField(format!(
                "degree {n} outside 1..={MAX_FIELD_DEGREE}"
            )));
        }
        if !minpoly[n].is_one() {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        if n >= 2 {
            let q = QPoly::new(minpoly.iter().cloned().map(Rational::from_integer).collect());
            if let Some(r) = rational_roots(&q)?.first() {
                return Err(Error::InvalidField(format!(
                    "reducible: rational root {}",
                    fmt_rational(r)
                )));
            }
            if n == 4 {
                if let Some((p, q, r, s)) = quadratic_split(&minpoly) {
                    return Err(Error::InvalidField(format!(
                        "reducible: (x^2 + {p}x + {q})(x^2 + {r}x + {s})"
                    )));
                }
            }
        }
        let powers = reduction_table(&minpoly, n);
        Ok(Arc::new(NumberField { minpoly, powers }))
    }

    pub fn from_ints(minpoly: &[i64]) -> Result<Arc<NumberField>> {
        NumberField::new(minpoly.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Q itself, presented as Q(θ) with θ = 0.
    pub fn rationals() -> Arc<NumberField> {
        NumberField::from_ints(&[0, 1]).expect("x is irreducible")
    }

    /// Q(√d) via x^2 - d.
    pub fn quadratic(d: i64) -> Result<Arc<NumberField>> {
        NumberField::from_ints(&[-d, 0, 1])
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// `x^2 - d` fields report `Some(d)`.
    pub fn pure_quadratic_radicand(&self) -> Option<BigInt> {
        (self.degree() == 2 && self.minpoly[1].is_zero()).then(|| -self.minpoly[0].clone())
    }

    fn reduce(&self, raw: &[Rational]) -> Vec<Rational> {
        let n = self.degree();
        let mut out = vec![Rational::zero(); n];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                *o += c * p;
            }
        }
        out
    }

    pub fn minpoly_string(&self) -> String {
        let terms: Vec<Rational> = self.minpoly.iter().cloned().map(Rational::from_integer).collect();
        QPoly::new(terms).to_string().replace('t', "x")
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.minpoly == [BigInt::zero(), BigInt::one()] {
            write!(f, "Q")
        } else {
            write!(f, "NumField({})", self.minpoly_string().replace(' ', ""))
        }
    }
}

fn reduction_table(minpoly: &[BigInt], n: usize) -> Vec<Vec<Rational>> {
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = Rational::one();
        table.push(e);
    }
    // θ^n = -(c_0 + c_1 θ + ... + c_{n-1} θ^{n-1})
    for k in n..2 * n {
        let prev = &table[k - 1];
        let mut next = vec![Rational::zero(); n];
        for i in 1..n {
            next[i] = prev[i - 1].clone();
        }
        let top = prev[n - 1].clone();
        for i in 0..n {
            next[i] -= &top * Rational::from_integer(minpoly[i].clone());
        }
        table.push(next);
    }
    table
}

/// Finds a monic integer factorisation of a monic quartic into quadratics.
fn quadratic_split(c: &[BigInt]) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
    let (d, a1, a2, a3) = (&c[0], &c[1], &c[2], &c[3]);
    if d.is_zero() {
        return None;
    }
    for q0 in positive_divisors(d) {
        for q in [q0.clone(), -q0] {
            let s = d / &q;
            // p + r = a3, p r = a2 - q - s
            let prod = a2 - &q - &s;
            let disc = a3 * a3 - BigInt::from(4) * &prod;
            let Some(root) = exact_sqrt(&disc) else { continue };
            for sign in [1, -1] {
                let num: BigInt = a3 + &root * sign;
                if !num.is_even() {
                    continue;
                }
                let p = num / 2;
                let r = a3 - &p;
                if &p * &s + &q * &r == *a1 {
                    return Some((p, q, r, s));
                }
            }
        }
    }
    None
}

/// Element of a number field in power-basis coordinates.
#[derive(Clone, Debug)]
pub struct NFElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl PartialEq for NFElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && *self.field == *other.field
    }
}

impl Eq for NFElement {}

impl Hash for NFElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl NFElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<Rational>) -> Result<NFElement> {
        if coords.len() != field.degree() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                field.degree(),
                coords.len()
            )));
        }
        Ok(NFElement { field: Arc::clone(field), coords })
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> NFElement {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = q;
        NFElement { field: Arc::clone(field), coords }
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> NFElement {
        NFElement::from_rational(field, Rational::from_integer(n.into()))
    }

    pub fn zero(field: &Arc<NumberField>) -> NFElement {
        NFElement::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> NFElement {
        NFElement::from_rational(field, Rational::one())
    }

    /// θ itself; in Q this is the root of the degree-one minimal polynomial.
    pub fn generator(field: &Arc<NumberField>) -> NFElement {
        let raw = [Rational::zero(), Rational::one()];
        let coords = field.reduce(&raw);
        NFElement { field: Arc::clone(field), coords }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    /// True when every coordinate is an integer.
    pub fn has_integral_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn same_field(&self, other: &NFElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn scale(&self, q: &Rational) -> NFElement {
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> NFElement {
        let mut acc = NFElement::one(&self.field);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Matrix of `x -> self * x`; column j is `self * θ^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.field.degree();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut raw = vec![Rational::zero(); 2 * n];
                for (i, c) in self.coords.iter().enumerate() {
                    raw[i + j] = c.clone();
                }
                self.field.reduce(&raw)
            })
            .collect();
        (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// Field norm, the determinant of the multiplication matrix.
    pub fn norm(&self) -> Rational {
        determinant(self.multiplication_matrix())
    }

    pub fn inverse(&self) -> Result<NFElement> {
        nf_inverse(self)
    }

    pub fn checked_mul(&self, other: &NFElement) -> Result<NFElement> {
        nf_mul(self, other)
    }

    pub fn checked_div(&self, other: &NFElement) -> Result<NFElement> {
        self.same_field(other)?;
        Ok(self * &other.inverse()?)
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Product reduced modulo the minimal polynomial.
pub fn nf_mul(a: &NFElement, b: &NFElement) -> Result<NFElement> {
    a.same_field(b)?;
    let n = a.field.degree();
    let mut raw = vec![Rational::zero(); 2 * n];
    for (i, x) in a.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coords.iter().enumerate() {
            raw[i + j] += x * y;
        }
    }
    Ok(NFElement { field: Arc::clone(&a.field), coords: a.field.reduce(&raw) })
}

/// Inverse by solving the multiplication-matrix system `M_a x = 1`.
pub fn nf_inverse(a: &NFElement) -> Result<NFElement> {
    if a.is_zero() {
        return Err(Error::ZeroInput("inverse of zero"));
    }
    let m = a.multiplication_matrix();
    let n = m.len();
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect();
    let mut e = vec![Rational::zero(); n];
    e[0] = Rational::one();
    let x = solve_unique(&cols, &e)
        .ok_or_else(|| Error::Consistency("multiplication matrix of a nonzero element is singular".into()))?;
    Ok(NFElement { field: Arc::clone(&a.field), coords: x })
}

/// True iff the coordinate vectors are linearly independent over Q.
pub fn linearly_independent(vs: &[NFElement]) -> Result<bool> {
    let first = vs
        .first()
        .ok_or_else(|| Error::Precondition("linearly_independent needs a non-empty list".into()))?;
    for v in vs {
        first.same_field(v)?;
    }
    let rows: Vec<Vec<Rational>> = vs.iter().map(|v| v.coords.clone()).collect();
    Ok(rank(&rows) == vs.len())
}

impl Add for &NFElement {
    type Output = NFElement;
    fn add(self, rhs: &NFElement) -> NFElement {
        self.same_field(rhs).expect("field mismatch in addition");
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &NFElement {
    type Output = NFElement;
    fn sub(self, rhs: &NFElement) -> NFElement {
        self.same_field(rhs).expect("field mismatch in subtraction");
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &NFElement {
    type Output = NFElement;
    fn mul(self, rhs: &NFElement) -> NFElement {
        nf_mul(self, rhs).expect("field mismatch in multiplication")
    }
}

impl Neg for &NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if wrote {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let coeff = if a.denom().is_one() {
                a.numer().to_string()
            } else {
                format!("({})", fmt_rational(&a))
            };
            match k {
                0 => write!(f, "{}", fmt_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        write!(f, "th")?;
                    } else {
                        write!(f, "th^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn el(field: &Arc<NumberField>, cs: &[(i64, i64)]) -> NFElement {
        NFElement::new(field, cs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn sqrt2_products() {
        let k = NumberField::quadratic(2).unwrap();
        let th = NFElement::generator(&k);
        assert_eq!(&th * &th, NFElement::from_int(&k, 2));
        let a = el(&k, &[(1, 1), (1, 1)]);
        let b = el(&k, &[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, NFElement::from_int(&k, -1));
    }

    #[test]
    fn quartic_reduction() {
        let k = NumberField::from_ints(&[-2, 0, 0, 0, 1]).unwrap();
        let th = NFElement::generator(&k);
        // θ^2 · θ^3 = θ^5 = 2θ
        assert_eq!(&th.pow(2) * &th.pow(3), th.scale(&rat(2, 1)));
    }

    #[test]
    fn inverses() {
        let k = NumberField::quadratic(2).unwrap();
        assert_eq!(
            NFElement::from_int(&k, 2).inverse().unwrap(),
            NFElement::from_rational(&k, rat(1, 2))
        );
        // (1 + θ)^{-1} = θ - 1
        let a = el(&k, &[(1, 1), (1, 1)]);
        assert_eq!(a.inverse().unwrap(), el(&k, &[(-1, 1), (1, 1)]));
        let c = NumberField::from_ints(&[-2, 0, 0, 1]).unwrap();
        let th = NFElement::generator(&c);
        assert_eq!(th.inverse().unwrap(), el(&c, &[(0, 1), (0, 1), (1, 2)]));
        assert!(matches!(NFElement::zero(&k).inverse(), Err(Error::ZeroInput(_))));
    }

    #[test]
    fn independence() {
        let k = NumberField::quadratic(2).unwrap();
        let one = NFElement::one(&k);
        let th = NFElement::generator(&k);
        assert!(linearly_independent(&[one.clone(), th.clone()]).unwrap());
        assert!(!linearly_independent(&[one.clone(), th.clone(), &one + &th]).unwrap());
        let q = NumberField::from_ints(&[-2, 0, 0, 0, 1]).unwrap();
        let t = NFElement::generator(&q);
        let basis: Vec<_> = (0..4).map(|k| t.pow(k)).collect();
        assert!(linearly_independent(&basis).unwrap());
        assert!(linearly_independent(&[]).is_err());
        assert_eq!(linearly_independent(&[one, t]), Err(Error::FieldMismatch));
    }

    #[test]
    fn irreducibility_checks() {
        assert!(NumberField::from_ints(&[-4, 0, 1]).is_err());
        assert!(NumberField::from_ints(&[1, 0, 0, 0, 1]).is_ok());
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
        assert!(NumberField::from_ints(&[4, 0, 0, 0, 1]).is_err());
        // x^4 - 5x^2 + 6 = (x^2 - 2)(x^2 - 3)
        assert!(NumberField::from_ints(&[6, 0, -5, 0, 1]).is_err());
        assert!(NumberField::from_ints(&[-1, -1, 0, 0, 1]).is_ok());
        assert!(NumberField::from_ints(&[-2, 0, 0, 0, 0, 1]).is_err());
        assert!(NumberField::from_ints(&[-2, 0, 2]).is_err());
    }

    #[test]
    fn norms() {
        let k = NumberField::quadratic(-5).unwrap();
        let a = el(&k, &[(2, 1), (1, 1)]);
        assert_eq!(a.norm(), rat(9, 1));
        assert_eq!(k.to_string(), "NumField(x^2+5)");
        assert_eq!(NumberField::rationals().to_string(), "Q");
        assert_eq!(a.to_string(), "2 + th");
    }
}
