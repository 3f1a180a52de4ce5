//! Text grammar for rings, elements, ideals and D + X·L[X] objects.
//!
//! Element literals are arithmetic expressions in the ring's variable
//! (`w` for Z[√d], `t` for the semigroup ring, `th` for number fields, `X`
//! for polynomial rings) built from integers, `+ - * / ^` and parentheses;
//! juxtaposition multiplies, so `(1/2)X` and `2w` are accepted.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dplusxl::{CanonicalRIdeal, DxlSpec, LPoly};
use crate::error::{Error, Result};
use crate::exactnum::{NFElement, NumberField, Rational};
use crate::ideals::{FractionalIdeal, IdealHandle};
use crate::rings::{DomainSpec, QuadInt, RingElement, Series};

/// Any ring the front end can name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Domain(DomainSpec),
    /// `D[X]`, used only through constant-coefficient certificates.
    Polynomial(DomainSpec),
    Dxl(DxlSpec),
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(perr(format!("unexpected character '{c}' in '{s}'")));
        }
    }
    Ok(out)
}

/// Polynomial in the named variables: exponent vector -> coefficient.
type MPoly = BTreeMap<Vec<u32>, Rational>;

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
    src: &'a str,
}

fn mp_const(vars: usize, c: Rational) -> MPoly {
    let mut m = MPoly::new();
    if !c.is_zero() {
        m.insert(vec![0; vars], c);
    }
    m
}

fn mp_add(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = a.clone();
    for (k, v) in b {
        let e = out.entry(k.clone()).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            out.remove(k);
        }
    }
    out
}

fn mp_neg(a: &MPoly) -> MPoly {
    a.iter().map(|(k, v)| (k.clone(), -v)).collect()
}

fn mp_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            out = mp_add(&out, &BTreeMap::from([(k, va * vb)]));
        }
    }
    out
}

fn mp_as_const(a: &MPoly) -> Option<Rational> {
    match a.len() {
        0 => Some(Rational::zero()),
        1 => a.iter().next().filter(|(k, _)| k.iter().all(|&e| e == 0)).map(|(_, v)| v.clone()),
        _ => None,
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = mp_add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = mp_add(&acc, &mp_neg(&self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mp_mul(&acc, &self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                let d = mp_as_const(&d).filter(|c| !c.is_zero()).ok_or_else(|| {
                    perr(format!("division by a non-constant or zero in '{}'", self.src))
                })?;
                acc = mp_mul(&acc, &mp_const(self.vars.len(), d.recip()));
            } else if self.starts_factor() {
                acc = mp_mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(mp_neg(&self.unary()?));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => n.to_u32().ok_or_else(|| perr("exponent too large"))?,
            _ => return Err(perr(format!("expected an exponent in '{}'", self.src))),
        };
        self.pos += 1;
        let mut out = mp_const(self.vars.len(), Rational::one());
        for _ in 0..e {
            out = mp_mul(&out, &base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<MPoly> {
        let n = self.vars.len();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(mp_const(n, Rational::from_integer(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self.vars.iter().position(|v| *v == name).ok_or_else(|| {
                    perr(format!("unknown variable '{name}' in '{}' (expected one of {:?})", self.src, self.vars))
                })?;
                let mut k = vec![0; n];
                k[idx] = 1;
                Ok(BTreeMap::from([(k, Rational::one())]))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(perr(format!("missing ')' in '{}'", self.src)));
                }
                Ok(e)
            }
            _ => Err(perr(format!("unexpected end or symbol in '{}'", self.src))),
        }
    }
}

fn parse_mpoly(src: &str, vars: &[&str]) -> Result<MPoly> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, vars, src };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(perr(format!("trailing input in '{src}'")));
    }
    Ok(e)
}

/// Splits on commas outside parentheses.
pub fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// `name(inner)` -> `inner`.
fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    let rest = s.trim().strip_prefix(name)?.trim_start();
    rest.strip_prefix('(')?.strip_suffix(')')
}

fn univariate(m: &MPoly, idx: usize) -> Vec<Rational> {
    let deg = m.keys().map(|k| k[idx] as usize).max().unwrap_or(0);
    let mut out = vec![Rational::zero(); deg + 1];
    for (k, v) in m {
        out[k[idx] as usize] += v;
    }
    out
}

fn integer(q: &Rational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(perr(format!("{what} must be an integer, got {q}")))
    }
}

/// `Q` or `NumField(<monic integer polynomial in x>)`.
pub fn parse_number_field(s: &str) -> Result<Arc<NumberField>> {
    let s = s.trim();
    if s == "Q" {
        return Ok(NumberField::rationals());
    }
    let inner = call(s, "NumField").ok_or_else(|| perr(format!("expected Q or NumField(...), got '{s}'")))?;
    let m = parse_mpoly(inner, &["x"])?;
    let coeffs = univariate(&m, 0);
    let ints = coeffs.iter().map(|c| integer(c, "minimal polynomial coefficient")).collect::<Result<Vec<_>>>()?;
    NumberField::new(ints)
}

/// `Z`, `Q`, `Zsqrt(d)`, `SGR(2,3;trunc=n)` (or `SGR(2,3)` with `default_trunc`), `NumField(...)`.
pub fn parse_domain(s: &str, default_trunc: usize) -> Result<DomainSpec> {
    let s = s.trim();
    match s {
        "Z" => return Ok(DomainSpec::Integers),
        "Q" => return Ok(DomainSpec::rationals()),
        _ => {}
    }
    if let Some(inner) = call(s, "Zsqrt") {
        let d = mp_as_const(&parse_mpoly(inner, &[])?).ok_or_else(|| perr("Zsqrt needs an integer"))?;
        return DomainSpec::quadratic(integer(&d, "Zsqrt radicand")?);
    }
    if let Some(inner) = call(s, "SGR") {
        let parts = split_top(inner, ';');
        let gens: String = parts[0].chars().filter(|c| !c.is_whitespace()).collect();
        if gens != "2,3" {
            return Err(perr(format!("only the semigroup <2,3> is supported, got <{gens}>")));
        }
        let mut trunc = default_trunc;
        for p in &parts[1..] {
            let (k, v) = p.split_once('=').ok_or_else(|| perr(format!("expected key=value, got '{p}'")))?;
            if k.trim() != "trunc" {
                return Err(perr(format!("unknown SGR option '{}'", k.trim())));
            }
            trunc = v.trim().parse().map_err(|_| perr(format!("bad truncation '{v}'")))?;
        }
        return DomainSpec::semigroup(trunc);
    }
    if s.starts_with("NumField") {
        return Ok(DomainSpec::FieldDomain(parse_number_field(s)?));
    }
    Err(perr(format!("unknown ring '{s}'")))
}

/// `DXL(D=...; L=...)`.
pub fn parse_dxl(s: &str) -> Result<DxlSpec> {
    let inner = call(s, "DXL").ok_or_else(|| perr(format!("expected DXL(D=...; L=...), got '{s}'")))?;
    let (mut d, mut l) = (None, None);
    for part in split_top(inner, ';') {
        let (k, v) = part.split_once('=').ok_or_else(|| perr(format!("expected key=value, got '{part}'")))?;
        match k.trim() {
            "D" => d = Some(parse_domain(v, 0)?),
            "L" => l = Some(parse_number_field(v)?),
            other => return Err(perr(format!("unknown DXL key '{other}'"))),
        }
    }
    let d = d.ok_or_else(|| perr("DXL needs D="))?;
    let l = l.ok_or_else(|| perr("DXL needs L="))?;
    DxlSpec::new(d, l)
}

/// Any ring: a domain, `D[X]`, or `DXL(...)`.
pub fn parse_ring(s: &str, default_trunc: usize) -> Result<RingSpec> {
    let s = s.trim();
    if s.starts_with("DXL") {
        return Ok(RingSpec::Dxl(parse_dxl(s)?));
    }
    if let Some(base) = s.strip_suffix("[X]") {
        return Ok(RingSpec::Polynomial(parse_domain(base, default_trunc)?));
    }
    Ok(RingSpec::Domain(parse_domain(s, default_trunc)?))
}

fn nf_from_univariate(field: &Arc<NumberField>, coeffs: &[Rational]) -> NFElement {
    let th = NFElement::generator(field);
    coeffs
        .iter()
        .enumerate()
        .fold(NFElement::zero(field), |acc, (k, c)| &acc + &th.pow(k as u32).scale(c))
}

/// Element of a domain.
pub fn parse_element(domain: &DomainSpec, s: &str) -> Result<RingElement> {
    let x = match domain {
        DomainSpec::Integers => {
            let c = mp_as_const(&parse_mpoly(s, &[])?).expect("no variables");
            RingElement::Int(integer(&c, "element of Z")?)
        }
        DomainSpec::QuadraticOrder { d } => {
            let m = parse_mpoly(s, &["w"])?;
            let (mut a, mut b) = (Rational::zero(), Rational::zero());
            for (k, v) in &m {
                let e = k[0];
                let scale = Rational::from_integer(num_traits::pow(d.clone(), (e / 2) as usize));
                if e % 2 == 0 {
                    a += v * scale;
                } else {
                    b += v * scale;
                }
            }
            RingElement::Quad(QuadInt::new(integer(&a, "coordinate")?, integer(&b, "coordinate")?))
        }
        DomainSpec::SemigroupRing { trunc } => {
            let coeffs = univariate(&parse_mpoly(s, &["t"])?, 0);
            RingElement::Series(Series::new(coeffs, *trunc)?)
        }
        DomainSpec::FieldDomain(f) => {
            let coeffs = univariate(&parse_mpoly(s, &["th"])?, 0);
            RingElement::Field(nf_from_univariate(f, &coeffs))
        }
    };
    domain.check(&x)?;
    Ok(x)
}

/// Comma-separated elements.
pub fn parse_element_list(domain: &DomainSpec, s: &str) -> Result<Vec<RingElement>> {
    let items = split_top(s, ',');
    if items.is_empty() {
        return Err(perr("empty element list"));
    }
    items.iter().map(|t| parse_element(domain, t)).collect()
}

/// `ideal(g, ...)`, `frac(ideal(...), den)` or a bare generator list.
pub fn parse_ideal(domain: &DomainSpec, s: &str) -> Result<IdealHandle> {
    let s = s.trim();
    if let Some(inner) = call(s, "frac") {
        let parts = split_top(inner, ',');
        let [num, den] = parts.as_slice() else {
            return Err(perr("frac(ideal(...), den) takes two arguments"));
        };
        let IdealHandle::Lattice(i) = parse_ideal(domain, num)? else {
            return Err(Error::Unsupported(format!("fractional ideals over {domain}")));
        };
        let den = mp_as_const(&parse_mpoly(den, &[])?).expect("no variables");
        if den.is_zero() || !den.is_positive() {
            return Err(perr("frac denominator must be positive"));
        }
        let mut v = vec![Rational::zero(); i.basis()[0].len()];
        v[0] = den.recip();
        return Ok(IdealHandle::Lattice(FractionalIdeal::scale(&i, &v)?));
    }
    let gens = match call(s, "ideal") {
        Some(inner) => parse_element_list(domain, inner)?,
        None => parse_element_list(domain, s)?,
    };
    IdealHandle::generated(domain, &gens)
}

/// Element of L for a D + X·L[X] spec (`th`; `w` is accepted over Z[√d]).
pub fn parse_l_element(spec: &DxlSpec, s: &str) -> Result<NFElement> {
    let vars: &[&str] = &["th", "w"];
    let m = parse_mpoly(s, vars)?;
    let alias = matches!(spec.base(), DomainSpec::QuadraticOrder { .. });
    if !alias && m.keys().any(|k| k[1] > 0) {
        return Err(perr(format!("'w' is only available over Zsqrt(d); use 'th' in '{s}'")));
    }
    let merged: MPoly = m.into_iter().fold(MPoly::new(), |acc, (k, v)| {
        mp_add(&acc, &BTreeMap::from([(vec![k[0] + k[1], 0], v)]))
    });
    Ok(nf_from_univariate(spec.field(), &univariate(&merged, 0)))
}

/// Polynomial over L in `X` (coefficients may use `th`), not checked against D.
pub fn parse_lpoly(spec: &DxlSpec, s: &str) -> Result<LPoly> {
    let m = parse_mpoly(s, &["X", "th", "w"])?;
    let alias = matches!(spec.base(), DomainSpec::QuadraticOrder { .. });
    if !alias && m.keys().any(|k| k[2] > 0) {
        return Err(perr(format!("'w' is only available over Zsqrt(d); use 'th' in '{s}'")));
    }
    let deg = m.keys().map(|k| k[0] as usize).max().unwrap_or(0);
    let mut per_x: Vec<Vec<Rational>> = vec![Vec::new(); deg + 1];
    for (k, v) in &m {
        let e = (k[1] + k[2]) as usize;
        let row = &mut per_x[k[0] as usize];
        if row.len() <= e {
            row.resize(e + 1, Rational::zero());
        }
        row[e] += v;
    }
    let coeffs = per_x.iter().map(|c| nf_from_univariate(spec.field(), c)).collect();
    Ok(LPoly::new(spec.field(), coeffs))
}

/// Element of R = D + X·L[X].
pub fn parse_r_element(spec: &DxlSpec, s: &str) -> Result<LPoly> {
    let x = parse_lpoly(spec, s)?;
    spec.check(&x)?;
    Ok(x)
}

/// `ideal0(g, ...)` (generators in D), `sub(r; g, ...)` (generators in L), `full(r)`.
pub fn parse_r_ideal(spec: &DxlSpec, s: &str) -> Result<CanonicalRIdeal> {
    let s = s.trim();
    if let Some(inner) = call(s, "ideal0") {
        let gens = parse_element_list(spec.base(), inner)?;
        return CanonicalRIdeal::from_base_ideal(spec, 0, &gens);
    }
    if let Some(inner) = call(s, "full") {
        let r = inner.trim().parse().map_err(|_| perr(format!("bad exponent in '{s}'")))?;
        return CanonicalRIdeal::full(spec, r);
    }
    if let Some(inner) = call(s, "sub") {
        let (r, gens) = inner.split_once(';').ok_or_else(|| perr("sub(r; g, ...) needs ';'"))?;
        let r = r.trim().parse().map_err(|_| perr(format!("bad exponent in '{s}'")))?;
        let gens = split_top(gens, ',').iter().map(|g| parse_l_element(spec, g)).collect::<Result<Vec<_>>>()?;
        return CanonicalRIdeal::module(spec, r, &gens);
    }
    Err(perr(format!("expected ideal0(...), sub(r; ...) or full(r), got '{s}'")))
}

/// Shared by tests: an integer coefficient vector as a field element.
pub fn nf_from_ints(field: &Arc<NumberField>, cs: &[i64]) -> NFElement {
    let mut coords: Vec<Rational> = cs.iter().map(|&c| Rational::from_integer(c.into())).collect();
    coords.resize(field.degree(), Rational::zero());
    NFElement::new(field, coords).expect("coordinate count matches degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_round_trip() {
        for s in ["Z", "Q", "Zsqrt(-5)", "SGR(2,3;trunc=24)", "NumField(x^2-2)"] {
            assert_eq!(parse_domain(s, 24).unwrap().to_string(), s);
        }
        assert_eq!(parse_domain("SGR(2,3)", 12).unwrap().trunc(), Some(12));
        assert!(parse_domain("SGR(2,5)", 12).is_err());
        assert!(parse_domain("NumField(x^2-4)", 12).is_err());
        assert!(matches!(parse_ring("Z[X]", 24).unwrap(), RingSpec::Polynomial(DomainSpec::Integers)));
        let d = parse_dxl("DXL(D=Q; L=NumField(x^2-2))").unwrap();
        assert_eq!(d.to_string(), "DXL(D=Q;L=NumField(x^2-2))");
    }

    #[test]
    fn elements() {
        let k = parse_domain("Zsqrt(-5)", 24).unwrap();
        assert_eq!(parse_element(&k, "1+w").unwrap().to_string(), "1+w");
        assert_eq!(parse_element(&k, "w^2").unwrap().to_string(), "-5");
        assert_eq!(parse_element(&k, "(1+w)(1-w)").unwrap().to_string(), "6");
        assert!(parse_element(&k, "w/2").is_err());
        let s = parse_domain("SGR(2,3;trunc=12)", 24).unwrap();
        assert_eq!(parse_element(&s, "t^4 + t^5").unwrap().to_string(), "t^4 + t^5");
        assert!(parse_element(&s, "t").is_err());
        assert!(parse_element(&s, "t^13").is_err());
        assert_eq!(parse_element_list(&s, "t^2, t^3").unwrap().len(), 2);
        assert!(parse_element(&DomainSpec::Integers, "1/2").is_err());
        assert!(parse_element(&DomainSpec::Integers, "2 +").is_err());
    }

    #[test]
    fn ideals_and_r_objects() {
        let k = parse_domain("Zsqrt(-5)", 24).unwrap();
        assert_eq!(parse_ideal(&k, "ideal(2, 1+w)").unwrap().to_string(), "ideal(2, 1+w)");
        let f = parse_ideal(&DomainSpec::Integers, "frac(ideal(3), 2)").unwrap();
        assert!(!f.is_integral());
        let spec = parse_dxl("DXL(D=Z;L=Q)").unwrap();
        let x = parse_r_element(&spec, "6 + (1/2)X + X^2").unwrap();
        assert_eq!(x.to_string(), "6 + (1/2)*X + X^2");
        assert!(parse_r_element(&spec, "1/2 + X").is_err());
        let a = parse_r_ideal(&spec, "sub(1; 1/2, 1/3)").unwrap();
        assert_eq!(a.display(&spec).to_string(), "sub(1; 1/6)");
        assert!(parse_r_ideal(&spec, "full(1)").unwrap().is_full());
        let q2 = parse_dxl("DXL(D=Q; L=NumField(x^2-2))").unwrap();
        let y = parse_r_element(&q2, "6 + (1/2)X + X^2*th").unwrap();
        assert_eq!(y.to_string(), "6 + (1/2)*X + th*X^2");
    }
}
