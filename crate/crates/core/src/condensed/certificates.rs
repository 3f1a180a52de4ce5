//! Certificates that a domain is not condensed. Every variant re-verifies
//! from its stored data and reports the checks it replayed.

use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::subtle;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::ideals::lattice::integer_solve;
use crate::ideals::{
    comaximal, ideal_inverse, ideal_product, is_principal, membership, v_closure, v_coprime, IdealHandle,
};
use crate::rings::{enumerate_elements, enumerate_monomials, DomainSpec, QuadInt, RingElement};
use crate::verdict::Verdict;

/// `X ∈ (d, X)(e, X)` in `D[X]` is not subtle when `d`, `e` are comaximal nonunits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialRingWitness {
    pub base: DomainSpec,
    pub d: RingElement,
    pub e: RingElement,
    /// Bezout coefficients, `u·d + v·e = 1`.
    pub u: RingElement,
    pub v: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubtletySetting {
    InDomain { x: RingElement, i: IdealHandle, j: IdealHandle, proof: String },
    PolynomialRing(PolynomialRingWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomSetting {
    InDomain { domain: DomainSpec, a: RingElement, b: RingElement, c: RingElement },
    /// The atom is `X` in `D[X]`; `b`, `c` are constants.
    PolynomialRing { base: DomainSpec, b: RingElement, c: RingElement },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonCondensednessCertificate {
    NonSubtleElement(SubtletySetting),
    /// An atom comaximal with neither of two comaximal nonunits.
    AtomComaximalityViolation(AtomSetting),
    VCoprimeNotComaximal { domain: DomainSpec, a: RingElement, b: RingElement },
    InvertibleNonPrincipal { ideal: IdealHandle },
}

fn fail(msg: String) -> Error {
    Error::Consistency(msg)
}

fn nonunit(domain: &DomainSpec, x: &RingElement) -> Result<bool> {
    Ok(!x.is_zero() && !domain.is_unit(x)?)
}

/// Coefficient lists over `D`, lowest degree first.
fn poly_mul(domain: &DomainSpec, f: &[RingElement], g: &[RingElement]) -> Result<Vec<RingElement>> {
    let mut out = vec![domain.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = domain.add(&out[i + j], &domain.mul(a, b)?)?;
        }
    }
    Ok(out)
}

fn poly_add(domain: &DomainSpec, f: &[RingElement], g: &[RingElement]) -> Result<Vec<RingElement>> {
    let n = f.len().max(g.len());
    let zero = domain.zero();
    (0..n)
        .map(|k| domain.add(f.get(k).unwrap_or(&zero), g.get(k).unwrap_or(&zero)))
        .collect()
}

impl PolynomialRingWitness {
    /// Replays the constant-term case analysis.
    pub fn replay(&self) -> Result<Vec<String>> {
        let b = &self.base;
        let mut log = Vec::new();
        for (name, x) in [("d", &self.d), ("e", &self.e)] {
            if !nonunit(b, x)? {
                return Err(fail(format!("{name} = {x} is not a nonzero nonunit of {b}")));
            }
            log.push(format!("{name} = {x} is a nonunit of {b}"));
        }
        let one = b.add(&b.mul(&self.u, &self.d)?, &b.mul(&self.v, &self.e)?)?;
        if one != b.one() {
            return Err(fail(format!("({})({}) + ({})({}) = {one}, not 1", self.u, self.d, self.v, self.e)));
        }
        log.push(format!("({})({}) + ({})({}) = 1", self.u, self.d, self.v, self.e));
        let (z, x) = (b.zero(), b.one());
        let dx = poly_mul(b, &[self.d.clone()], &[z.clone(), x.clone()])?;
        let ex = poly_mul(b, &[z.clone(), x.clone()], &[self.e.clone()])?;
        let combo = poly_add(b, &poly_mul(b, &[self.u.clone()], &dx)?, &poly_mul(b, &[self.v.clone()], &ex)?)?;
        if combo != [z, x] {
            return Err(fail("u*(d*X) + v*(X*e) does not expand to X".into()));
        }
        log.push("X = u*(d*X) + v*(X*e) with d*X, X*e in (d, X)(e, X)".into());
        log.push("X = i*j forces deg i + deg j = 1, so one factor is a constant c".into());
        log.push(format!(
            "i = c in (d, X): c lies in ({}) and c*j_1 = 1, so {} would divide a unit",
            self.d, self.d
        ));
        log.push(format!(
            "j = c in (e, X): c lies in ({}) and c*i_1 = 1, so {} would divide a unit",
            self.e, self.e
        ));
        log.push("both cases contradict the nonunit checks, so X is not subtle".into());
        Ok(log)
    }
}

impl NonCondensednessCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            NonCondensednessCertificate::NonSubtleElement(_) => "NonSubtleElement",
            NonCondensednessCertificate::AtomComaximalityViolation(_) => "AtomComaximalityViolation",
            NonCondensednessCertificate::VCoprimeNotComaximal { .. } => "VCoprimeNotComaximal",
            NonCondensednessCertificate::InvertibleNonPrincipal { .. } => "InvertibleNonPrincipal",
        }
    }

    /// Recomputes every claim; returns the transcript of checks.
    pub fn verify(&self) -> Result<Vec<String>> {
        match self {
            NonCondensednessCertificate::NonSubtleElement(SubtletySetting::InDomain { x, i, j, .. }) => {
                if !membership(x, &ideal_product(i, j)?)? {
                    return Err(fail(format!("{x} is not in ({i})({j})")));
                }
                match subtle(x, i, j, 1)? {
                    Verdict::Fails(proof) => Ok(vec![format!("{x} lies in ({i})({j})"), proof]),
                    v => Err(fail(format!("{x} is not certified non-subtle: {}", v.label()))),
                }
            }
            NonCondensednessCertificate::NonSubtleElement(SubtletySetting::PolynomialRing(w)) => w.replay(),
            NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::InDomain { domain, a, b, c }) => {
                let mut log = Vec::new();
                if !domain.is_atom(a, 1)?.is_holds() {
                    return Err(fail(format!("{a} is not an atom")));
                }
                log.push(format!("{a} is an atom of {domain}"));
                let p = |x: &RingElement| IdealHandle::principal(domain, x);
                for x in [b, c] {
                    if !nonunit(domain, x)? {
                        return Err(fail(format!("{x} is a unit")));
                    }
                }
                if !comaximal(&p(b)?, &p(c)?)? {
                    return Err(fail(format!("({b}, {c}) is proper")));
                }
                log.push(format!("{b}, {c} are nonunits with ({b}, {c}) = D"));
                for x in [b, c] {
                    if comaximal(&p(a)?, &p(x)?)? {
                        return Err(fail(format!("({a}, {x}) = D")));
                    }
                    log.push(format!("({a}, {x}) is proper"));
                }
                Ok(log)
            }
            NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::PolynomialRing { base, b, c }) => {
                for x in [b, c] {
                    if !nonunit(base, x)? {
                        return Err(fail(format!("{x} is a unit")));
                    }
                }
                let p = |x: &RingElement| IdealHandle::principal(base, x);
                if !comaximal(&p(b)?, &p(c)?)? {
                    return Err(fail(format!("({b}, {c}) is proper")));
                }
                Ok(vec![
                    "X is an atom of D[X]: X = f*g forces a constant factor c with c*g_1 = 1".into(),
                    format!("{b}, {c} are nonunits of {base} with ({b}, {c}) = D, hence also in D[X]"),
                    format!("(X, {b}) and (X, {c}) are proper: their constant terms lie in ({b}) and ({c})"),
                ])
            }
            NonCondensednessCertificate::VCoprimeNotComaximal { domain, a, b } => {
                if !v_coprime(a, b, domain)? {
                    return Err(fail(format!("({a}, {b})_v != D")));
                }
                let pair = IdealHandle::generated(domain, &[a.clone(), b.clone()])?;
                if pair.is_unit_ideal()? {
                    return Err(fail(format!("({a}, {b}) = D")));
                }
                Ok(vec![format!("({a}, {b})_v = D"), format!("({a}, {b}) = {pair} != D")])
            }
            NonCondensednessCertificate::InvertibleNonPrincipal { ideal } => {
                let prod = ideal_product(ideal, &ideal_inverse(ideal)?)?;
                if !prod.is_unit_ideal()? {
                    return Err(fail(format!("{ideal} * {ideal}^-1 = {prod}")));
                }
                if !v_closure(&prod)?.is_unit_ideal()? {
                    return Err(fail("(I I^-1)_v != D".into()));
                }
                let why = match is_principal(ideal)? {
                    Verdict::Fails(why) => why,
                    v => return Err(fail(format!("principality of {ideal} is {}", v.label()))),
                };
                Ok(vec![
                    format!("{ideal} * {ideal}^-1 = D"),
                    "(I I^-1)_v = D".into(),
                    format!("{ideal} is not principal: {why}"),
                ])
            }
        }
    }
}

impl fmt::Display for NonCondensednessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonCondensednessCertificate::NonSubtleElement(SubtletySetting::InDomain { x, i, j, .. }) => {
                write!(f, "NonSubtleElement({x}, {i}, {j})")
            }
            NonCondensednessCertificate::NonSubtleElement(SubtletySetting::PolynomialRing(w)) => {
                write!(f, "NonSubtleElement(X, ideal({}, X), ideal({}, X)) in {}[X]", w.d, w.e, w.base)
            }
            NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::InDomain { a, b, c, .. }) => {
                write!(f, "AtomComaximalityViolation({a}, {b}, {c})")
            }
            NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::PolynomialRing { base, b, c }) => {
                write!(f, "AtomComaximalityViolation(X, {b}, {c}) in {base}[X]")
            }
            NonCondensednessCertificate::VCoprimeNotComaximal { a, b, .. } => write!(f, "VCoprimeNotComaximal({a}, {b})"),
            NonCondensednessCertificate::InvertibleNonPrincipal { ideal } => write!(f, "InvertibleNonPrincipal({ideal})"),
        }
    }
}

fn checked(cert: NonCondensednessCertificate) -> Result<NonCondensednessCertificate> {
    cert.verify()?;
    Ok(cert)
}

fn no_comaximal_pair(domain: &DomainSpec, why: &str) -> Error {
    Error::Precondition(format!("no comaximal nonunit pair in {domain}: {why}"))
}

/// An atom `a` must be comaximal with `b` or `c` whenever `(b, c) = D` in a
/// condensed domain; `Fails` carries the violation.
pub fn lemma_a_certificate(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    domain: &DomainSpec,
) -> Result<Verdict<String, NonCondensednessCertificate>> {
    if a.is_zero() || !domain.is_atom(a, 1)?.is_holds() {
        return Err(Error::Precondition(format!("{a} is not a certified atom")));
    }
    for x in [b, c] {
        if !nonunit(domain, x)? {
            return Err(Error::Precondition(format!("{x} is not a nonzero nonunit")));
        }
    }
    let p = |x: &RingElement| IdealHandle::principal(domain, x);
    if !comaximal(&p(b)?, &p(c)?)? {
        return Err(match domain {
            DomainSpec::SemigroupRing { .. } => no_comaximal_pair(domain, "the ring is local with maximal ideal (t^2, t^3)"),
            _ => Error::Precondition(format!("({b}) and ({c}) are not comaximal")),
        });
    }
    for x in [b, c] {
        if comaximal(&p(a)?, &p(x)?)? {
            return Ok(Verdict::Holds(format!("({a}, {x}) = D: no violation")));
        }
    }
    let cert = NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::InDomain {
        domain: domain.clone(),
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
    });
    Ok(Verdict::Fails(checked(cert)?))
}

/// The violation with atom `X` in `D[X]`.
pub fn lemma_a_polynomial_certificate(base: &DomainSpec, b: &RingElement, c: &RingElement) -> Result<NonCondensednessCertificate> {
    bezout(base, b, c)?;
    checked(NonCondensednessCertificate::AtomComaximalityViolation(AtomSetting::PolynomialRing {
        base: base.clone(),
        b: b.clone(),
        c: c.clone(),
    }))
}

/// `(u, v)` with `u·d + v·e = 1` for nonunits `d`, `e`.
fn bezout(base: &DomainSpec, d: &RingElement, e: &RingElement) -> Result<(RingElement, RingElement)> {
    if base.is_field() {
        return Err(no_comaximal_pair(base, "every nonzero element is a unit"));
    }
    for x in [d, e] {
        base.check(x)?;
        if !nonunit(base, x)? {
            return Err(Error::Precondition(format!("{x} is not a nonzero nonunit of {base}")));
        }
    }
    let (u, v) = match (base, d, e) {
        (DomainSpec::Integers, RingElement::Int(a), RingElement::Int(b)) => {
            let g = a.extended_gcd(b);
            if !g.gcd.is_one() {
                return Err(no_comaximal_pair(base, &format!("gcd({a}, {b}) = {}", g.gcd)));
            }
            (RingElement::Int(g.x), RingElement::Int(g.y))
        }
        (DomainSpec::QuadraticOrder { d: dd }, RingElement::Quad(a), RingElement::Quad(b)) => {
            let w = QuadInt::new(0, 1);
            let rows: Vec<Vec<BigInt>> = [a.clone(), a.mul(&w, dd), b.clone(), b.mul(&w, dd)]
                .into_iter()
                .map(|q| vec![q.a, q.b])
                .collect();
            let Some(y) = integer_solve(&rows, &[BigInt::one(), BigInt::zero()]) else {
                return Err(no_comaximal_pair(base, &format!("({a}, {b}) is proper")));
            };
            (
                RingElement::Quad(QuadInt::new(y[0].clone(), y[1].clone())),
                RingElement::Quad(QuadInt::new(y[2].clone(), y[3].clone())),
            )
        }
        (DomainSpec::SemigroupRing { .. }, _, _) => {
            return Err(no_comaximal_pair(base, "the ring is local with maximal ideal (t^2, t^3)"));
        }
        _ => return Err(Error::DomainMismatch(format!("{d}, {e} in {base}"))),
    };
    Ok((u, v))
}

/// Non-subtle `X ∈ (d, X)(e, X)` in `D[X]` for comaximal nonunits `d`, `e`:
/// a polynomial ring over a non-field is never condensed.
pub fn polynomial_ring_witness(base: &DomainSpec, d: &RingElement, e: &RingElement) -> Result<NonCondensednessCertificate> {
    let (u, v) = bezout(base, d, e)?;
    checked(NonCondensednessCertificate::NonSubtleElement(SubtletySetting::PolynomialRing(PolynomialRingWitness {
        base: base.clone(),
        d: d.clone(),
        e: e.clone(),
        u,
        v,
    })))
}

fn sample_nonunits(domain: &DomainSpec, height: u64) -> Result<Vec<RingElement>> {
    Ok(match domain {
        DomainSpec::SemigroupRing { trunc } => enumerate_monomials(*trunc).collect(),
        DomainSpec::FieldDomain(_) => Vec::new(),
        _ => {
            let mut out = Vec::new();
            for x in enumerate_elements(domain, height) {
                if !domain.is_unit(&x)? {
                    out.push(x);
                }
            }
            out
        }
    })
}

/// Scale-invariant key: `(a, b)` and `(ga, gb)` share v-closure behaviour,
/// invertibility and principality.
fn scan_key(ideal: &IdealHandle) -> Result<IdealHandle> {
    Ok(match ideal {
        IdealHandle::Lattice(i) => IdealHandle::Lattice(i.primitive_part()?),
        other => other.clone(),
    })
}

/// Scans 2-generated ideals `(a, b)` of nonunits up to `height` for
/// v-coprime non-comaximal pairs and invertible non-principal ideals. One
/// certificate of the second kind is kept per ideal class.
pub fn lemma_a1_certificates(domain: &DomainSpec, height: u64, strategy: Strategy) -> Result<Vec<NonCondensednessCertificate>> {
    let elems = sample_nonunits(domain, height)?;
    let pairs: Vec<(usize, usize)> = (0..elems.len()).flat_map(|i| (i + 1..elems.len()).map(move |j| (i, j))).collect();
    let ideals = strategy.map(&pairs, |&(i, j)| {
        let ideal = IdealHandle::generated(domain, &[elems[i].clone(), elems[j].clone()])?;
        Ok((scan_key(&ideal)?, ideal))
    })?;
    let mut distinct: IndexMap<IdealHandle, ((usize, usize), IdealHandle)> = IndexMap::new();
    for (&pair, (key, ideal)) in pairs.iter().zip(ideals) {
        if matches!(key, IdealHandle::Explicit(_)) || key.is_unit_ideal()? {
            continue;
        }
        distinct.entry(key).or_insert((pair, ideal));
    }
    let candidates: Vec<((usize, usize), IdealHandle)> = distinct.into_values().collect();
    let found = strategy.map(&candidates, |((i, j), ideal)| {
        let mut out = Vec::new();
        if v_closure(ideal)?.is_unit_ideal()? {
            out.push(NonCondensednessCertificate::VCoprimeNotComaximal {
                domain: domain.clone(),
                a: elems[*i].clone(),
                b: elems[*j].clone(),
            });
        }
        let invertible = ideal_product(ideal, &ideal_inverse(ideal)?)?.is_unit_ideal()?;
        if invertible && is_principal(ideal)?.is_fails() {
            out.push(NonCondensednessCertificate::InvertibleNonPrincipal { ideal: ideal.clone() });
        }
        Ok(out)
    })?;
    let mut kept: Vec<NonCondensednessCertificate> = Vec::new();
    let mut classes: Vec<IdealHandle> = Vec::new();
    for cert in found.into_iter().flatten() {
        if let NonCondensednessCertificate::InvertibleNonPrincipal { ideal } = &cert {
            let mut seen = false;
            for c in &classes {
                if is_principal(&ideal_product(ideal, &ideal_inverse(c)?)?)?.is_holds() {
                    seen = true;
                    break;
                }
            }
            if seen {
                continue;
            }
            classes.push(ideal.clone());
        }
        kept.push(checked(cert)?);
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> RingElement {
        RingElement::Int(n.into())
    }

    fn q(a: i64, b: i64) -> RingElement {
        RingElement::Quad(QuadInt::new(a, b))
    }

    #[test]
    fn lemma_a_examples() {
        let d = DomainSpec::Integers;
        assert!(lemma_a_certificate(&z(2), &z(3), &z(5), &d).unwrap().is_holds());
        let cert = lemma_a_polynomial_certificate(&d, &z(2), &z(3)).unwrap();
        assert_eq!(cert.kind(), "AtomComaximalityViolation");
        let sgr = DomainSpec::semigroup(24).unwrap();
        let t = |e| sgr.monomial(e).unwrap();
        let err = lemma_a_certificate(&t(2), &t(2), &t(3), &sgr).unwrap_err();
        assert!(err.to_string().contains("no comaximal nonunit pair"));
    }

    #[test]
    fn polynomial_ring_examples() {
        let d = DomainSpec::Integers;
        for (a, b) in [(2, 3), (3, 5)] {
            let cert = polynomial_ring_witness(&d, &z(a), &z(b)).unwrap();
            assert_eq!(cert.to_string(), format!("NonSubtleElement(X, ideal({a}, X), ideal({b}, X)) in Z[X]"));
            assert!(cert.verify().unwrap().len() >= 5);
        }
        assert!(polynomial_ring_witness(&d, &z(4), &z(6)).is_err());
        let k = DomainSpec::quadratic(-5).unwrap();
        polynomial_ring_witness(&k, &q(2, 0), &q(3, 0)).unwrap();
        let sgr = DomainSpec::semigroup(24).unwrap();
        let t = |e| sgr.monomial(e).unwrap();
        let err = polynomial_ring_witness(&sgr, &t(2), &t(3)).unwrap_err();
        assert!(err.to_string().contains("no comaximal nonunit pair"));
    }

    #[test]
    fn lemma_a1_examples() {
        assert!(lemma_a1_certificates(&DomainSpec::Integers, 20, Strategy::default()).unwrap().is_empty());
        let k = DomainSpec::quadratic(-5).unwrap();
        let certs = lemma_a1_certificates(&k, 2, Strategy::default()).unwrap();
        let names: Vec<String> = certs.iter().map(|c| c.to_string()).collect();
        assert_eq!(names, vec!["InvertibleNonPrincipal(ideal(2, 1+w))"]);
        let sgr = DomainSpec::semigroup(24).unwrap();
        assert!(lemma_a1_certificates(&sgr, 1, Strategy::default()).unwrap().is_empty());
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let k = DomainSpec::quadratic(-5).unwrap();
        let principal = IdealHandle::generated(&k, &[q(2, 0), q(4, 0)]).unwrap();
        assert!(NonCondensednessCertificate::InvertibleNonPrincipal { ideal: principal }.verify().is_err());
        let d = DomainSpec::Integers;
        let bad = PolynomialRingWitness { base: d.clone(), d: z(2), e: z(3), u: z(1), v: z(1) };
        assert!(bad.replay().is_err());
        let v = NonCondensednessCertificate::VCoprimeNotComaximal { domain: d, a: z(2), b: z(3) };
        assert!(v.verify().is_err());
    }
}
