//! Checkers for condensed pairs, subtle and primal elements, the ∗-property
//! and the atom-prime criterion, plus non-condensedness certificates.

mod certificates;
mod transfer;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::exec::Strategy;
use crate::ideals::{
    coords_element, ideal_intersect, ideal_product, is_principal, membership, v_closure, v_coprime, IdealHandle,
    MonomialIdeal,
};
use crate::rings::{coefficient_vectors, enumerate_elements, in_semigroup, quadratic, DomainSpec, RingElement, Series};
use crate::verdict::{SearchBound, Verdict};

pub use transfer::{conductor_transfer, conductor_transfer_with, FactorOracle};
pub use certificates::{
    lemma_a1_certificates, lemma_a_certificate, lemma_a_polynomial_certificate, polynomial_ring_witness,
    AtomSetting, NonCondensednessCertificate, PolynomialRingWitness, SubtletySetting,
};

/// `x = i · j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub i: RingElement,
    pub j: RingElement,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * ({})", self.i, self.j)
    }
}

/// An element of `IJ` with no factorisation `i·j`, and why the search was complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSubtle {
    pub x: RingElement,
    pub proof: String,
}

fn require_bound(bound: u64) -> Result<()> {
    if bound == 0 {
        return Err(Error::Precondition("search bound must be at least 1".into()));
    }
    Ok(())
}

fn series(x: &RingElement) -> Result<&Series> {
    x.as_series()
        .ok_or_else(|| Error::DomainMismatch(format!("{x} is not a semigroup ring element")))
}

fn monomial_element(domain: &DomainSpec, e: i64) -> Result<RingElement> {
    let trunc = domain.trunc().expect("semigroup ring");
    if e < 0 || e as usize > trunc {
        return Err(Error::Precondition(format!("t^{e} is outside truncation {trunc}")));
    }
    domain.monomial(e as usize)
}

/// Decides whether `x ∈ IJ` factors as `x = i·j` with `i ∈ I`, `j ∈ J`.
///
/// Complete over Z and Z[√d] (divisors up to units are enumerated by norm)
/// and for monomial ideals of the semigroup ring; `Unknown` otherwise.
pub fn subtle(x: &RingElement, i: &IdealHandle, j: &IdealHandle, bound: u64) -> Result<Verdict<Split, String>> {
    require_bound(bound)?;
    let domain = i.domain();
    if !i.is_integral() || !j.is_integral() {
        return Err(Error::Precondition("subtle elements are defined for integral ideals".into()));
    }
    if !membership(x, &ideal_product(i, j)?)? {
        return Err(Error::Precondition(format!("{x} is not in ({i})({j})")));
    }
    if x.is_zero() {
        return Ok(Verdict::Holds(Split { i: domain.zero(), j: domain.zero() }));
    }
    match (i, j) {
        (IdealHandle::Lattice(_), IdealHandle::Lattice(_)) => lattice_subtle(x, i, j, &domain),
        (IdealHandle::Monomial { ideal: a, .. }, IdealHandle::Monomial { ideal: b, .. }) => {
            monomial_subtle(x, a, b, &domain)
        }
        _ => Ok(Verdict::unknown(bound, "no complete factor search for ideals with non-monomial generators")),
    }
}

fn lattice_subtle(x: &RingElement, i: &IdealHandle, j: &IdealHandle, domain: &DomainSpec) -> Result<Verdict<Split, String>> {
    let Some(classes) = domain.divisor_classes(x)? else {
        return Ok(Verdict::unknown(quadratic::PELL_SEARCH_CAP, "fundamental unit not found"));
    };
    // Ideals absorb units, so one representative per associate class suffices.
    for r in &classes {
        if !membership(r, i)? {
            continue;
        }
        let q = domain
            .divides(r, x)?
            .ok_or_else(|| Error::Consistency(format!("divisor class {r} does not divide {x}")))?;
        if membership(&q, j)? {
            return Ok(Verdict::Holds(Split { i: r.clone(), j: q }));
        }
    }
    Ok(Verdict::Fails(format!(
        "none of the {} divisor classes r of {x} has r in I and {x}/r in J",
        classes.len()
    )))
}

/// Write `x = c·t^n·v` with `v(0) = 1`. A factor pair has orders `p + q = n`
/// with `p ∈ E_I`, `q ∈ E_J`; the `t^{n+1}` coefficient `v₁` must be carried
/// by a factor whose ideal contains the next exponent, unless it is zero.
/// Higher coefficients are always free since `E + 2, E + 3 ⊆ E`.
fn monomial_subtle(
    x: &RingElement,
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    domain: &DomainSpec,
) -> Result<Verdict<Split, String>> {
    let trunc = domain.trunc().expect("semigroup ring");
    let (n, _, v) = series(x)?.normalize().expect("nonzero");
    let v1 = v.get(1).cloned().unwrap_or_else(Rational::zero);
    let n = n as i64;
    for p in 0..=n {
        let q = n - p;
        if !a.contains_exponent(p) || !b.contains_exponent(q) {
            continue;
        }
        let i = if v1.is_zero() || b.contains_exponent(q + 1) {
            monomial_element(domain, p)?
        } else if a.contains_exponent(p + 1) {
            let mut c = vec![Rational::zero(); p as usize + 2];
            c[p as usize] = Rational::from_integer(1.into());
            c[p as usize + 1] = v1.clone();
            RingElement::Series(Series::new(c, trunc)?)
        } else {
            continue;
        };
        let j = domain
            .divides(&i, x)?
            .ok_or_else(|| Error::Consistency(format!("{i} does not divide {x}")))?;
        if !a.contains_series(series(&i)?) || !b.contains_series(series(&j)?) {
            return Err(Error::Consistency(format!("split {i} * {j} leaves the ideals")));
        }
        return Ok(Verdict::Holds(Split { i, j }));
    }
    Ok(Verdict::Fails(format!(
        "order {n} has no split p + q with t^p in {a}, t^q in {b} able to carry the t^{} coefficient {}",
        n + 1,
        crate::exactnum::fmt_rational(&v1)
    )))
}

enum Probe {
    NonSubtle(NonSubtle),
    Undecided(SearchBound),
}

/// Looks for a non-subtle element of `IJ`.
///
/// A principal factor proves the pair condensed. For monomial ideals of
/// the semigroup ring the orders that can fail are bounded, so exhausting
/// them also proves `Holds`. Lattice pairs are sampled by coefficient height.
pub fn condensed_pair(i: &IdealHandle, j: &IdealHandle, bound: u64, strategy: Strategy) -> Result<Verdict<String, NonSubtle>> {
    require_bound(bound)?;
    let prod = ideal_product(i, j)?;
    for (name, h) in [("I", i), ("J", j)] {
        if let Verdict::Holds(g) = is_principal(h)? {
            return Ok(Verdict::Holds(format!("{name} = ({g}) is principal, so x = {g} * (x/{g})")));
        }
    }
    let (samples, exhaustive) = match (&prod, i, j) {
        (IdealHandle::Lattice(p), _, _) => {
            let basis = p.basis();
            let domain = p.domain();
            let xs = coefficient_vectors(basis.len(), bound)
                .map(|c| {
                    let v: Vec<Rational> = (0..basis[0].len())
                        .map(|k| basis.iter().zip(&c).map(|(b, &ci)| &b[k] * Rational::from_integer(ci.into())).sum())
                        .collect();
                    coords_element(domain, &v).expect("integral ideal")
                })
                .collect::<Vec<_>>();
            (xs, None)
        }
        (IdealHandle::Monomial { trunc, ideal: m }, IdealHandle::Monomial { ideal: a, .. }, IdealHandle::Monomial { ideal: b, .. }) => {
            let top = a.min_exponent() + b.min_exponent() + 3;
            if top + 1 > *trunc as i64 {
                return Ok(Verdict::unknown(*trunc as u64, format!("truncation below order {}", top + 1)));
            }
            let domain = prod.domain();
            let mut xs = Vec::new();
            for n in m.min_exponent()..=top {
                if !m.contains_exponent(n) {
                    continue;
                }
                xs.push(monomial_element(&domain, n)?);
                if m.contains_exponent(n + 1) {
                    xs.push(domain.add(&monomial_element(&domain, n)?, &monomial_element(&domain, n + 1)?)?);
                }
            }
            (xs, Some(top))
        }
        _ => return Ok(Verdict::unknown(bound, "no sampler for ideals with non-monomial generators")),
    };
    let hit = strategy.find_first(&samples, |x| {
        Ok(match subtle(x, i, j, bound)? {
            Verdict::Holds(_) => None,
            Verdict::Fails(proof) => Some(Probe::NonSubtle(NonSubtle { x: x.clone(), proof })),
            Verdict::Unknown(b) => Some(Probe::Undecided(b)),
        })
    })?;
    Ok(match (hit, exhaustive) {
        (Some(Probe::NonSubtle(w)), _) => Verdict::Fails(w),
        (Some(Probe::Undecided(b)), _) => Verdict::Unknown(b),
        (None, Some(top)) => Verdict::Holds(format!(
            "all sampled x subtle: every order n <= {top} of IJ checked with and without a t^(n+1) term; \
             higher orders split with the t^(n+1) term carried by the I factor"
        )),
        (None, None) => Verdict::unknown(bound, format!("all {} sampled x subtle", samples.len())),
    })
}

/// `(∩(aᵢ))(∩(bⱼ)) ≠ ∩(aᵢbⱼ)`, with an element of the right side not on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarFailure {
    pub lhs: IdealHandle,
    pub rhs: IdealHandle,
    pub witness: RingElement,
}

fn intersect_principal(domain: &DomainSpec, xs: &[RingElement]) -> Result<IdealHandle> {
    let mut acc: Option<IdealHandle> = None;
    for x in xs {
        if x.is_zero() {
            return Err(Error::ZeroInput("star_property element"));
        }
        let p = IdealHandle::principal(domain, x)?;
        acc = Some(match acc {
            None => p,
            Some(a) => ideal_intersect(&a, &p)?,
        });
    }
    acc.ok_or_else(|| Error::Precondition("star_property needs non-empty lists".into()))
}

/// Tests `(∩(aᵢ))(∩(bⱼ)) = ∩(aᵢbⱼ)`; `Holds` carries the common ideal.
pub fn star_property(as_: &[RingElement], bs: &[RingElement], domain: &DomainSpec) -> Result<Verdict<IdealHandle, StarFailure>> {
    let lhs = ideal_product(&intersect_principal(domain, as_)?, &intersect_principal(domain, bs)?)?;
    let mut prods = Vec::new();
    for a in as_ {
        for b in bs {
            prods.push(domain.mul(a, b)?);
        }
    }
    let rhs = intersect_principal(domain, &prods)?;
    if !rhs.contains_ideal(&lhs)? {
        return Err(Error::Consistency(format!("{lhs} is not contained in {rhs}")));
    }
    if lhs.equals(&rhs)? {
        return Ok(Verdict::Holds(rhs));
    }
    let witness = match (&lhs, &rhs) {
        (IdealHandle::Monomial { ideal: l, .. }, IdealHandle::Monomial { ideal: r, .. }) => {
            let e = (r.min_exponent()..r.min_exponent() + 4)
                .find(|&e| r.contains_exponent(e) && !l.contains_exponent(e))
                .ok_or_else(|| Error::Consistency("no exponent separates the two sides".into()))?;
            monomial_element(domain, e)?
        }
        _ => {
            let mut found = None;
            for g in rhs.generator_elements()? {
                if !membership(&g, &lhs)? {
                    found = Some(g);
                    break;
                }
            }
            found.ok_or_else(|| Error::Consistency("no generator separates the two sides".into()))?
        }
    };
    Ok(Verdict::Fails(StarFailure { lhs, rhs, witness }))
}

/// `x | yz` but no `x = r·s` with `r | y`, `s | z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalFailure {
    pub y: RingElement,
    pub z: RingElement,
    pub proof: String,
}

/// Orders of a monomial semigroup ring element `c·t^n`.
fn monomial_order(x: &RingElement) -> Option<i64> {
    x.as_series().and_then(|s| s.as_monomial()).map(|(n, _)| n as i64)
}

fn sgr_split_exponent(n: i64, a: i64, b: i64) -> Option<i64> {
    (0..=n).find(|&k| in_semigroup(k) && in_semigroup(n - k) && in_semigroup(a - k) && in_semigroup(b - (n - k)))
}

/// A factorisation `x = r·s` with `r | y`, `s | z`, if one exists.
///
/// Requires `x | yz`. Complete over Z and Z[√d] via divisor classes, and for
/// monomial `x`, `y`, `z` in the semigroup ring, where a non-monomial divisor
/// `t^k·u` divides strictly less than `t^k` does.
pub fn primal_split(x: &RingElement, y: &RingElement, z: &RingElement, domain: &DomainSpec) -> Result<Verdict<Split, String>> {
    for e in [x, y, z] {
        if e.is_zero() {
            return Err(Error::ZeroInput("primal_split"));
        }
    }
    if let DomainSpec::SemigroupRing { .. } = domain {
        let (Some(n), Some(a), Some(b)) = (monomial_order(x), monomial_order(y), monomial_order(z)) else {
            return Ok(Verdict::unknown(0, "primal splits are only decided for monomials"));
        };
        if !in_semigroup(a + b - n) {
            return Err(Error::Precondition(format!("{x} does not divide ({y})({z})")));
        }
        return Ok(match sgr_split_exponent(n, a, b) {
            Some(k) => {
                let r = monomial_element(domain, k)?;
                let s = domain.divides(&r, x)?.ok_or_else(|| Error::Consistency(format!("{r} does not divide {x}")))?;
                Verdict::Holds(Split { i: r, j: s })
            }
            None => Verdict::Fails(format!(
                "no k with t^k | {x}, t^k | {y} and t^({n}-k) | {z}; divisors t^k*u with u(1) != 0 divide less"
            )),
        });
    }
    if domain.divides(x, &domain.mul(y, z)?)?.is_none() {
        return Err(Error::Precondition(format!("{x} does not divide ({y})({z})")));
    }
    let Some(classes) = domain.divisor_classes(x)? else {
        return Ok(Verdict::unknown(quadratic::PELL_SEARCH_CAP, "fundamental unit not found"));
    };
    for r in &classes {
        if domain.divides(r, y)?.is_none() {
            continue;
        }
        let s = domain.divides(r, x)?.expect("divisor class");
        if domain.divides(&s, z)?.is_some() {
            return Ok(Verdict::Holds(Split { i: r.clone(), j: s }));
        }
    }
    Ok(Verdict::Fails(format!(
        "none of the {} divisor classes r of {x} has r | {y} and {x}/r | {z}",
        classes.len()
    )))
}

/// Searches for `y`, `z` witnessing that `x` is not primal.
pub fn primal(x: &RingElement, domain: &DomainSpec, bound: u64, strategy: Strategy) -> Result<Verdict<String, PrimalFailure>> {
    require_bound(bound)?;
    domain.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroInput("primal"));
    }
    if domain.is_field() || domain.is_unit(x)? {
        return Ok(Verdict::Holds(format!("{x} is a unit: x = x * 1 splits any x | yz")));
    }
    let ys: Vec<RingElement> = match domain {
        DomainSpec::SemigroupRing { trunc } => {
            if monomial_order(x).is_none() {
                return Ok(Verdict::unknown(bound, "primality of non-monomial semigroup ring elements is not searched"));
            }
            (0..=*trunc as i64).filter(|&e| in_semigroup(e)).map(|e| monomial_element(domain, e)).collect::<Result<_>>()?
        }
        _ => enumerate_elements(domain, bound).collect(),
    };
    let trunc = domain.trunc();
    let hit = strategy.find_first(&(0..ys.len()).collect::<Vec<_>>(), |&iy| {
        let y = &ys[iy];
        for z in &ys[iy..] {
            if let (Some(t), Some(a), Some(b)) = (trunc, monomial_order(y), monomial_order(z)) {
                // Keep yz representable so the failure can be replayed by series division.
                if a + b > t as i64 {
                    continue;
                }
            }
            let yz = domain.mul(y, z)?;
            if domain.divides(x, &yz)?.is_none() {
                continue;
            }
            match primal_split(x, y, z, domain)? {
                Verdict::Holds(_) => {}
                Verdict::Fails(proof) => return Ok(Some(Ok(PrimalFailure { y: y.clone(), z: z.clone(), proof }))),
                Verdict::Unknown(b) => return Ok(Some(Err(b))),
            }
        }
        Ok(None)
    })?;
    Ok(match hit {
        Some(Ok(f)) => Verdict::Fails(f),
        Some(Err(b)) => Verdict::Unknown(b),
        None => Verdict::unknown(bound, "no counterexample up to bound"),
    })
}

/// `a ∤ b` with `(a, b)_v ≠ D`, so the atom `a` is not prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomPrimeFailure {
    pub b: RingElement,
    pub closure: String,
}

/// An atom `a` is prime iff `a ∤ b` forces `(a, b)_v = D`; searches for a `b` breaking this.
pub fn atom_prime_criterion(a: &RingElement, domain: &DomainSpec, bound: u64, strategy: Strategy) -> Result<Verdict<String, AtomPrimeFailure>> {
    require_bound(bound)?;
    if a.is_zero() {
        return Err(Error::ZeroInput("atom_prime_criterion"));
    }
    if !domain.is_atom(a, bound)?.is_holds() {
        return Err(Error::Precondition(format!("{a} is not a certified atom of {domain}")));
    }
    let bs: Vec<RingElement> = match domain {
        DomainSpec::Integers => {
            let RingElement::Int(n) = a else { unreachable!("checked by is_atom") };
            if !crate::exactnum::is_prime(&n.magnitude().clone().into()) {
                return Err(Error::Consistency(format!("atom {a} failed the primality test")));
            }
            return Ok(Verdict::Holds(format!("{a} is a prime integer: gcd(a, b) = 1 whenever a does not divide b")));
        }
        DomainSpec::SemigroupRing { trunc } => {
            let oa = series(a)?.order().expect("nonzero") as i64;
            (2..=*trunc as i64 - oa - 1).map(|e| monomial_element(domain, e)).collect::<Result<_>>()?
        }
        _ => enumerate_elements(domain, bound).collect(),
    };
    let hit = strategy.find_first(&bs, |b| {
        if domain.is_unit(b)? || domain.divides(a, b)?.is_some() {
            return Ok(None);
        }
        Ok((!v_coprime(a, b, domain)?).then(|| b.clone()))
    })?;
    let Some(b) = hit else {
        return Ok(Verdict::unknown(bound, format!("(a, b)_v = D for every enumerated b with a not dividing b ({} candidates)", bs.len())));
    };
    let pair = IdealHandle::generated(domain, &[a.clone(), b.clone()])?;
    let closure = match pair {
        IdealHandle::Lattice(_) => format!("({a}, {b})_v = {}", v_closure(&pair)?),
        _ => format!("({a}, {b})_v lies in ideal(t^2, t^3), which is divisorial"),
    };
    Ok(Verdict::Fails(AtomPrimeFailure { b, closure }))
}

impl NonSubtle {
    /// Re-runs the complete factor search.
    pub fn verify(&self, i: &IdealHandle, j: &IdealHandle) -> Result<()> {
        match subtle(&self.x, i, j, 1)? {
            Verdict::Fails(_) => Ok(()),
            v => Err(Error::Consistency(format!("{} is not certified non-subtle: {}", self.x, v.label()))),
        }
    }
}

impl StarFailure {
    pub fn verify(&self) -> Result<()> {
        if membership(&self.witness, &self.rhs)? && !membership(&self.witness, &self.lhs)? {
            Ok(())
        } else {
            Err(Error::Consistency(format!("{} does not separate {} and {}", self.witness, self.lhs, self.rhs)))
        }
    }
}

impl PrimalFailure {
    /// Replays the failure with ring division rather than exponent arithmetic.
    pub fn verify(&self, x: &RingElement, domain: &DomainSpec) -> Result<()> {
        let yz = domain.mul(&self.y, &self.z)?;
        if domain.divides(x, &yz)?.is_none() {
            return Err(Error::Consistency(format!("{x} does not divide ({})({})", self.y, self.z)));
        }
        let divisors: Vec<RingElement> = match domain {
            DomainSpec::SemigroupRing { .. } => {
                let n = monomial_order(x).ok_or_else(|| Error::Unsupported("non-monomial x".into()))?;
                (0..=n).filter(|&k| in_semigroup(k)).map(|k| monomial_element(domain, k)).collect::<Result<_>>()?
            }
            _ => domain
                .divisor_classes(x)?
                .ok_or_else(|| Error::Unsupported("divisor classes unavailable".into()))?,
        };
        for r in &divisors {
            let Some(s) = domain.divides(r, x)? else { continue };
            if domain.divides(r, &self.y)?.is_some() && domain.divides(&s, &self.z)?.is_some() {
                return Err(Error::Consistency(format!("{x} = ({r})({s}) splits ({})({})", self.y, self.z)));
            }
        }
        Ok(())
    }
}

impl AtomPrimeFailure {
    pub fn verify(&self, a: &RingElement, domain: &DomainSpec) -> Result<()> {
        if domain.divides(a, &self.b)?.is_some() {
            return Err(Error::Consistency(format!("{a} divides {}", self.b)));
        }
        if v_coprime(a, &self.b, domain)? {
            return Err(Error::Consistency(format!("({a}, {})_v = D", self.b)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::QuadInt;

    fn z(n: i64) -> RingElement {
        RingElement::Int(n.into())
    }

    fn q(a: i64, b: i64) -> RingElement {
        RingElement::Quad(QuadInt::new(a, b))
    }

    fn sgr() -> DomainSpec {
        DomainSpec::semigroup(24).unwrap()
    }

    fn t(e: usize) -> RingElement {
        sgr().monomial(e).unwrap()
    }

    #[test]
    fn subtle_examples() {
        let d = DomainSpec::Integers;
        let (i, j) = (IdealHandle::principal(&d, &z(2)).unwrap(), IdealHandle::principal(&d, &z(3)).unwrap());
        assert_eq!(subtle(&z(6), &i, &j, 5).unwrap(), Verdict::Holds(Split { i: z(2), j: z(3) }));

        let m = IdealHandle::monomial(24, &[2, 3]).unwrap();
        let x = sgr().add(&t(4), &t(5)).unwrap();
        let got = subtle(&x, &m, &m, 5).unwrap();
        assert_eq!(got.holds().unwrap().to_string(), "(t^2) * (t^2 + t^3)");

        let k = DomainSpec::quadratic(-5).unwrap();
        let p = IdealHandle::generated(&k, &[q(2, 0), q(1, 1)]).unwrap();
        assert!(subtle(&q(6, 0), &p, &p, 5).unwrap().is_holds());
        assert!(subtle(&q(2, 0), &p, &p, 5).unwrap().is_fails());
        assert!(subtle(&q(3, 0), &p, &p, 5).is_err());
    }

    #[test]
    fn subtle_needs_next_exponent_for_linear_term() {
        // The t^5 term has to ride on a factor whose ideal contains the next exponent.
        let a = IdealHandle::monomial(24, &[2]).unwrap();
        let x = sgr().add(&t(4), &t(6)).unwrap();
        assert!(subtle(&x, &a, &a, 1).unwrap().is_holds());
        let m = IdealHandle::monomial(24, &[2, 3]).unwrap();
        let y = sgr().add(&t(4), &t(5)).unwrap();
        assert!(subtle(&y, &a, &m, 1).unwrap().is_holds());
    }

    #[test]
    fn condensed_pair_examples() {
        let d = DomainSpec::Integers;
        let two = IdealHandle::principal(&d, &z(2)).unwrap();
        let any = IdealHandle::generated(&d, &[z(4), z(6)]).unwrap();
        assert!(condensed_pair(&two, &any, 3, Strategy::Sequential).unwrap().is_holds());

        let k = DomainSpec::quadratic(-5).unwrap();
        let p = IdealHandle::generated(&k, &[q(2, 0), q(1, 1)]).unwrap();
        for s in [Strategy::Sequential, Strategy::Parallel] {
            let v = condensed_pair(&p, &p, 3, s).unwrap();
            let w = v.fails().expect("non-subtle element");
            w.verify(&p, &p).unwrap();
        }

        let m = IdealHandle::monomial(24, &[2, 3]).unwrap();
        let v = condensed_pair(&m, &m, 12, Strategy::default()).unwrap();
        assert!(v.holds().unwrap().contains("all sampled x subtle"));
    }

    #[test]
    fn star_examples() {
        let d = DomainSpec::Integers;
        let v = star_property(&[z(4), z(6)], &[z(10), z(15)], &d).unwrap();
        assert_eq!(v.holds().unwrap().to_string(), "ideal(360)");

        let s = sgr();
        let v = star_property(&[t(2), t(3)], &[t(2), t(3)], &s).unwrap();
        let f = v.fails().unwrap();
        assert_eq!(f.lhs.to_string(), "ideal(t^10, t^11)");
        assert_eq!(f.rhs.to_string(), "ideal(t^8, t^9)");
        assert_eq!(f.witness, t(8));
        f.verify().unwrap();

        let k = DomainSpec::quadratic(-5).unwrap();
        assert!(star_property(&[q(1, 1)], &[q(2, 0)], &k).unwrap().is_holds());
    }

    #[test]
    fn primal_examples() {
        let d = DomainSpec::Integers;
        assert_eq!(primal_split(&z(6), &z(4), &z(9), &d).unwrap(), Verdict::Holds(Split { i: z(2), j: z(3) }));
        assert!(primal(&z(6), &d, 10, Strategy::Sequential).unwrap().is_unknown());
        assert!(primal(&z(-1), &d, 10, Strategy::Sequential).unwrap().is_holds());

        let k = DomainSpec::quadratic(-5).unwrap();
        assert!(primal_split(&q(2, 0), &q(1, 1), &q(1, -1), &k).unwrap().is_fails());
        let v = primal(&q(2, 0), &k, 2, Strategy::default()).unwrap();
        v.fails().unwrap().verify(&q(2, 0), &k).unwrap();

        let s = sgr();
        let v = primal(&t(2), &s, 10, Strategy::default()).unwrap();
        let f = v.fails().unwrap();
        assert_eq!((f.y.clone(), f.z.clone()), (t(3), t(3)));
        f.verify(&t(2), &s).unwrap();
    }

    #[test]
    fn atom_prime_examples() {
        let d = DomainSpec::Integers;
        for p in [2, 3, 5, 7] {
            assert!(atom_prime_criterion(&z(p), &d, 10, Strategy::Sequential).unwrap().is_holds());
        }
        assert!(atom_prime_criterion(&z(6), &d, 10, Strategy::Sequential).is_err());

        let k = DomainSpec::quadratic(-5).unwrap();
        let v = atom_prime_criterion(&q(2, 0), &k, 10, Strategy::default()).unwrap();
        let f = v.fails().unwrap();
        assert_eq!(f.b, q(1, 1));
        f.verify(&q(2, 0), &k).unwrap();

        let s = sgr();
        let v = atom_prime_criterion(&t(2), &s, 10, Strategy::default()).unwrap();
        assert_eq!(v.fails().unwrap().b, t(3));
    }
}
