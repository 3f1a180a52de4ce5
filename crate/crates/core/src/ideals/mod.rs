//! Exact ideal calculus over the supported domains.

mod explicit;
mod fractional;
pub mod lattice;
mod monomial;

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{DomainSpec, RingElement, Series};
use crate::verdict::Verdict;

pub use explicit::ExplicitIdeal;
pub use fractional::{coords_element, element_coords, fmt_kvec, kinv, kmul, FractionalIdeal, Generator, KVec};
pub use monomial::MonomialIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealHandle {
    Lattice(FractionalIdeal),
    Monomial { trunc: usize, ideal: MonomialIdeal },
    Explicit(ExplicitIdeal),
}

/// Principal generator reported by [`is_principal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrincipalGenerator {
    Lattice(Generator),
    Monomial(i64),
}

impl fmt::Display for PrincipalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrincipalGenerator::Lattice(g) => write!(f, "{g}"),
            PrincipalGenerator::Monomial(0) => write!(f, "1"),
            PrincipalGenerator::Monomial(e) => write!(f, "t^{e}"),
        }
    }
}

fn series_of(x: &RingElement) -> Result<&Series> {
    x.as_series()
        .ok_or_else(|| Error::DomainMismatch(format!("{x} is not a semigroup ring element")))
}

impl IdealHandle {
    /// The ideal generated by `gens`, in canonical form whenever one exists.
    pub fn generated(domain: &DomainSpec, gens: &[RingElement]) -> Result<IdealHandle> {
        for g in gens {
            domain.check(g)?;
        }
        match domain {
            DomainSpec::Integers | DomainSpec::QuadraticOrder { .. } => {
                Ok(IdealHandle::Lattice(FractionalIdeal::from_elements(domain, gens)?))
            }
            DomainSpec::SemigroupRing { trunc } => {
                let series: Vec<Series> = gens.iter().map(|g| series_of(g).cloned()).collect::<Result<_>>()?;
                IdealHandle::Explicit(ExplicitIdeal::new(*trunc, series)?).canonicalized()
            }
            DomainSpec::FieldDomain(_) => {
                Err(Error::Unsupported("a field has only the zero and unit ideals".into()))
            }
        }
    }

    pub fn principal(domain: &DomainSpec, x: &RingElement) -> Result<IdealHandle> {
        IdealHandle::generated(domain, std::slice::from_ref(x))
    }

    pub fn unit(domain: &DomainSpec) -> Result<IdealHandle> {
        IdealHandle::principal(domain, &domain.one())
    }

    pub fn monomial(trunc: usize, exps: &[i64]) -> Result<IdealHandle> {
        Ok(IdealHandle::Monomial { trunc, ideal: MonomialIdeal::from_exponents(exps)? })
    }

    pub fn domain(&self) -> DomainSpec {
        match self {
            IdealHandle::Lattice(i) => i.domain().clone(),
            IdealHandle::Monomial { trunc, .. } => DomainSpec::SemigroupRing { trunc: *trunc },
            IdealHandle::Explicit(e) => DomainSpec::SemigroupRing { trunc: e.trunc() },
        }
    }

    fn canonicalized(self) -> Result<IdealHandle> {
        if let IdealHandle::Explicit(e) = &self {
            if let Some(m) = e.as_monomial()? {
                return Ok(IdealHandle::Monomial { trunc: e.trunc(), ideal: m });
            }
        }
        Ok(self)
    }

    fn as_explicit(&self) -> Result<ExplicitIdeal> {
        match self {
            IdealHandle::Explicit(e) => Ok(e.clone()),
            IdealHandle::Monomial { trunc, ideal } => ExplicitIdeal::from_monomial(*trunc, ideal),
            IdealHandle::Lattice(_) => Err(Error::DomainMismatch("lattice ideal in the semigroup ring".into())),
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            IdealHandle::Lattice(i) => i.is_integral(),
            IdealHandle::Monomial { ideal, .. } => ideal.is_integral(),
            IdealHandle::Explicit(_) => true,
        }
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(match self {
            IdealHandle::Lattice(i) => i.is_unit_ideal(),
            IdealHandle::Monomial { ideal, .. } => ideal.is_unit_ideal(),
            IdealHandle::Explicit(e) => e.contains_unit(),
        })
    }

    /// Ideal equality, deciding explicit ideals by mutual membership.
    pub fn equals(&self, o: &IdealHandle) -> Result<bool> {
        Ok(self.contains_ideal(o)? && o.contains_ideal(self)?)
    }

    pub fn contains_ideal(&self, o: &IdealHandle) -> Result<bool> {
        same_domain(self, o)?;
        Ok(match (self, o) {
            (IdealHandle::Lattice(a), IdealHandle::Lattice(b)) => a.contains_ideal(b),
            (IdealHandle::Monomial { ideal: a, .. }, IdealHandle::Monomial { ideal: b, .. }) => a.contains_ideal(b),
            _ => {
                let gens = o.as_explicit()?;
                for g in gens.generators() {
                    if !self.contains_series(g)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    fn contains_series(&self, x: &Series) -> Result<bool> {
        match self {
            IdealHandle::Monomial { ideal, .. } => Ok(ideal.contains_series(x)),
            IdealHandle::Explicit(e) => e.contains(x),
            IdealHandle::Lattice(_) => Err(Error::DomainMismatch("series in a lattice ideal".into())),
        }
    }

    /// Generators as ring elements (integral ideals only).
    pub fn generator_elements(&self) -> Result<Vec<RingElement>> {
        match self {
            IdealHandle::Lattice(i) if i.is_integral() => Ok(i.generator_elements()),
            IdealHandle::Lattice(i) => Err(Error::Unsupported(format!("{i} is fractional"))),
            _ => Ok(self.as_explicit()?.generators().iter().cloned().map(RingElement::Series).collect()),
        }
    }
}

fn same_domain(a: &IdealHandle, b: &IdealHandle) -> Result<()> {
    if a.domain() != b.domain() {
        return Err(Error::DomainMismatch(format!("{} vs {}", a.domain(), b.domain())));
    }
    Ok(())
}

fn explicit_only(op: &str) -> Error {
    Error::Unsupported(format!(
        "{op} of ideals with non-monomial generators in the semigroup ring; canonicalize first"
    ))
}

pub fn ideal_product(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    same_domain(i, j)?;
    match (i, j) {
        (IdealHandle::Lattice(a), IdealHandle::Lattice(b)) => Ok(IdealHandle::Lattice(a.product(b)?)),
        (IdealHandle::Monomial { trunc, ideal: a }, IdealHandle::Monomial { ideal: b, .. }) => {
            Ok(IdealHandle::Monomial { trunc: *trunc, ideal: a.product(b) })
        }
        _ => IdealHandle::Explicit(i.as_explicit()?.product(&j.as_explicit()?)?).canonicalized(),
    }
}

pub fn ideal_sum(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    same_domain(i, j)?;
    match (i, j) {
        (IdealHandle::Lattice(a), IdealHandle::Lattice(b)) => Ok(IdealHandle::Lattice(a.sum(b)?)),
        (IdealHandle::Monomial { trunc, ideal: a }, IdealHandle::Monomial { ideal: b, .. }) => {
            Ok(IdealHandle::Monomial { trunc: *trunc, ideal: a.sum(b) })
        }
        _ => IdealHandle::Explicit(i.as_explicit()?.sum(&j.as_explicit()?)?).canonicalized(),
    }
}

pub fn ideal_intersect(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    same_domain(i, j)?;
    match (i, j) {
        (IdealHandle::Lattice(a), IdealHandle::Lattice(b)) => Ok(IdealHandle::Lattice(a.intersect(b)?)),
        (IdealHandle::Monomial { trunc, ideal: a }, IdealHandle::Monomial { ideal: b, .. }) => {
            Ok(IdealHandle::Monomial { trunc: *trunc, ideal: a.intersect(b)? })
        }
        _ => Err(explicit_only("intersection")),
    }
}

/// `(I : J)`.
pub fn ideal_colon(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    same_domain(i, j)?;
    match (i, j) {
        (IdealHandle::Lattice(a), IdealHandle::Lattice(b)) => Ok(IdealHandle::Lattice(a.colon(b)?)),
        (IdealHandle::Monomial { trunc, ideal: a }, IdealHandle::Monomial { ideal: b, .. }) => {
            Ok(IdealHandle::Monomial { trunc: *trunc, ideal: a.colon(b)? })
        }
        _ => Err(explicit_only("colon")),
    }
}

pub fn ideal_inverse(i: &IdealHandle) -> Result<IdealHandle> {
    ideal_colon(&IdealHandle::unit(&i.domain())?, i)
}

/// `I_v = (I⁻¹)⁻¹`; for finitely generated ideals this is also `I_t`.
pub fn v_closure(i: &IdealHandle) -> Result<IdealHandle> {
    ideal_inverse(&ideal_inverse(i)?)
}

pub fn comaximal(i: &IdealHandle, j: &IdealHandle) -> Result<bool> {
    ideal_sum(i, j)?.is_unit_ideal()
}

pub fn is_principal(i: &IdealHandle) -> Result<Verdict<PrincipalGenerator, String>> {
    match i {
        IdealHandle::Lattice(a) => Ok(a.is_principal()?.map_holds(PrincipalGenerator::Lattice)),
        IdealHandle::Monomial { ideal, .. } => Ok(if ideal.is_principal() {
            Verdict::Holds(PrincipalGenerator::Monomial(ideal.min_exponent()))
        } else {
            Verdict::Fails(format!("{ideal} has two incomparable minimal exponents"))
        }),
        IdealHandle::Explicit(e) => Ok(Verdict::unknown(
            e.trunc() as u64,
            "principality of non-monomial semigroup ring ideals is not decided",
        )),
    }
}

pub fn membership(x: &RingElement, i: &IdealHandle) -> Result<bool> {
    i.domain().check(x)?;
    match i {
        IdealHandle::Lattice(a) => a.contains_element(x),
        _ => i.contains_series(series_of(x)?),
    }
}

/// `(a, b)_v = D`, cross-checked against `aD ∩ bD = abD`.
pub fn v_coprime(a: &RingElement, b: &RingElement, domain: &DomainSpec) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput("v_coprime"));
    }
    if domain.is_field() {
        return Ok(true);
    }
    let (via_v, via_intersection) = match domain {
        DomainSpec::SemigroupRing { .. } => semigroup_v_coprime(a, b, domain)?,
        _ => {
            let pair = IdealHandle::generated(domain, &[a.clone(), b.clone()])?;
            let via_v = v_closure(&pair)?.is_unit_ideal()?;
            let cap = ideal_intersect(&IdealHandle::principal(domain, a)?, &IdealHandle::principal(domain, b)?)?;
            let ab = IdealHandle::principal(domain, &domain.mul(a, b)?)?;
            (via_v, cap == ab)
        }
    };
    if via_v != via_intersection {
        return Err(Error::Consistency(format!(
            "v-coprimality of {a}, {b}: (a,b)_v = D is {via_v} but aD∩bD = abD is {via_intersection}"
        )));
    }
    Ok(via_v)
}

/// In K[[t², t³]] a unit makes the pair v-coprime. For two nonunits,
/// `(a, b) ⊆ M = (t², t³)` with `M_v = M`, while `t^{ord a + ord b + 1}` lies
/// in `aD ∩ bD` but not in `abD`.
fn semigroup_v_coprime(a: &RingElement, b: &RingElement, domain: &DomainSpec) -> Result<(bool, bool)> {
    if domain.is_unit(a)? || domain.is_unit(b)? {
        return Ok((true, true));
    }
    let trunc = domain.trunc().expect("semigroup ring");
    let (sa, sb) = (series_of(a)?, series_of(b)?);
    let (oa, ob) = (sa.order().expect("nonzero"), sb.order().expect("nonzero"));
    let maximal = IdealHandle::monomial(trunc, &[2, 3])?;
    let mv = v_closure(&maximal)?;
    let pair = IdealHandle::generated(domain, &[a.clone(), b.clone()])?;
    if !maximal.contains_ideal(&pair)? || mv != maximal {
        return Err(Error::Consistency("maximal ideal bookkeeping failed".into()));
    }
    let e = oa + ob + 1;
    if e > trunc {
        return Err(Error::Precondition(format!(
            "witness t^{e} for {a}, {b} exceeds truncation {trunc}"
        )));
    }
    let z = domain.monomial(e)?;
    let in_cap = domain.divides(a, &z)?.is_some() && domain.divides(b, &z)?.is_some();
    let in_ab = domain.divides(&domain.mul(a, b)?, &z)?.is_some();
    Ok((false, !(in_cap && !in_ab)))
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealHandle::Lattice(i) => write!(f, "{i}"),
            IdealHandle::Monomial { ideal, .. } => write!(f, "{ideal}"),
            IdealHandle::Explicit(e) => write!(f, "{e}"),
        }
    }
}
