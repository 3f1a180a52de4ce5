//! Fractional ideals of Z and Z[√d] as canonical Z-lattices in K.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lattice::QLattice;
use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, Rational};
use crate::rings::{quadratic, DomainSpec, QuadInt, RingElement};
use crate::verdict::Verdict;

/// Element of the fraction field in coordinates `[a]` (Q) or `[a, b]` (a + b√d).
pub type KVec = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FractionalIdeal {
    domain: DomainSpec,
    lattice: QLattice,
}

/// Generator `numerator / den` of a principal fractional ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub numerator: RingElement,
    pub den: BigInt,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/{}", self.numerator, self.den)
        }
    }
}

pub(crate) fn dim(domain: &DomainSpec) -> Result<usize> {
    match domain {
        DomainSpec::Integers => Ok(1),
        DomainSpec::QuadraticOrder { .. } => Ok(2),
        _ => Err(Error::Unsupported(format!("lattice ideals over {domain}"))),
    }
}

pub fn element_coords(x: &RingElement) -> Result<KVec> {
    match x {
        RingElement::Int(n) => Ok(vec![Rational::from_integer(n.clone())]),
        RingElement::Quad(q) => Ok(vec![Rational::from_integer(q.a.clone()), Rational::from_integer(q.b.clone())]),
        _ => Err(Error::Unsupported(format!("{x} has no lattice coordinates"))),
    }
}

/// Integral coordinates back to a ring element.
pub fn coords_element(domain: &DomainSpec, v: &[Rational]) -> Option<RingElement> {
    if v.iter().any(|c| !c.is_integer()) {
        return None;
    }
    match domain {
        DomainSpec::Integers => Some(RingElement::Int(v[0].to_integer())),
        DomainSpec::QuadraticOrder { .. } => Some(RingElement::Quad(QuadInt::new(v[0].to_integer(), v[1].to_integer()))),
        _ => None,
    }
}

/// Product in the fraction field.
pub fn kmul(domain: &DomainSpec, x: &[Rational], y: &[Rational]) -> KVec {
    match domain {
        DomainSpec::QuadraticOrder { d } => {
            let d = Rational::from_integer(d.clone());
            vec![&x[0] * &y[0] + d * &x[1] * &y[1], &x[0] * &y[1] + &x[1] * &y[0]]
        }
        _ => vec![&x[0] * &y[0]],
    }
}

pub fn kinv(domain: &DomainSpec, x: &[Rational]) -> Result<KVec> {
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroInput("inverse"));
    }
    Ok(match domain {
        DomainSpec::QuadraticOrder { d } => {
            let n = &x[0] * &x[0] - Rational::from_integer(d.clone()) * &x[1] * &x[1];
            vec![&x[0] / &n, -&x[1] / &n]
        }
        _ => vec![x[0].recip()],
    })
}

impl FractionalIdeal {
    /// The D-module generated by field elements given in coordinates.
    pub fn from_kvecs(domain: &DomainSpec, gens: &[KVec]) -> Result<FractionalIdeal> {
        let n = dim(domain)?;
        if gens.iter().all(|g| g.iter().all(Zero::is_zero)) {
            return Err(Error::ZeroInput("ideal generators"));
        }
        let mut span: Vec<KVec> = gens.to_vec();
        if let DomainSpec::QuadraticOrder { .. } = domain {
            let w = vec![Rational::zero(), Rational::one()];
            span.extend(gens.iter().map(|g| kmul(domain, g, &w)));
        }
        Ok(FractionalIdeal { domain: domain.clone(), lattice: QLattice::from_vectors(&span, n) })
    }

    pub fn from_elements(domain: &DomainSpec, gens: &[RingElement]) -> Result<FractionalIdeal> {
        for g in gens {
            domain.check(g)?;
        }
        let vs = gens.iter().map(element_coords).collect::<Result<Vec<_>>>()?;
        FractionalIdeal::from_kvecs(domain, &vs)
    }

    pub fn unit(domain: &DomainSpec) -> Result<FractionalIdeal> {
        FractionalIdeal::from_elements(domain, &[domain.one()])
    }

    fn from_lattice(domain: &DomainSpec, lattice: QLattice) -> Result<FractionalIdeal> {
        let out = FractionalIdeal { domain: domain.clone(), lattice };
        out.validate()?;
        Ok(out)
    }

    /// Full rank and closed under multiplication by ω.
    fn validate(&self) -> Result<()> {
        let n = dim(&self.domain)?;
        if self.lattice.rank() != n {
            return Err(Error::Consistency(format!("ideal lattice has rank {}", self.lattice.rank())));
        }
        if n == 2 {
            let w = vec![Rational::zero(), Rational::one()];
            for b in self.lattice.basis() {
                if !self.lattice.contains(&kmul(&self.domain, &b, &w)) {
                    return Err(Error::Consistency("lattice not closed under w".into()));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    pub fn lattice(&self) -> &QLattice {
        &self.lattice
    }

    pub fn basis(&self) -> Vec<KVec> {
        self.lattice.basis()
    }

    pub fn den(&self) -> &BigInt {
        self.lattice.den()
    }

    pub fn is_integral(&self) -> bool {
        self.den().is_one()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.is_integral() && self.lattice.covolume().is_one()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.lattice.contains(x)
    }

    pub fn contains_element(&self, x: &RingElement) -> Result<bool> {
        Ok(self.contains(&element_coords(x)?))
    }

    pub fn contains_ideal(&self, o: &FractionalIdeal) -> bool {
        self.lattice.contains_lattice(&o.lattice)
    }

    fn same_domain(&self, o: &FractionalIdeal) -> Result<()> {
        if self.domain != o.domain {
            return Err(Error::DomainMismatch(format!("{} vs {}", self.domain, o.domain)));
        }
        Ok(())
    }

    pub fn product(&self, o: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.same_domain(o)?;
        let mut vs = Vec::new();
        for a in self.basis() {
            for b in o.basis() {
                vs.push(kmul(&self.domain, &a, &b));
            }
        }
        FractionalIdeal::from_lattice(&self.domain, QLattice::from_vectors(&vs, self.lattice.ncols()))
    }

    pub fn sum(&self, o: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.same_domain(o)?;
        FractionalIdeal::from_lattice(&self.domain, self.lattice.sum(&o.lattice))
    }

    pub fn intersect(&self, o: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.same_domain(o)?;
        FractionalIdeal::from_lattice(&self.domain, self.lattice.intersect(&o.lattice))
    }

    pub fn scale(&self, x: &[Rational]) -> Result<FractionalIdeal> {
        if x.iter().all(Zero::is_zero) {
            return Err(Error::ZeroInput("scale"));
        }
        let vs: Vec<KVec> = self.basis().iter().map(|b| kmul(&self.domain, b, x)).collect();
        FractionalIdeal::from_lattice(&self.domain, QLattice::from_vectors(&vs, self.lattice.ncols()))
    }

    /// `(self : o) = { x : x·o ⊆ self }`, the intersection of `j⁻¹·self` over a Z-basis of `o`.
    pub fn colon(&self, o: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.same_domain(o)?;
        let mut acc: Option<FractionalIdeal> = None;
        for j in o.basis() {
            let part = self.scale(&kinv(&self.domain, &j)?)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        acc.ok_or(Error::ZeroInput("colon by zero ideal"))
    }

    /// `I / c` where `c ∈ Q` is the gcd of all coordinates of `I`; ideals
    /// differing by a rational scalar share a primitive part.
    pub fn primitive_part(&self) -> Result<FractionalIdeal> {
        use num_integer::Integer;
        let g = self.lattice.integer_rows().iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut v = vec![Rational::zero(); self.lattice.ncols()];
        v[0] = Rational::new(self.den().clone(), g);
        self.scale(&v)
    }

    pub fn inverse(&self) -> Result<FractionalIdeal> {
        FractionalIdeal::unit(&self.domain)?.colon(self)
    }

    pub fn v_closure(&self) -> Result<FractionalIdeal> {
        self.inverse()?.inverse()
    }

    /// Index-normalised norm: `[D : I]` for integral `I`, extended multiplicatively.
    pub fn norm(&self) -> Rational {
        self.lattice.covolume()
    }

    /// Complete principality test: over Z always principal; over Z[√d] a
    /// generator must be an element whose norm equals the ideal norm.
    pub fn is_principal(&self) -> Result<Verdict<Generator, String>> {
        let den = self.den().clone();
        let integral = self.scale(&self.int_kvec(&den))?;
        let gen = match &self.domain {
            DomainSpec::Integers => integral.basis()[0].clone(),
            DomainSpec::QuadraticOrder { d } => {
                let n = integral.norm().to_integer();
                let Some(cands) = quadratic::norm_candidates(d, &n) else {
                    return Ok(Verdict::unknown(
                        quadratic::PELL_SEARCH_CAP,
                        format!("fundamental unit of Z[sqrt({d})] not found"),
                    ));
                };
                let hit = cands.into_iter().find(|c| {
                    integral.contains(&[Rational::from_integer(c.a.clone()), Rational::from_integer(c.b.clone())])
                });
                match hit {
                    Some(c) => vec![Rational::from_integer(c.a), Rational::from_integer(c.b)],
                    None => return Ok(Verdict::Fails(format!("no element of norm +-{n} in {integral}"))),
                }
            }
            _ => unreachable!("lattice ideals are over Z or Z[sqrt d]"),
        };
        let check = FractionalIdeal::from_kvecs(&self.domain, &[gen.clone()])?;
        if check != integral {
            return Err(Error::Consistency(format!("generator does not reproduce {integral}")));
        }
        let numerator = coords_element(&self.domain, &gen).expect("integral generator");
        Ok(Verdict::Holds(Generator { numerator, den }))
    }

    fn int_kvec(&self, n: &BigInt) -> KVec {
        let mut v = vec![Rational::zero(); self.lattice.ncols()];
        v[0] = Rational::from_integer(n.clone());
        v
    }

    /// Z-basis as ring elements of the integral ideal `den · I`, ordered with
    /// rational integers first.
    pub fn generator_elements(&self) -> Vec<RingElement> {
        let den = Rational::from_integer(self.den().clone());
        let mut out: Vec<RingElement> = self
            .basis()
            .iter()
            .rev()
            .map(|b| {
                let v: KVec = b.iter().map(|c| c * &den).collect();
                coords_element(&self.domain, &v).expect("scaled basis is integral")
            })
            .collect();
        if out.len() == 2 && self.generated_by(&out[..1]) {
            out.truncate(1);
        }
        out
    }

    fn generated_by(&self, gens: &[RingElement]) -> bool {
        let den = Rational::from_integer(self.den().clone());
        let vs: Vec<KVec> = gens
            .iter()
            .map(|g| element_coords(g).expect("lattice element").iter().map(|c| c / &den).collect())
            .collect();
        FractionalIdeal::from_kvecs(&self.domain, &vs).is_ok_and(|i| &i == self)
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generator_elements().iter().map(|g| g.to_string()).collect();
        if self.is_integral() {
            write!(f, "ideal({})", gens.join(", "))
        } else {
            write!(f, "frac(ideal({}), {})", gens.join(", "), self.den())
        }
    }
}

/// Formats a field element given by coordinates.
pub fn fmt_kvec(domain: &DomainSpec, v: &[Rational]) -> String {
    let den = crate::exactnum::common_denominator(v.iter());
    let scaled: KVec = v.iter().map(|c| c * Rational::from_integer(den.clone())).collect();
    match coords_element(domain, &scaled) {
        Some(e) if den.is_one() => e.to_string(),
        Some(e) => format!("({e})/{den}"),
        None => v.iter().map(fmt_rational).collect::<Vec<_>>().join(","),
    }
}
