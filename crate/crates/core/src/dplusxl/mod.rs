//! The ring R = D + X·L[X]: polynomials over a number field L whose constant
//! term lies in D, its ideals in the canonical form X^r·(J + X·L[X]), ideal
//! products, membership, and constructive factorisation inside products.

mod bilinear;
mod closure;
mod poly;
mod submodule;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{NFElement, NumberField};
use crate::rings::{DomainSpec, RingElement};
use crate::verdict::Verdict;

pub use bilinear::{bilinear_factor, scalar_factor, solve_pair, PairSolution, Refutation};
pub use closure::{is_condensed_dplusxl, sm_closed_probe, vs_closed, SmFailure, VsVerdict, VsWitness, SM_SAMPLE_LIMIT};
pub use poly::LPoly;
pub use submodule::Submodule;

/// The pair `D ⊆ L`. Supported: `Z ⊆ L` for any L, `Z[√d] ⊆ Q(√d)`, `Q ⊆ L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DxlSpec {
    base: DomainSpec,
    field: Arc<NumberField>,
}

impl DxlSpec {
    pub fn new(base: DomainSpec, field: Arc<NumberField>) -> Result<DxlSpec> {
        match &base {
            DomainSpec::Integers => {}
            DomainSpec::QuadraticOrder { d } => {
                if field.pure_quadratic_radicand().as_ref() != Some(d) {
                    return Err(Error::InvalidDomain(format!(
                        "{base} needs L = NumField(x^2-({d})), got {field}"
                    )));
                }
            }
            DomainSpec::FieldDomain(k) if k.is_rationals() => {}
            _ => return Err(Error::InvalidDomain(format!("{base} is not a supported base for D+XL[X]"))),
        }
        Ok(DxlSpec { base, field })
    }

    pub fn base(&self) -> &DomainSpec {
        &self.base
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// `[L : K]` with K the quotient field of D.
    pub fn relative_degree(&self) -> usize {
        match self.base {
            DomainSpec::QuadraticOrder { .. } => self.field.degree() / 2,
            _ => self.field.degree(),
        }
    }

    pub fn base_is_field(&self) -> bool {
        self.base.is_field()
    }

    pub fn embed(&self, x: &RingElement) -> Result<NFElement> {
        match x {
            RingElement::Int(n) => Ok(NFElement::from_rational(&self.field, n.clone().into())),
            RingElement::Quad(q) if matches!(self.base, DomainSpec::QuadraticOrder { .. }) => {
                NFElement::new(&self.field, vec![q.a.clone().into(), q.b.clone().into()])
            }
            RingElement::Field(e) if e.field().is_rationals() => {
                Ok(NFElement::from_rational(&self.field, e.coords()[0].clone()))
            }
            _ => Err(Error::DomainMismatch(format!("{x} is not an element of {}", self.base))),
        }
    }

    /// `c` as an element of D, if it lies in D.
    pub fn to_base(&self, c: &NFElement) -> Option<RingElement> {
        match &self.base {
            DomainSpec::Integers => {
                let q = c.as_rational()?;
                q.is_integer().then(|| RingElement::Int(q.to_integer()))
            }
            DomainSpec::QuadraticOrder { .. } => c.has_integral_coords().then(|| {
                RingElement::Quad(crate::rings::QuadInt::new(c.coords()[0].to_integer(), c.coords()[1].to_integer()))
            }),
            DomainSpec::FieldDomain(k) => {
                let q = c.as_rational()?;
                Some(RingElement::Field(NFElement::from_rational(k, q.clone())))
            }
            DomainSpec::SemigroupRing { .. } => None,
        }
    }

    pub fn in_base(&self, c: &NFElement) -> bool {
        self.to_base(c).is_some()
    }

    /// True when `x` is an element of R (its constant term lies in D).
    pub fn contains(&self, x: &LPoly) -> bool {
        x.field() == &self.field && self.in_base(&x.coeff(0))
    }

    pub fn check(&self, x: &LPoly) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidElement(format!("{x}: constant term is not in {}", self.base)))
        }
    }
}

impl fmt::Display for DxlSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DXL(D={};L={})", self.base, self.field)
    }
}

/// The coefficient part `J` of a canonical ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum JPart {
    Module(Submodule),
    /// `J + X·L[X] = L[X]`.
    Full,
}

/// The ideal `X^r·(J + X·L[X])` of R.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalRIdeal {
    r: u32,
    j: JPart,
}

impl CanonicalRIdeal {
    /// Validates `r = 0 ⇒ J ⊆ D` and rewrites `J = L` as [`JPart::Full`].
    pub fn new(spec: &DxlSpec, r: u32, j: JPart) -> Result<CanonicalRIdeal> {
        let j = match j {
            JPart::Module(m) if m.is_full() => JPart::Full,
            other => other,
        };
        if r == 0 {
            let ok = match &j {
                JPart::Full => spec.base_is_field() && spec.relative_degree() == 1,
                JPart::Module(m) => m.within_base(spec),
            };
            if !ok {
                return Err(Error::Precondition(format!("an ideal with r = 0 needs J inside {}", spec.base)));
            }
        }
        Ok(CanonicalRIdeal { r, j })
    }

    pub fn module(spec: &DxlSpec, r: u32, gens: &[NFElement]) -> Result<CanonicalRIdeal> {
        CanonicalRIdeal::new(spec, r, JPart::Module(Submodule::generated(spec, gens)?))
    }

    /// `X^r·(I + X·L[X])` for an ideal `I` of D given by generators.
    pub fn from_base_ideal(spec: &DxlSpec, r: u32, gens: &[RingElement]) -> Result<CanonicalRIdeal> {
        let gens: Vec<NFElement> = gens.iter().map(|g| spec.embed(g)).collect::<Result<_>>()?;
        CanonicalRIdeal::module(spec, r, &gens)
    }

    pub fn full(spec: &DxlSpec, r: u32) -> Result<CanonicalRIdeal> {
        CanonicalRIdeal::new(spec, r, JPart::Full)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn j(&self) -> &JPart {
        &self.j
    }

    pub fn is_full(&self) -> bool {
        matches!(self.j, JPart::Full)
    }

    fn fmt_with(&self, spec: &DxlSpec) -> String {
        match &self.j {
            JPart::Full => format!("full({})", self.r),
            JPart::Module(m) if self.r == 0 => format!("ideal0({})", m.fmt_gens(spec, true)),
            JPart::Module(m) => format!("sub({}; {})", self.r, m.fmt_gens(spec, false)),
        }
    }

    /// Display in the grammar accepted by the parser.
    pub fn display<'a>(&'a self, spec: &'a DxlSpec) -> impl fmt::Display + 'a {
        DisplayIdeal { ideal: self, spec }
    }
}

struct DisplayIdeal<'a> {
    ideal: &'a CanonicalRIdeal,
    spec: &'a DxlSpec,
}

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ideal.fmt_with(self.spec))
    }
}

/// `(r₁, J₁)·(r₂, J₂) = (r₁ + r₂, J₁J₂)`, where `L` absorbs any nonzero module.
pub fn r_ideal_product(spec: &DxlSpec, a: &CanonicalRIdeal, b: &CanonicalRIdeal) -> Result<CanonicalRIdeal> {
    let j = match (&a.j, &b.j) {
        (JPart::Module(m), JPart::Module(n)) => JPart::Module(m.product(n, spec)?),
        _ => JPart::Full,
    };
    CanonicalRIdeal::new(spec, a.r + b.r, j)
}

/// `x ∈ A`: the coefficients below `X^r` vanish and the `X^r` coefficient lies in J.
pub fn membership_r(spec: &DxlSpec, x: &LPoly, a: &CanonicalRIdeal) -> bool {
    if !spec.contains(x) {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let r = a.r as usize;
    if (0..r).any(|k| !x.coeff(k).is_zero()) {
        return false;
    }
    match &a.j {
        JPart::Full => true,
        JPart::Module(m) => m.contains(&x.coeff(r)),
    }
}

/// Finds `a ∈ A`, `b ∈ B` with `a·b = x`.
///
/// Writing `x = X^{r₁+r₂}·q`: when one side is `L[X]` the other absorbs a
/// scalar `ℓ` chosen so its lowest coefficient is the first generator of its
/// module; otherwise `q(0) = γ₁γ₂` is split by [`scalar_factor`] and the rest
/// of `q` goes to the second factor as `γ₂ + (X/γ₁)·h`.
pub fn factor_in_product(
    spec: &DxlSpec,
    x: &LPoly,
    a: &CanonicalRIdeal,
    b: &CanonicalRIdeal,
    bound: u64,
) -> Result<Verdict<(LPoly, LPoly), String>> {
    let prod = r_ideal_product(spec, a, b)?;
    if x.is_zero() {
        return Err(Error::ZeroInput("factor_in_product needs x != 0"));
    }
    if !membership_r(spec, x, &prod) {
        return Err(Error::Precondition(format!("{x} is not in {}", prod.display(spec))));
    }
    let field = &spec.field;
    let (r1, r2) = (a.r as usize, b.r as usize);
    let q = x.unshift(r1 + r2).expect("membership gives the X-adic order");
    let gamma = q.coeff(0);
    let xr1 = LPoly::monomial(NFElement::one(field), r1);
    let xr2 = LPoly::monomial(NFElement::one(field), r2);
    let clearing = |n: &Submodule| -> Result<NFElement> {
        if gamma.is_zero() {
            Ok(NFElement::one(field))
        } else {
            n.basis()[0].checked_div(&gamma)
        }
    };
    let (fa, fb) = match (&a.j, &b.j) {
        (JPart::Full, JPart::Full) => (xr1, xr2.mul(&q)),
        (JPart::Full, JPart::Module(n)) => {
            let l = clearing(n)?;
            (xr1.scale(&l.inverse()?), xr2.mul(&q).scale(&l))
        }
        (JPart::Module(m), JPart::Full) => {
            let l = clearing(m)?;
            (xr1.mul(&q).scale(&l), xr2.scale(&l.inverse()?))
        }
        (JPart::Module(m), JPart::Module(n)) => {
            let (g1, g2) = match scalar_factor(spec, &gamma, m, n, bound)? {
                Verdict::Holds(p) => p,
                Verdict::Fails(why) => {
                    return Ok(Verdict::Fails(format!("lowest coefficient {gamma} does not split: {why}")))
                }
                Verdict::Unknown(sb) => return Ok(Verdict::Unknown(sb)),
            };
            let h = q.sub(&LPoly::constant(gamma.clone())).unshift(1).expect("q - q(0) vanishes at 0");
            let tail = h.shift(1).scale(&g1.inverse()?);
            (xr1.scale(&g1), xr2.mul(&LPoly::constant(g2).add(&tail)))
        }
    };
    check_factors(spec, x, a, b, &fa, &fb)?;
    Ok(Verdict::Holds((fa, fb)))
}

fn check_factors(spec: &DxlSpec, x: &LPoly, a: &CanonicalRIdeal, b: &CanonicalRIdeal, fa: &LPoly, fb: &LPoly) -> Result<()> {
    if !membership_r(spec, fa, a) || !membership_r(spec, fb, b) || &fa.mul(fb) != x {
        return Err(Error::Consistency(format!(
            "factors {fa}, {fb} of {x} in {} * {} do not check",
            a.display(spec),
            b.display(spec)
        )));
    }
    Ok(())
}

/// `g·A` for a polynomial `g` with `g(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledRIdeal {
    pub multiplier: LPoly,
    pub ideal: CanonicalRIdeal,
}

impl ScaledRIdeal {
    pub fn new(multiplier: LPoly, ideal: CanonicalRIdeal) -> Result<ScaledRIdeal> {
        if !multiplier.coeff(0).is_one() {
            return Err(Error::Precondition(format!("multiplier {multiplier} must have constant term 1")));
        }
        Ok(ScaledRIdeal { multiplier, ideal })
    }

    pub fn contains(&self, spec: &DxlSpec, x: &LPoly) -> Result<bool> {
        Ok(match x.div_exact(&self.multiplier)? {
            Some(y) => membership_r(spec, &y, &self.ideal),
            None => false,
        })
    }
}

/// Factorisation in `(gA)(hB)`: divide out `gh`, factor in `AB`, multiply back.
pub fn factor_scaled(
    spec: &DxlSpec,
    x: &LPoly,
    a: &ScaledRIdeal,
    b: &ScaledRIdeal,
    bound: u64,
) -> Result<Verdict<(LPoly, LPoly), String>> {
    let gh = a.multiplier.mul(&b.multiplier);
    let Some(y) = x.div_exact(&gh)? else {
        return Err(Error::Precondition(format!("{x} is not divisible by {gh}")));
    };
    Ok(match factor_in_product(spec, &y, &a.ideal, &b.ideal, bound)? {
        Verdict::Holds((p, q)) => {
            let (fa, fb) = (p.mul(&a.multiplier), q.mul(&b.multiplier));
            if !a.contains(spec, &fa)? || !b.contains(spec, &fb)? || &fa.mul(&fb) != x {
                return Err(Error::Consistency(format!("scaled factors {fa}, {fb} of {x} do not check")));
            }
            Verdict::Holds((fa, fb))
        }
        Verdict::Fails(w) => Verdict::Fails(w),
        Verdict::Unknown(sb) => Verdict::Unknown(sb),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rational};

    fn zq() -> DxlSpec {
        DxlSpec::new(DomainSpec::Integers, NumberField::rationals()).unwrap()
    }

    fn q(spec: &DxlSpec, n: i64, d: i64) -> NFElement {
        NFElement::from_rational(spec.field(), rat(n, d))
    }

    fn poly(spec: &DxlSpec, cs: &[(i64, i64)]) -> LPoly {
        LPoly::new(spec.field(), cs.iter().map(|&(n, d)| q(spec, n, d)).collect())
    }

    #[test]
    fn products_of_canonical_ideals() {
        let s = zq();
        let i2 = CanonicalRIdeal::module(&s, 0, &[q(&s, 2, 1)]).unwrap();
        let i3 = CanonicalRIdeal::module(&s, 0, &[q(&s, 3, 1)]).unwrap();
        let i6 = CanonicalRIdeal::module(&s, 0, &[q(&s, 6, 1)]).unwrap();
        assert_eq!(r_ideal_product(&s, &i2, &i3).unwrap(), i6);
        assert_eq!(i6.display(&s).to_string(), "ideal0(6)");

        let f1 = CanonicalRIdeal::full(&s, 1).unwrap();
        assert_eq!(r_ideal_product(&s, &f1, &i3).unwrap(), f1);

        let h = CanonicalRIdeal::module(&s, 1, &[q(&s, 1, 2)]).unwrap();
        let t = CanonicalRIdeal::module(&s, 1, &[q(&s, 1, 3)]).unwrap();
        let p = r_ideal_product(&s, &h, &t).unwrap();
        assert_eq!(p, CanonicalRIdeal::module(&s, 2, &[q(&s, 1, 6)]).unwrap());
        assert_eq!(p.display(&s).to_string(), "sub(2; 1/6)");
    }

    #[test]
    fn membership_examples() {
        let s = zq();
        let i6 = CanonicalRIdeal::module(&s, 0, &[q(&s, 6, 1)]).unwrap();
        assert!(membership_r(&s, &poly(&s, &[(6, 1), (1, 1)]), &i6));
        assert!(!membership_r(&s, &poly(&s, &[(3, 1), (1, 1)]), &i6));
        let m = CanonicalRIdeal::module(&s, 1, &[q(&s, 1, 2), q(&s, 1, 3)]).unwrap();
        assert_eq!(m.display(&s).to_string(), "sub(1; 1/6)");
        assert!(!membership_r(&s, &poly(&s, &[(0, 1), (1, 5)]), &m));
        assert!(membership_r(&s, &poly(&s, &[(0, 1), (1, 6), (7, 5)]), &m));
    }

    #[test]
    fn r_zero_needs_ideal_of_d() {
        let s = zq();
        assert!(CanonicalRIdeal::module(&s, 0, &[q(&s, 1, 2)]).is_err());
        assert!(CanonicalRIdeal::full(&s, 0).is_err());
        let qq = DxlSpec::new(DomainSpec::rationals(), NumberField::rationals()).unwrap();
        assert!(CanonicalRIdeal::full(&qq, 0).is_ok());
        // Over Q the module Q is all of L.
        assert!(CanonicalRIdeal::module(&qq, 0, &[q(&qq, 2, 1)]).unwrap().is_full());
    }

    #[test]
    fn factor_two_times_three() {
        let s = zq();
        let i2 = CanonicalRIdeal::module(&s, 0, &[q(&s, 2, 1)]).unwrap();
        let i3 = CanonicalRIdeal::module(&s, 0, &[q(&s, 3, 1)]).unwrap();
        let x = poly(&s, &[(6, 1), (1, 1)]);
        let (a, b) = factor_in_product(&s, &x, &i2, &i3, 10).unwrap().holds().cloned().unwrap();
        assert_eq!(a.to_string(), "2");
        assert_eq!(b.to_string(), "3 + (1/2)*X");
    }

    #[test]
    fn factor_with_full_side() {
        let s = zq();
        let f1 = CanonicalRIdeal::full(&s, 1).unwrap();
        let i3 = CanonicalRIdeal::module(&s, 0, &[q(&s, 3, 1)]).unwrap();
        let x = poly(&s, &[(0, 1), (1, 5), (1, 1)]);
        let (a, b) = factor_in_product(&s, &x, &f1, &i3, 10).unwrap().holds().cloned().unwrap();
        assert_eq!(a.to_string(), "(1/15)*X");
        assert_eq!(b.to_string(), "3 + 15*X");
        let (b2, a2) = factor_in_product(&s, &x, &i3, &f1, 10).unwrap().holds().cloned().unwrap();
        assert_eq!(a2.mul(&b2), x);
    }

    #[test]
    fn factor_in_field_submodules() {
        // Over Q, span(1, th) in a quadratic field is already L.
        let l2 = NumberField::quadratic(2).unwrap();
        let s2 = DxlSpec::new(DomainSpec::rationals(), l2.clone()).unwrap();
        let m = CanonicalRIdeal::module(&s2, 1, &[NFElement::one(&l2), NFElement::generator(&l2)]).unwrap();
        assert!(m.is_full());
        let x = LPoly::monomial(NFElement::from_int(&l2, 3), 2);
        let (a, b) = factor_in_product(&s2, &x, &m, &m, 10).unwrap().holds().cloned().unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("X".into(), "3*X".into()));

        let l3 = NumberField::from_ints(&[-2, 0, 0, 1]).unwrap();
        let s3 = DxlSpec::new(DomainSpec::rationals(), l3.clone()).unwrap();
        let (one, th) = (NFElement::one(&l3), NFElement::generator(&l3));
        let m = CanonicalRIdeal::module(&s3, 1, &[one.clone(), th.clone()]).unwrap();
        let sq = &(&one + &th) * &(&one + &th);
        let x = LPoly::new(&l3, vec![NFElement::zero(&l3), NFElement::zero(&l3), sq, th.clone()]);
        let (a, b) = factor_in_product(&s3, &x, &m, &m, 10).unwrap().holds().cloned().unwrap();
        assert_eq!(a.mul(&b), x);
        // (a + b th)(c + d th) = 1 + th^2 forces ac = bd = 1 and ad = -bc.
        let x = LPoly::monomial(&one + &th.pow(2), 2);
        assert!(factor_in_product(&s3, &x, &m, &m, 10).unwrap().is_fails());
    }

    #[test]
    fn scaled_factorisation_matches_unscaled() {
        let s = zq();
        let i2 = CanonicalRIdeal::module(&s, 0, &[q(&s, 2, 1)]).unwrap();
        let i3 = CanonicalRIdeal::module(&s, 0, &[q(&s, 3, 1)]).unwrap();
        let g = poly(&s, &[(1, 1), (2, 1)]);
        let one = LPoly::constant(NFElement::one(s.field()));
        let a = ScaledRIdeal::new(g.clone(), i2).unwrap();
        let b = ScaledRIdeal::new(one, i3).unwrap();
        let x = poly(&s, &[(6, 1), (1, 1)]).mul(&g);
        let (fa, fb) = factor_scaled(&s, &x, &a, &b, 10).unwrap().holds().cloned().unwrap();
        assert_eq!(fa.mul(&fb), x);
        assert!(ScaledRIdeal::new(g.shift(1), a.ideal.clone()).is_err());
    }

    #[test]
    fn quadratic_order_base() {
        let l = NumberField::quadratic(-5).unwrap();
        let d = DomainSpec::quadratic(-5).unwrap();
        let s = DxlSpec::new(d.clone(), l.clone()).unwrap();
        assert_eq!(s.relative_degree(), 1);
        let w = crate::rings::RingElement::Quad(crate::rings::QuadInt::new(1, 1));
        let p = CanonicalRIdeal::from_base_ideal(&s, 0, &[d.from_int(2), w]).unwrap();
        assert_eq!(p.display(&s).to_string(), "ideal0(2, 1+w)");
        let p2 = r_ideal_product(&s, &p, &p).unwrap();
        // (2, 1+w)^2 = (2)
        assert_eq!(p2, CanonicalRIdeal::from_base_ideal(&s, 0, &[d.from_int(2)]).unwrap());
        let x = LPoly::new(&l, vec![NFElement::from_int(&l, 6), NFElement::from_rational(&l, Rational::from_integer(7.into()))]);
        let (a, b) = factor_in_product(&s, &x, &p, &p, 4).unwrap().holds().cloned().unwrap();
        assert_eq!(a.mul(&b), x);
        // 2 is irreducible, so it has no factorisation inside P*P.
        let two = LPoly::constant(NFElement::from_int(&l, 2));
        assert!(factor_in_product(&s, &two, &p, &p, 4).unwrap().is_fails());
        assert!(DxlSpec::new(d, NumberField::quadratic(2).unwrap()).is_err());
    }
}
