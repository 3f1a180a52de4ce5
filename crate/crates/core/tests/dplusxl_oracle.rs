//! Z + X·Q[X]: every canonical ideal is X^r(gZ + X·Q[X]) or X^r·Q[X], so
//! membership and products reduce to rational gcds.

use condense_core::dplusxl::{
    factor_in_product, factor_scaled, r_ideal_product, CanonicalRIdeal, DxlSpec, JPart, LPoly, ScaledRIdeal,
};
use condense_core::exactnum::{NFElement, NumberField, Rational};
use condense_core::rings::DomainSpec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn spec() -> DxlSpec {
    DxlSpec::new(DomainSpec::Integers, NumberField::rationals()).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The positive generator of the Z-module spanned by `xs`.
fn zgen(xs: &[Rational]) -> Rational {
    let nz: Vec<&Rational> = xs.iter().filter(|x| !x.is_zero()).collect();
    let num = nz.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
    let den = nz.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    Rational::new(num, den)
}

#[derive(Clone, Debug)]
enum Model {
    Module { r: usize, g: Rational },
    Full { r: usize },
}

impl Model {
    fn r(&self) -> usize {
        match self {
            Model::Module { r, .. } | Model::Full { r } => *r,
        }
    }

    fn contains(&self, p: &[Rational]) -> bool {
        let r = self.r();
        if p.iter().take(r).any(|c| !c.is_zero()) {
            return false;
        }
        match self {
            Model::Full { .. } => true,
            Model::Module { g, .. } => p.get(r).is_none_or(|c| (c / g).is_integer()),
        }
    }
}

fn coeffs(p: &LPoly) -> Vec<Rational> {
    p.coeffs().iter().map(|c| c.coords()[0].clone()).collect()
}

fn lpoly(cs: &[Rational]) -> LPoly {
    let f = NumberField::rationals();
    LPoly::new(&f, cs.iter().map(|c| NFElement::from_rational(&f, c.clone())).collect())
}

fn pmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// `a / b` when `b` divides `a` exactly.
fn pdiv(a: &[Rational], b: &[Rational]) -> Option<Vec<Rational>> {
    let (mut rem, b) = (trim(a.to_vec()), trim(b.to_vec()));
    if rem.len() < b.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut quo = vec![Rational::zero(); rem.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + b.len() - 1] / b.last().unwrap();
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quo[k] = c;
    }
    trim(rem).is_empty().then(|| trim(quo))
}

fn build(spec: &DxlSpec, r: usize, full: bool, gens: &[(i64, i64)]) -> (CanonicalRIdeal, Model) {
    let field = spec.field();
    if full && r > 0 {
        return (CanonicalRIdeal::full(spec, r as u32).unwrap(), Model::Full { r });
    }
    let den = |d: i64| if r == 0 { 1 } else { d };
    let qs: Vec<Rational> = gens.iter().map(|&(n, d)| q(n, den(d))).collect();
    let nf: Vec<NFElement> = qs.iter().map(|c| NFElement::from_rational(field, c.clone())).collect();
    (CanonicalRIdeal::module(spec, r as u32, &nf).unwrap(), Model::Module { r, g: zgen(&qs) })
}

fn nonzero_gen() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=20, any::<bool>(), 1i64..=20).prop_map(|(n, s, d)| (if s { -n } else { n }, d))
}

fn ideal_args() -> impl Strategy<Value = (usize, bool, Vec<(i64, i64)>)> {
    (0usize..3, any::<bool>(), prop::collection::vec(nonzero_gen(), 1..4))
}

fn tail() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=20), 0..=5)
}

/// `X^(r1+r2)·(k·g1·g2 + X·h)`, an element of the product.
fn sample_x(ma: &Model, mb: &Model, k: i64, h: &[(i64, i64)]) -> Vec<Rational> {
    let gamma = match (ma, mb) {
        (Model::Module { g: g1, .. }, Model::Module { g: g2, .. }) => g1 * g2 * Rational::from_integer(k.into()),
        _ => q(k, 7),
    };
    let mut v = vec![Rational::zero(); ma.r() + mb.r()];
    v.push(gamma);
    v.extend(h.iter().map(|&(n, d)| q(n, d)));
    trim(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn products_match_gcd_model((r1, f1, g1) in ideal_args(), (r2, f2, g2) in ideal_args()) {
        let s = spec();
        let (a, ma) = build(&s, r1, f1, &g1);
        let (b, mb) = build(&s, r2, f2, &g2);
        let p = r_ideal_product(&s, &a, &b).unwrap();
        prop_assert_eq!(p.r() as usize, r1 + r2);
        match (&ma, &mb, p.j()) {
            (Model::Module { g: x, .. }, Model::Module { g: y, .. }, JPart::Module(m)) => {
                let basis: Vec<Rational> = m.basis().iter().map(|e| e.coords()[0].clone()).collect();
                prop_assert_eq!(zgen(&basis), x * y);
            }
            (Model::Module { .. }, Model::Module { .. }, JPart::Full) => prop_assert!(false, "module product became full"),
            (_, _, j) => prop_assert!(matches!(j, JPart::Full)),
        }
    }

    #[test]
    fn every_product_element_splits(
        (r1, f1, g1) in ideal_args(),
        (r2, f2, g2) in ideal_args(),
        k in prop::sample::select(vec![-5i64, -4, -3, -2, -1, 1, 2, 3, 4, 5]),
        h in tail(),
    ) {
        let s = spec();
        let (a, ma) = build(&s, r1, f1, &g1);
        let (b, mb) = build(&s, r2, f2, &g2);
        let x = sample_x(&ma, &mb, k, &h);
        let v = factor_in_product(&s, &lpoly(&x), &a, &b, 4).unwrap();
        let (fa, fb) = v.holds().cloned().expect("Z is condensed and L = Q");
        let (ca, cb) = (coeffs(&fa), coeffs(&fb));
        prop_assert!(ma.contains(&ca), "{} not in A", fa);
        prop_assert!(mb.contains(&cb), "{} not in B", fb);
        prop_assert_eq!(pmul(&ca, &cb), x);
    }

    #[test]
    fn scaled_factorisation_keeps_multipliers(
        (r1, f1, g1) in ideal_args(),
        (r2, f2, g2) in ideal_args(),
        k in prop::sample::select(vec![-3i64, -1, 1, 2]),
        h in tail(),
        gt in prop::collection::vec((-9i64..=9, 1i64..=9), 1..3),
        ht in prop::collection::vec((-9i64..=9, 1i64..=9), 1..3),
    ) {
        let s = spec();
        let (a, ma) = build(&s, r1, f1, &g1);
        let (b, mb) = build(&s, r2, f2, &g2);
        let one = |t: &[(i64, i64)]| -> Vec<Rational> {
            trim(std::iter::once(Rational::one()).chain(t.iter().map(|&(n, d)| q(n, d))).collect())
        };
        let (g, hm) = (one(&gt), one(&ht));
        let y = sample_x(&ma, &mb, k, &h);
        let x = pmul(&pmul(&g, &hm), &y);
        let sa = ScaledRIdeal::new(lpoly(&g), a).unwrap();
        let sb = ScaledRIdeal::new(lpoly(&hm), b).unwrap();
        let v = factor_scaled(&s, &lpoly(&x), &sa, &sb, 4).unwrap();
        let (fa, fb) = v.holds().cloned().expect("splits");
        let (ca, cb) = (coeffs(&fa), coeffs(&fb));
        let pa = pdiv(&ca, &g).expect("g divides the first factor");
        let pb = pdiv(&cb, &hm).expect("h divides the second factor");
        prop_assert!(ma.contains(&pa));
        prop_assert!(mb.contains(&pb));
        prop_assert_eq!(pmul(&ca, &cb), x);
    }
}

#[test]
fn multiplier_must_have_unit_constant_term() {
    let s = spec();
    let a = CanonicalRIdeal::full(&s, 1).unwrap();
    assert!(ScaledRIdeal::new(lpoly(&[q(2, 1), q(1, 1)]), a).is_err());
}

#[test]
fn zgen_oracle_sanity() {
    assert_eq!(zgen(&[q(1, 2), q(1, 3)]), q(1, 6));
    assert_eq!(zgen(&[q(4, 1), q(-6, 1)]), q(2, 1));
    assert!(zgen(&[q(-3, 5)]).is_positive());
}
