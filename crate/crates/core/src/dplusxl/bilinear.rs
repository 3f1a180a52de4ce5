//! Exact solver for `(a + bμ)(c + dν) = τ` over Q and the scalar splitting
//! of an element of a product of D-submodules of L.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DxlSpec, Submodule};
use crate::condensed::subtle;
use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, rational_roots, solve_unique, NFElement, QPoly, Rational};
use crate::ideals::IdealHandle;
use crate::rings::{coefficient_vectors, DomainSpec};
use crate::verdict::Verdict;

/// Rationals with `(a + bμ)(c + dν) = τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSolution {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl PairSolution {
    fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        PairSolution { a, b, c, d }
    }

    pub fn left(&self, mu: &NFElement) -> NFElement {
        &NFElement::from_rational(mu.field(), self.a.clone()) + &mu.scale(&self.b)
    }

    pub fn right(&self, nu: &NFElement) -> NFElement {
        &NFElement::from_rational(nu.field(), self.c.clone()) + &nu.scale(&self.d)
    }

    pub fn check(&self, mu: &NFElement, nu: &NFElement, tau: &NFElement) -> bool {
        &(&self.left(mu) * &self.right(nu)) == tau
    }
}

impl fmt::Display for PairSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a, b, c, d) = ({}, {}, {}, {})",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c),
            fmt_rational(&self.d)
        )
    }
}

/// Proof that `τ ∉ span(1, μ)·span(1, ν)`.
///
/// With `u = 1 + sμ`, `τ` lies in `u·span(1, ν)` exactly when every 3×3
/// minor of the coordinate matrix `[u, uν, τ]` vanishes. The minors are
/// polynomials of degree ≤ 2 in `s`; their gcd has no rational root, and the
/// remaining chart `a = 0` is inconsistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub mu: NFElement,
    pub nu: NFElement,
    pub tau: NFElement,
    pub minors: Vec<QPoly>,
    pub gcd: QPoly,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is not in span(1, {})*span(1, {}): chart minors have gcd {} with no rational root and the chart a = 0 is inconsistent",
            self.tau, self.mu, self.nu, self.gcd
        )
    }
}

impl Refutation {
    /// Re-derives the minors by evaluating determinants at `s = 0, 1, 2` and
    /// interpolating, then re-checks the gcd, its roots and the point chart.
    pub fn replay(&self) -> Result<Vec<String>> {
        let mut lines = Vec::new();
        let n = self.tau.coords().len();
        let (u0, u1, w0, w1) = chart_columns(&self.mu, &self.nu);
        let t = self.tau.coords();
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let at = |s: i64| {
                        let s = Rational::from_integer(s.into());
                        let col = |a: &[Rational], b: &[Rational], r: usize| &a[r] + &s * &b[r];
                        let m = [
                            [col(&u0, &u1, i), col(&w0, &w1, i), t[i].clone()],
                            [col(&u0, &u1, j), col(&w0, &w1, j), t[j].clone()],
                            [col(&u0, &u1, k), col(&w0, &w1, k), t[k].clone()],
                        ];
                        det3(&m)
                    };
                    let (p0, p1, p2) = (at(0), at(1), at(2));
                    let two = Rational::from_integer(2.into());
                    let c2 = (&p2 - &p1 * &two + &p0) / &two;
                    let c1 = &p1 - &p0 - &c2;
                    let interp = QPoly::new(vec![p0, c1, c2]);
                    if self.minors.get(idx) != Some(&interp) {
                        return Err(Error::Consistency(format!("minor ({i},{j},{k}) does not replay")));
                    }
                    lines.push(format!("minor rows ({i},{j},{k}) = {interp}"));
                    idx += 1;
                }
            }
        }
        if idx != self.minors.len() {
            return Err(Error::Consistency("minor count does not replay".into()));
        }
        let g = poly_gcd(&self.minors);
        if g != self.gcd || g.is_zero() {
            return Err(Error::Consistency(format!("gcd of minors is {g}, recorded {}", self.gcd)));
        }
        let roots = rational_roots(&g)?;
        if !roots.is_empty() {
            return Err(Error::Consistency(format!("gcd {g} has rational roots")));
        }
        lines.push(format!("gcd {g} has no rational root"));
        let mu_nu = &self.mu * &self.nu;
        if solve_unique(&[self.mu.coords().to_vec(), mu_nu.coords().to_vec()], t).is_some() {
            return Err(Error::Consistency("chart a = 0 is solvable".into()));
        }
        lines.push(format!("{} not in span({}, {})", self.tau, self.mu, mu_nu));
        Ok(lines)
    }
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Coordinates of `1`, `μ`, `ν`, `μν`: the chart columns are `u0 + s·u1` and `w0 + s·w1`.
fn chart_columns(mu: &NFElement, nu: &NFElement) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let one = NFElement::one(mu.field());
    (one.coords().to_vec(), mu.coords().to_vec(), nu.coords().to_vec(), (mu * nu).coords().to_vec())
}

fn poly_gcd(ps: &[QPoly]) -> QPoly {
    ps.iter().fold(QPoly::zero(), |g, p| g.gcd(p))
}

fn chart_minors(mu: &NFElement, nu: &NFElement, tau: &NFElement) -> Vec<QPoly> {
    let (u0, u1, w0, w1) = chart_columns(mu, nu);
    let n = u0.len();
    let u = |r: usize| QPoly::new(vec![u0[r].clone(), u1[r].clone()]);
    let w = |r: usize| QPoly::new(vec![w0[r].clone(), w1[r].clone()]);
    let t = |r: usize| QPoly::constant(tau.coords()[r].clone());
    let cross = |a: usize, b: usize| &(&u(a) * &w(b)) - &(&u(b) * &w(a));
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = &(&(&t(i) * &cross(j, k)) - &(&t(j) * &cross(i, k))) + &(&t(k) * &cross(i, j));
                out.push(d);
            }
        }
    }
    out
}

/// Decides `τ ∈ span(1, μ)·span(1, ν)` for `μ, ν ∉ Q`, returning a solution
/// or a replayable refutation.
pub fn bilinear_factor(tau: &NFElement, mu: &NFElement, nu: &NFElement) -> Result<Verdict<PairSolution, Refutation>> {
    tau.same_field(mu)?;
    tau.same_field(nu)?;
    if mu.as_rational().is_some() || nu.as_rational().is_some() {
        return Err(Error::Precondition("bilinear_factor needs mu and nu outside Q".into()));
    }
    let (u0, u1, w0, w1) = chart_columns(mu, nu);
    let chart = |s: &Rational| -> Option<PairSolution> {
        let u: Vec<Rational> = u0.iter().zip(&u1).map(|(a, b)| a + s * b).collect();
        let w: Vec<Rational> = w0.iter().zip(&w1).map(|(a, b)| a + s * b).collect();
        let cd = solve_unique(&[u, w], tau.coords())?;
        Some(PairSolution::new(Rational::one(), s.clone(), cd[0].clone(), cd[1].clone()))
    };
    let minors = chart_minors(mu, nu, tau);
    let gcd = poly_gcd(&minors);
    let found = if gcd.is_zero() {
        chart(&Rational::one())
    } else {
        rational_roots(&gcd)?.iter().find_map(chart)
    };
    let found = found.or_else(|| {
        let mu_nu = mu * nu;
        solve_unique(&[mu.coords().to_vec(), mu_nu.coords().to_vec()], tau.coords())
            .map(|cd| PairSolution::new(Rational::zero(), Rational::one(), cd[0].clone(), cd[1].clone()))
    });
    match found {
        Some(sol) if sol.check(mu, nu, tau) => Ok(Verdict::Holds(sol)),
        Some(sol) => Err(Error::Consistency(format!("{sol} does not expand to {tau}"))),
        None => Ok(Verdict::Fails(Refutation { mu: mu.clone(), nu: nu.clone(), tau: tau.clone(), minors, gcd })),
    }
}

/// Decides whether `1 + αβ = (a + bα)(c + dβ)` has a solution in Q.
pub fn solve_pair(alpha: &NFElement, beta: &NFElement) -> Result<Verdict<PairSolution, Refutation>> {
    alpha.same_field(beta)?;
    let tau = &NFElement::one(alpha.field()) + &(alpha * beta);
    let (zero, one) = (Rational::zero(), Rational::one());
    let v = if let Some(a) = alpha.as_rational() {
        Verdict::Holds(PairSolution::new(one.clone(), zero.clone(), one, a.clone()))
    } else if let Some(b) = beta.as_rational() {
        Verdict::Holds(PairSolution::new(one.clone(), b.clone(), one, zero))
    } else {
        bilinear_factor(&tau, alpha, beta)?
    };
    if let Verdict::Holds(sol) = &v {
        if !sol.check(alpha, beta, &tau) {
            return Err(Error::Consistency(format!("{sol} does not expand to {tau}")));
        }
    }
    Ok(v)
}

/// Splits `γ ∈ MN` as `γ₁γ₂` with `γ₁ ∈ M`, `γ₂ ∈ N`.
///
/// Complete when either module is principal, when D = Q and both modules are
/// 2-dimensional, and when D = Z[√d]. Rank ≥ 2 Z-lattices are searched up to
/// `bound`.
pub fn scalar_factor(
    spec: &DxlSpec,
    gamma: &NFElement,
    m: &Submodule,
    n: &Submodule,
    bound: u64,
) -> Result<Verdict<(NFElement, NFElement), String>> {
    if !m.product(n, spec)?.contains(gamma) {
        return Err(Error::Precondition(format!("{gamma} is not in the product of the modules")));
    }
    let v = split(spec, gamma, m, n, bound)?;
    if let Verdict::Holds((g1, g2)) = &v {
        if !m.contains(g1) || !n.contains(g2) || &(g1 * g2) != gamma {
            return Err(Error::Consistency(format!("split {g1} * {g2} of {gamma} does not check")));
        }
    }
    Ok(v)
}

fn split(
    spec: &DxlSpec,
    gamma: &NFElement,
    m: &Submodule,
    n: &Submodule,
    bound: u64,
) -> Result<Verdict<(NFElement, NFElement), String>> {
    if gamma.is_zero() {
        return Ok(Verdict::Holds((m.basis().remove(0), gamma.clone())));
    }
    if let Verdict::Holds(g) = m.principal_generator(spec)? {
        return Ok(Verdict::Holds((g.clone(), gamma.checked_div(&g)?)));
    }
    if let Verdict::Holds(g) = n.principal_generator(spec)? {
        return Ok(Verdict::Holds((gamma.checked_div(&g)?, g)));
    }
    match spec.base() {
        DomainSpec::FieldDomain(_) => {
            let (mb, nb) = (m.basis(), n.basis());
            if mb.len() > 2 || nb.len() > 2 {
                return Ok(Verdict::unknown(bound, "spans of dimension above 2 are outside the two-parameter solver"));
            }
            let mu = mb[1].checked_div(&mb[0])?;
            let nu = nb[1].checked_div(&nb[0])?;
            let tau = gamma.checked_div(&(&mb[0] * &nb[0]))?;
            Ok(match bilinear_factor(&tau, &mu, &nu)? {
                Verdict::Holds(sol) => Verdict::Holds((&mb[0] * &sol.left(&mu), &nb[0] * &sol.right(&nu))),
                Verdict::Fails(r) => Verdict::Fails(r.to_string()),
                Verdict::Unknown(sb) => Verdict::Unknown(sb),
            })
        }
        DomainSpec::QuadraticOrder { .. } => {
            let (fm, fn_) = (m.as_fractional().expect("quadratic base"), n.as_fractional().expect("quadratic base"));
            let (dm, dn) = (fm.den().clone(), fn_.den().clone());
            let int_kvec = |d: &BigInt| vec![Rational::from_integer(d.clone()), Rational::zero()];
            let i = IdealHandle::Lattice(fm.scale(&int_kvec(&dm))?);
            let j = IdealHandle::Lattice(fn_.scale(&int_kvec(&dn))?);
            let x = spec
                .to_base(&gamma.scale(&Rational::from_integer(&dm * &dn)))
                .ok_or_else(|| Error::Consistency(format!("cleared {gamma} is not in D")))?;
            Ok(match subtle(&x, &i, &j, bound)? {
                Verdict::Holds(s) => {
                    let g1 = spec.embed(&s.i)?.scale(&Rational::new(One::one(), dm));
                    let g2 = spec.embed(&s.j)?.scale(&Rational::new(One::one(), dn));
                    Verdict::Holds((g1, g2))
                }
                Verdict::Fails(w) => Verdict::Fails(w),
                Verdict::Unknown(sb) => Verdict::Unknown(sb),
            })
        }
        _ => {
            let mb = m.basis();
            for v in coefficient_vectors(mb.len(), bound) {
                let g1 = mb
                    .iter()
                    .zip(&v)
                    .fold(NFElement::zero(spec.field()), |acc, (b, &c)| &acc + &b.scale(&Rational::from_integer(c.into())));
                if g1.is_zero() {
                    continue;
                }
                let g2 = gamma.checked_div(&g1)?;
                if n.contains(&g2) {
                    return Ok(Verdict::Holds((g1, g2)));
                }
            }
            Ok(Verdict::unknown(bound, format!("no split of {gamma} with the first factor of height <= {bound}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, NumberField};

    #[test]
    fn pair_examples() {
        let l = NumberField::quadratic(2).unwrap();
        let zero = NFElement::zero(&l);
        let sol = solve_pair(&zero, &zero).unwrap().holds().cloned().unwrap();
        assert_eq!(sol, PairSolution::new(rat(1, 1), rat(0, 1), rat(1, 1), rat(0, 1)));
        let th = NFElement::generator(&l);
        let sol = solve_pair(&th, &-&th).unwrap().holds().cloned().unwrap();
        assert_eq!(sol.to_string(), "(a, b, c, d) = (1, 1, 1, 1)");
    }

    #[test]
    fn quartic_pair_is_refuted() {
        let l = NumberField::from_ints(&[-2, 0, 0, 0, 1]).unwrap();
        let th = NFElement::generator(&l);
        let r = solve_pair(&th, &th.pow(2)).unwrap().fails().cloned().unwrap();
        assert!(r.replay().unwrap().len() >= 3);
        let mut bad = r.clone();
        bad.tau = NFElement::one(&l);
        assert!(bad.replay().is_err());
    }

    #[test]
    fn cubic_pairs_solve() {
        let l = NumberField::from_ints(&[-2, 0, 0, 1]).unwrap();
        let th = NFElement::generator(&l);
        let one = NFElement::one(&l);
        for (a, b) in [(th.clone(), th.pow(2)), (&th + &one, th.clone()), (th.pow(2), &th.pow(2) - &th)] {
            let v = solve_pair(&a, &b).unwrap();
            if let Verdict::Fails(r) = &v {
                r.replay().unwrap();
            }
        }
    }

    #[test]
    fn scalar_splits() {
        let l = NumberField::quadratic(2).unwrap();
        let q = DxlSpec::new(DomainSpec::rationals(), l.clone()).unwrap();
        let th = NFElement::generator(&l);
        let one = NFElement::one(&l);
        let m = Submodule::generated(&q, &[one.clone(), th.clone()]).unwrap();
        // span(1, th) is all of L; a line through 1 + th is principal.
        assert!(m.is_full());
        let z = DxlSpec::new(DomainSpec::Integers, NumberField::rationals()).unwrap();
        let c = |n, d| NFElement::from_rational(z.field(), rat(n, d));
        let half = Submodule::generated(&z, &[c(1, 2)]).unwrap();
        let third = Submodule::generated(&z, &[c(1, 3)]).unwrap();
        let (g1, g2) = scalar_factor(&z, &c(1, 6), &half, &third, 5).unwrap().holds().cloned().unwrap();
        assert_eq!((g1, g2), (c(1, 2), c(1, 3)));
        assert!(scalar_factor(&z, &c(1, 5), &half, &third, 5).is_err());
    }

    #[test]
    fn quadratic_order_split_needs_divisor_search() {
        let l = NumberField::quadratic(-5).unwrap();
        let d = DomainSpec::quadratic(-5).unwrap();
        let s = DxlSpec::new(d, l.clone()).unwrap();
        let p = Submodule::generated(&s, &[NFElement::from_int(&l, 2), &NFElement::one(&l) + &NFElement::generator(&l)])
            .unwrap();
        assert!(p.principal_generator(&s).unwrap().is_fails());
        let (g1, g2) = scalar_factor(&s, &NFElement::from_int(&l, 6), &p, &p, 4).unwrap().holds().cloned().unwrap();
        assert_eq!(&g1 * &g2, NFElement::from_int(&l, 6));
    }
}
