//! Monomial ideals of Q[[t^2, t^3]] against plain exponent-set enumeration.

use std::collections::BTreeSet;

use condense_core::condensed::{atom_prime_criterion, star_property};
use condense_core::exec::Strategy;
use condense_core::ideals::{ideal_intersect, ideal_product, ideal_sum, IdealHandle};
use condense_core::rings::{DomainSpec, RingElement};

const TRUNC: i64 = 24;

fn semigroup() -> BTreeSet<i64> {
    (0..=TRUNC).filter(|&e| e != 1).collect()
}

/// Exponents of the ideal generated by `t^g`, for g in `gens`, below the truncation.
fn span(gens: &[i64]) -> BTreeSet<i64> {
    let s = semigroup();
    gens.iter().flat_map(|&g| s.iter().map(move |&e| e + g)).filter(|&e| e <= TRUNC).collect()
}

fn exps(i: &IdealHandle) -> BTreeSet<i64> {
    let IdealHandle::Monomial { ideal, .. } = i else { panic!("monomial ideal expected") };
    (0..=TRUNC).filter(|&e| ideal.contains_exponent(e)).collect()
}

fn handle(gens: &[i64]) -> IdealHandle {
    IdealHandle::monomial(TRUNC as usize, gens).unwrap()
}

fn gen_lists() -> Vec<Vec<i64>> {
    let exps: Vec<i64> = (0..=8).filter(|&e| e != 1).collect();
    let mut out: Vec<Vec<i64>> = exps.iter().map(|&e| vec![e]).collect();
    for (k, &a) in exps.iter().enumerate() {
        for &b in &exps[k + 1..] {
            out.push(vec![a, b]);
        }
    }
    out
}

#[test]
fn product_sum_intersection_match_exponent_sets() {
    let lists = gen_lists();
    for a in &lists {
        for b in &lists {
            let (ia, ib) = (handle(a), handle(b));
            let (ea, eb) = (span(a), span(b));
            let prod: BTreeSet<i64> =
                ea.iter().flat_map(|&x| eb.iter().map(move |&y| x + y)).filter(|&e| e <= TRUNC).collect();
            // Orders near the truncation are not represented faithfully; compare below it.
            let cut = |s: BTreeSet<i64>| -> BTreeSet<i64> { s.into_iter().filter(|&e| e <= TRUNC - 2).collect() };
            assert_eq!(cut(exps(&ideal_product(&ia, &ib).unwrap())), cut(prod), "{a:?} * {b:?}");
            assert_eq!(cut(exps(&ideal_sum(&ia, &ib).unwrap())), cut(&ea | &eb), "{a:?} + {b:?}");
            assert_eq!(cut(exps(&ideal_intersect(&ia, &ib).unwrap())), cut(&ea & &eb), "{a:?} ∩ {b:?}");
        }
    }
}

fn t(e: usize) -> RingElement {
    DomainSpec::semigroup(TRUNC as usize).unwrap().monomial(e).unwrap()
}

#[test]
fn star_failure_matches_enumeration() {
    let d = DomainSpec::semigroup(TRUNC as usize).unwrap();
    let v = star_property(&[t(2), t(3)], &[t(2), t(3)], &d).unwrap();
    let f = v.fails().expect("star property fails");
    f.verify().unwrap();
    let meet = &span(&[2]) & &span(&[3]);
    let lhs: BTreeSet<i64> = meet.iter().flat_map(|&x| meet.iter().map(move |&y| x + y)).filter(|&e| e <= TRUNC).collect();
    let rhs: BTreeSet<i64> = &(&span(&[4]) & &span(&[5])) & &span(&[6]);
    assert_eq!(lhs.iter().next(), Some(&10));
    assert_eq!(exps(&f.lhs), lhs);
    assert_eq!(exps(&f.rhs), rhs);
    let missing = rhs.difference(&lhs).next().copied();
    assert_eq!(missing, Some(8));
    assert_eq!(f.witness, t(8));
}

#[test]
fn t_squared_is_an_atom_but_not_prime() {
    let d = DomainSpec::semigroup(TRUNC as usize).unwrap();
    let v = atom_prime_criterion(&t(2), &d, 4, Strategy::Sequential).unwrap();
    let f = v.fails().expect("t^2 is not prime");
    assert_eq!(f.b, t(3));
    f.verify(&t(2), &d).unwrap();
}
