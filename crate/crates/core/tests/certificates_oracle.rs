mod common;

use common::*;
use condense_core::condensed::{
    atom_prime_criterion, lemma_a1_certificates, polynomial_ring_witness, NonCondensednessCertificate,
};
use condense_core::exec::Strategy;
use condense_core::ideals::{ideal_intersect, ideal_inverse, ideal_product, is_principal, v_closure, v_coprime, IdealHandle};
use condense_core::rings::{DomainSpec, RingElement};
use rand::Rng;

fn z(n: i64) -> RingElement {
    RingElement::Int(n.into())
}

#[test]
fn minus_five_has_an_invertible_nonprincipal_ideal() {
    let d = DomainSpec::quadratic(-5).unwrap();
    let certs = lemma_a1_certificates(&d, 3, Strategy::Parallel).unwrap();
    let ideal = certs
        .iter()
        .find_map(|c| match c {
            NonCondensednessCertificate::InvertibleNonPrincipal { ideal } => Some(ideal.clone()),
            _ => None,
        })
        .expect("class group of order 2");
    assert_eq!(Hnf::span(&int_rows(&ideal)), quad_ideal(-5, &[(2, 0), (1, 1)]));
    // I·I⁻¹ = D by the oracle, and no element of I has norm N(I) = 2.
    let inv = ideal_inverse(&ideal).unwrap();
    assert!(ideal_product(&ideal, &inv).unwrap().is_unit_ideal().unwrap());
    assert!(is_principal(&ideal).unwrap().is_fails());
    let h = quad_ideal(-5, &[(2, 0), (1, 1)]);
    assert_eq!(h.det(), 2);
    for a in -3i128..=3 {
        for b in -3i128..=3 {
            if h.contains((a, b)) {
                assert_ne!(a * a + 5 * b * b, 2);
            }
        }
    }
    for c in &certs {
        c.verify().unwrap();
    }
}

#[test]
fn integer_polynomial_ring_certificate_replays() {
    let cert = polynomial_ring_witness(&DomainSpec::Integers, &z(2), &z(3)).unwrap();
    assert_eq!(cert.kind(), "NonSubtleElement");
    assert_eq!(cert.to_string(), "NonSubtleElement(X, ideal(2, X), ideal(3, X)) in Z[X]");
    let log = cert.verify().unwrap();
    assert!(log.iter().any(|l| l.contains("= 1")));
    assert!(polynomial_ring_witness(&DomainSpec::Integers, &z(2), &z(4)).is_err());
}

#[test]
fn integers_have_no_certificate_up_to_height_twenty() {
    let certs = lemma_a1_certificates(&DomainSpec::Integers, 20, Strategy::Parallel).unwrap();
    assert!(certs.is_empty());
}

#[test]
fn atom_prime_criterion_cases() {
    let d = DomainSpec::quadratic(-5).unwrap();
    let two = quad_elem((2, 0));
    let f = atom_prime_criterion(&two, &d, 3, Strategy::Sequential).unwrap();
    let f = f.fails().expect("2 is not prime in Z[√-5]");
    assert_eq!(f.b, quad_elem((1, 1)));
    f.verify(&two, &d).unwrap();
    let pair = IdealHandle::generated(&d, &[two, f.b.clone()]).unwrap();
    assert!(!v_closure(&pair).unwrap().is_unit_ideal().unwrap());
    for p in [2, 3, 5, 7] {
        let v = atom_prime_criterion(&z(p), &DomainSpec::Integers, 10, Strategy::Sequential).unwrap();
        assert!(v.is_holds(), "{p}");
    }
}

#[test]
fn v_coprime_matches_gcd_over_integers() {
    let d = DomainSpec::Integers;
    for a in -30i64..=30 {
        for b in -30i64..=30 {
            if a.abs() <= 1 || b.abs() <= 1 {
                continue;
            }
            let coprime = gcd(a as i128, b as i128) == 1;
            assert_eq!(v_coprime(&z(a), &z(b), &d).unwrap(), coprime, "({a}, {b})");
            let meet = ideal_intersect(&IdealHandle::principal(&d, &z(a)).unwrap(), &IdealHandle::principal(&d, &z(b)).unwrap()).unwrap();
            let lcm_is_product = lcm(a as i128, b as i128) == (a as i128 * b as i128).abs();
            assert_eq!(z_generator(&meet) == condense_core::exactnum::Rational::from_integer((a * b).abs().into()), lcm_is_product);
        }
    }
}

#[test]
fn v_coprime_matches_comaximality_in_minus_five() {
    // Nonzero ideals of this Dedekind order are invertible, hence divisorial,
    // so (a, b)_v = D exactly when (a, b) = D.
    let d = DomainSpec::quadratic(-5).unwrap();
    let mut rng = rng(7);
    let mut seen = 0;
    while seen < 200 {
        let mut pick = || (rng.gen_range(-5i128..=5), rng.gen_range(-5i128..=5));
        let (a, b) = (pick(), pick());
        let norm = |v: (i128, i128)| v.0 * v.0 + 5 * v.1 * v.1;
        if norm(a) <= 1 || norm(b) <= 1 {
            continue;
        }
        seen += 1;
        let oracle = quad_ideal(-5, &[a, b]).det() == 1;
        let (ea, eb) = (quad_elem(a), quad_elem(b));
        assert_eq!(v_coprime(&ea, &eb, &d).unwrap(), oracle, "{a:?}, {b:?}");
        // aD ∩ bD = abD iff [O : aD ∩ bD] = N(a)N(b), and that index is N(a)N(b)/[O : (a, b)].
        let meet = ideal_intersect(&quad_handle(&d, &[a]), &quad_handle(&d, &[b])).unwrap();
        let idx = Hnf::span(&int_rows(&meet)).det();
        assert_eq!(idx == norm(a) * norm(b), oracle);
    }
}
