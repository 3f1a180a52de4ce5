mod common;

use common::quad_handle;
use condense_core::ideals::{ideal_colon, ideal_intersect, ideal_product, ideal_sum, v_closure, IdealHandle};
use condense_core::rings::DomainSpec;
use proptest::prelude::*;

fn gens() -> impl Strategy<Value = Vec<(i128, i128)>> {
    prop::collection::vec((-6i128..=6, -6i128..=6), 1..3).prop_filter("nonzero", |g| g.iter().any(|&v| v != (0, 0)))
}

fn dom() -> DomainSpec {
    DomainSpec::quadratic(-3).unwrap()
}

fn eq(a: &IdealHandle, b: &IdealHandle) -> bool {
    a.equals(b).unwrap()
}

proptest! {
    #[test]
    fn product_is_commutative_and_associative(a in gens(), b in gens(), c in gens()) {
        let d = dom();
        let (i, j, k) = (quad_handle(&d, &a), quad_handle(&d, &b), quad_handle(&d, &c));
        let p = |x: &IdealHandle, y: &IdealHandle| ideal_product(x, y).unwrap();
        prop_assert_eq!(p(&i, &j), p(&j, &i));
        prop_assert_eq!(p(&p(&i, &j), &k), p(&i, &p(&j, &k)));
    }

    #[test]
    fn lattice_laws(a in gens(), b in gens(), c in gens()) {
        let d = dom();
        let (i, j, k) = (quad_handle(&d, &a), quad_handle(&d, &b), quad_handle(&d, &c));
        let s = ideal_sum(&i, &j).unwrap();
        let m = ideal_intersect(&i, &j).unwrap();
        prop_assert!(s.contains_ideal(&i).unwrap() && s.contains_ideal(&j).unwrap());
        prop_assert!(i.contains_ideal(&m).unwrap() && j.contains_ideal(&m).unwrap());
        prop_assert!(m.contains_ideal(&ideal_product(&i, &j).unwrap()).unwrap());
        let lhs = ideal_product(&i, &ideal_sum(&j, &k).unwrap()).unwrap();
        let rhs = ideal_sum(&ideal_product(&i, &j).unwrap(), &ideal_product(&i, &k).unwrap()).unwrap();
        prop_assert!(eq(&lhs, &rhs));
    }

    #[test]
    fn colon_and_closure(a in gens(), b in gens()) {
        let d = dom();
        let (i, j) = (quad_handle(&d, &a), quad_handle(&d, &b));
        let c = ideal_colon(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&ideal_product(&c, &j).unwrap()).unwrap());
        let v = v_closure(&i).unwrap();
        prop_assert!(v.contains_ideal(&i).unwrap());
        prop_assert!(eq(&v_closure(&v).unwrap(), &v));
    }
}
