//! Oracles shared by the integration tests. They use plain machine integers
//! and their own reductions, never the library's lattice code.
#![allow(dead_code)]

use condense_core::exactnum::Rational;
use condense_core::ideals::IdealHandle;
use condense_core::rings::{DomainSpec, QuadInt, RingElement};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

pub fn lcm(a: i128, b: i128) -> i128 {
    a.lcm(&b)
}

/// Full-rank sublattice of Z^2 as rows `(p, q), (0, r)` with `p, r > 0`, `0 <= q < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub p: i128,
    pub q: i128,
    pub r: i128,
}

impl Hnf {
    pub fn span(vs: &[(i128, i128)]) -> Hnf {
        let mut rows: Vec<(i128, i128)> = vs.iter().copied().filter(|&v| v != (0, 0)).collect();
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].0 != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| rows[i].0.abs()).unwrap();
            let (a, b) = rows[piv];
            for &i in &nz {
                if i != piv {
                    let k = rows[i].0 / a;
                    rows[i].0 -= k * a;
                    rows[i].1 -= k * b;
                }
            }
        }
        let piv = rows.iter().position(|v| v.0 != 0).expect("rank 2");
        let (mut p, mut q) = rows[piv];
        let r = rows.iter().enumerate().filter(|&(i, _)| i != piv).fold(0, |g, (_, v)| gcd(g, v.1)).abs();
        assert!(r != 0, "rank 2");
        if p < 0 {
            p = -p;
            q = -q;
        }
        Hnf { p, q: q.rem_euclid(r), r }
    }

    pub fn det(&self) -> i128 {
        self.p * self.r
    }

    pub fn contains(&self, (x, y): (i128, i128)) -> bool {
        x % self.p == 0 && (y - (x / self.p) * self.q) % self.r == 0
    }

    pub fn contains_all(&self, vs: &[(i128, i128)]) -> bool {
        vs.iter().all(|&v| self.contains(v))
    }
}

/// `(a + b w)(c + e w)` with `w^2 = d`.
pub fn qmul(d: i128, (a, b): (i128, i128), (c, e): (i128, i128)) -> (i128, i128) {
    (a * c + d * b * e, a * e + b * c)
}

/// The ideal of Z[√d] generated by `gens`, spanned over Z by `g` and `g w`.
pub fn quad_ideal(d: i128, gens: &[(i128, i128)]) -> Hnf {
    let vs: Vec<(i128, i128)> = gens.iter().flat_map(|&g| [g, qmul(d, g, (0, 1))]).collect();
    Hnf::span(&vs)
}

pub fn quad_elem(v: (i128, i128)) -> RingElement {
    RingElement::Quad(QuadInt::new(v.0 as i64, v.1 as i64))
}

pub fn quad_handle(d: &DomainSpec, gens: &[(i128, i128)]) -> IdealHandle {
    let es: Vec<RingElement> = gens.iter().map(|&g| quad_elem(g)).collect();
    IdealHandle::generated(d, &es).unwrap()
}

pub fn to_i128(q: &Rational) -> Option<i128> {
    if q.is_integer() {
        q.to_integer().to_i128()
    } else {
        None
    }
}

/// Basis rows of a lattice ideal.
pub fn rows(i: &IdealHandle) -> Vec<Vec<Rational>> {
    match i {
        IdealHandle::Lattice(f) => f.basis(),
        other => panic!("not a lattice ideal: {other}"),
    }
}

pub fn int_rows(i: &IdealHandle) -> Vec<(i128, i128)> {
    rows(i)
        .iter()
        .map(|r| (to_i128(&r[0]).expect("integral"), to_i128(&r[1]).expect("integral")))
        .collect()
}

/// The positive generator of an ideal of Z or a fractional ideal of Q over Z.
pub fn z_generator(i: &IdealHandle) -> Rational {
    let r = rows(i);
    assert_eq!(r.len(), 1);
    r[0][0].abs()
}

/// Absolute determinant of a rational 2x2 basis.
pub fn det2(r: &[Vec<Rational>]) -> Rational {
    assert_eq!(r.len(), 2);
    (&r[0][0] * &r[1][1] - &r[0][1] * &r[1][0]).abs()
}
