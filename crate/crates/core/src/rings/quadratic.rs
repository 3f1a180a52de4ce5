//! Arithmetic in Z[ω], ω = √d, and norm-form searches.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{exact_sqrt, isqrt, positive_divisors};

/// Largest Pell coordinate tried when looking for a fundamental unit.
pub const PELL_SEARCH_CAP: u64 = 2_000_000;

/// `a + b ω` with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn mul(&self, o: &QuadInt, d: &BigInt) -> QuadInt {
        QuadInt {
            a: &self.a * &o.a + d * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn add(&self, o: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> QuadInt {
        QuadInt { a: -&self.a, b: -&self.b }
    }

    pub fn conj(&self) -> QuadInt {
        QuadInt { a: self.a.clone(), b: -&self.b }
    }

    pub fn norm(&self, d: &BigInt) -> BigInt {
        &self.a * &self.a - d * &self.b * &self.b
    }

    /// Exact quotient `self / r` in Z[ω], if it exists.
    pub fn div_exact(&self, r: &QuadInt, d: &BigInt) -> Option<QuadInt> {
        let n = r.norm(d);
        if n.is_zero() {
            return None;
        }
        let p = self.mul(&r.conj(), d);
        (p.a.is_multiple_of(&n) && p.b.is_multiple_of(&n)).then(|| QuadInt { a: p.a / &n, b: p.b / &n })
    }

    pub fn divides(&self, x: &QuadInt, d: &BigInt) -> bool {
        x.div_exact(self, d).is_some()
    }

    pub fn is_unit(&self, d: &BigInt) -> bool {
        self.norm(d).abs().is_one()
    }

    pub fn associated(&self, o: &QuadInt, d: &BigInt) -> bool {
        self.norm(d).abs() == o.norm(d).abs() && self.divides(o, d)
    }

    fn canonical_key(&self) -> (BigInt, bool, BigInt, bool) {
        (self.b.abs(), self.b.is_negative(), self.a.abs(), self.a.is_negative())
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |b: &BigInt| -> String {
            if b.is_one() {
                "w".into()
            } else if *b == -BigInt::one() {
                "-w".into()
            } else {
                format!("{b}*w")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", w(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}", self.a, w(&-&self.b))
                } else {
                    write!(f, "{}+{}", self.a, w(&self.b))
                }
            }
        }
    }
}

/// Fundamental unit `u + v√d` of Z[√d] for `d > 1`, found by scanning `v`.
pub fn fundamental_unit(d: &BigInt) -> Option<(BigInt, BigInt)> {
    debug_assert!(d > &BigInt::one());
    for v in 1..=PELL_SEARCH_CAP {
        let v = BigInt::from(v);
        let dv2 = d * &v * &v;
        for s in [&dv2 - 1, &dv2 + 1] {
            if let Some(u) = exact_sqrt(&s) {
                if !u.is_zero() {
                    return Some((u, v));
                }
            }
        }
    }
    None
}

/// Elements of norm `±n` forming a complete set of representatives for the
/// associate classes (plus possibly some associates). For `d > 0` the search
/// is confined to the box cut out by the fundamental unit; `None` if that
/// unit was not found.
pub fn norm_candidates(d: &BigInt, n: &BigInt) -> Option<Vec<QuadInt>> {
    let n = n.abs();
    let mut out = Vec::new();
    if d.is_negative() {
        let md = -d;
        let bmax = isqrt(&(&n / &md));
        let mut b = -bmax.clone();
        while b <= bmax {
            let rest = &n - &md * &b * &b;
            if let Some(a) = exact_sqrt(&rest) {
                out.push(QuadInt::new(a.clone(), b.clone()));
                if !a.is_zero() {
                    out.push(QuadInt::new(-a, b.clone()));
                }
            }
            b += 1;
        }
    } else {
        let (u, _) = fundamental_unit(d)?;
        // Some associate satisfies |x| <= (u+1)√n and |y| <= (u+1)√(n/d).
        let cap = (&u + 1) * (&u + 1) * &n;
        let bmax: BigInt = isqrt(&(&cap / d)) + 1;
        let mut b = -bmax.clone();
        while b <= bmax {
            let db2 = d * &b * &b;
            for target in [&n + &db2, &db2 - &n] {
                if let Some(a) = exact_sqrt(&target) {
                    out.push(QuadInt::new(a.clone(), b.clone()));
                    if !a.is_zero() {
                        out.push(QuadInt::new(-a, b.clone()));
                    }
                }
            }
            b += 1;
        }
    }
    out.sort_by_key(QuadInt::canonical_key);
    out.dedup();
    Some(out)
}

/// One representative per associate class of divisors of `x`, ordered by
/// norm then canonically. `None` when completeness cannot be guaranteed.
pub fn divisor_classes(x: &QuadInt, d: &BigInt) -> Option<Vec<QuadInt>> {
    let nx = x.norm(d);
    if nx.is_zero() {
        return None;
    }
    let mut reps: Vec<QuadInt> = Vec::new();
    for n in positive_divisors(&nx) {
        let mut cands: Vec<QuadInt> = norm_candidates(d, &n)?
            .into_iter()
            .filter(|r| r.divides(x, d))
            .collect();
        cands.sort_by_key(QuadInt::canonical_key);
        for c in cands {
            if !reps.iter().any(|r| r.associated(&c, d)) {
                reps.push(c);
            }
        }
    }
    Some(reps)
}
