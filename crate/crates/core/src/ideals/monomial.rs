//! Monomial (fractional) ideals of K[[t², t³]].
//!
//! An exponent set closed under adding ⟨2,3⟩ and bounded below always has
//! the form `{m} ∪ {m+1}? ∪ [m+2, ∞)`, so every such ideal is `(t^m)` or
//! `(t^m, t^{m+1})`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    min: i64,
    has_next: bool,
}

fn fmt_monomial(e: i64) -> String {
    match e {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{e}"),
    }
}

impl MonomialIdeal {
    pub fn principal(e: i64) -> MonomialIdeal {
        MonomialIdeal { min: e, has_next: false }
    }

    pub fn unit() -> MonomialIdeal {
        MonomialIdeal::principal(0)
    }

    /// Ideal generated by `t^e` for the given exponents.
    pub fn from_exponents(exps: &[i64]) -> Result<MonomialIdeal> {
        let min = *exps.iter().min().ok_or(Error::ZeroInput("monomial ideal generators"))?;
        Ok(MonomialIdeal { min, has_next: exps.contains(&(min + 1)) })
    }

    /// Rebuilds the canonical form from a membership predicate on an
    /// S-closed exponent set whose minimum lies in `[lo, lo + span]`.
    fn from_predicate(lo: i64, span: i64, member: impl Fn(i64) -> bool) -> Result<MonomialIdeal> {
        let min = (lo..=lo + span)
            .find(|&e| member(e))
            .ok_or_else(|| Error::Consistency("empty exponent set".into()))?;
        let out = MonomialIdeal { min, has_next: member(min + 1) };
        for e in min..min + 6 {
            if out.contains_exponent(e) != member(e) {
                return Err(Error::Consistency(format!("exponent set not closed at {e}")));
            }
        }
        Ok(out)
    }

    pub fn min_exponent(&self) -> i64 {
        self.min
    }

    /// Minimal generators as exponents.
    pub fn generators(&self) -> Vec<i64> {
        if self.has_next {
            vec![self.min, self.min + 1]
        } else {
            vec![self.min]
        }
    }

    pub fn contains_exponent(&self, e: i64) -> bool {
        e == self.min || (self.has_next && e == self.min + 1) || e >= self.min + 2
    }

    pub fn is_integral(&self) -> bool {
        self.min >= 0 && (self.min != 0 || !self.has_next)
    }

    pub fn is_unit_ideal(&self) -> bool {
        *self == MonomialIdeal::unit()
    }

    pub fn is_principal(&self) -> bool {
        !self.has_next
    }

    /// Series membership: every exponent in the support lies in the set.
    pub fn contains_series(&self, x: &Series) -> bool {
        x.coeffs()
            .iter()
            .enumerate()
            .all(|(e, c)| num_traits::Zero::is_zero(c) || self.contains_exponent(e as i64))
    }

    pub fn contains_ideal(&self, o: &MonomialIdeal) -> bool {
        o.generators().iter().all(|&e| self.contains_exponent(e))
    }

    pub fn product(&self, o: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal { min: self.min + o.min, has_next: self.has_next || o.has_next }
    }

    pub fn sum(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let min = self.min.min(o.min);
        MonomialIdeal {
            min,
            has_next: self.contains_exponent(min + 1) || o.contains_exponent(min + 1),
        }
    }

    pub fn intersect(&self, o: &MonomialIdeal) -> Result<MonomialIdeal> {
        let lo = self.min.max(o.min);
        MonomialIdeal::from_predicate(lo, 2, |e| self.contains_exponent(e) && o.contains_exponent(e))
    }

    /// `(self : o) = { e : e + E_o ⊆ E_self }`; it suffices to test the
    /// generators of `o` and `min(o) + 2`, `min(o) + 3`.
    pub fn colon(&self, o: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut probes = o.generators();
        probes.extend([o.min + 2, o.min + 3]);
        let member = |e: i64| probes.iter().all(|&p| self.contains_exponent(e + p));
        MonomialIdeal::from_predicate(self.min - o.min - 3, 6, member)
    }

    pub fn inverse(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::unit().colon(self)
    }

    pub fn v_closure(&self) -> Result<MonomialIdeal> {
        self.inverse()?.inverse()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().into_iter().map(fmt_monomial).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}
