//! Ideals of the truncated semigroup ring given by arbitrary generators.

use std::fmt;

use num_traits::Zero;

use super::monomial::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exactnum::{solve_unique, Rational};
use crate::rings::{in_semigroup, Series};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExplicitIdeal {
    trunc: usize,
    gens: Vec<Series>,
}

impl ExplicitIdeal {
    pub fn new(trunc: usize, gens: Vec<Series>) -> Result<ExplicitIdeal> {
        let gens: Vec<Series> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::ZeroInput("ideal generators"));
        }
        Ok(ExplicitIdeal { trunc, gens })
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn generators(&self) -> &[Series] {
        &self.gens
    }

    fn min_order(&self) -> usize {
        self.gens.iter().filter_map(Series::order).min().expect("nonzero generators")
    }

    /// Exact membership. With `m` the least generator order, the ideal
    /// contains `t^{m+2} K[[t]]`, so solving `x = Σ gᵢ rᵢ` modulo `t^{N+1}`
    /// decides membership once `N ≥ m + 1`.
    pub fn contains(&self, x: &Series) -> Result<bool> {
        let n = self.trunc;
        if self.min_order() + 1 > n {
            return Err(Error::Precondition(format!(
                "truncation {n} too small to decide membership in {self}"
            )));
        }
        if x.is_zero() {
            return Ok(true);
        }
        let column = |s: &Series| -> Vec<Rational> { (0..=n).map(|e| s.coeff(e)).collect() };
        let mut cols = Vec::new();
        for g in &self.gens {
            for e in (0..=n).filter(|&e| in_semigroup(e as i64)) {
                let p = g.mul(&Series::monomial(e), n);
                if !p.is_zero() {
                    cols.push(column(&p));
                }
            }
        }
        Ok(solve_unique(&cols, &column(x)).is_some())
    }

    pub fn contains_unit(&self) -> bool {
        self.gens.iter().any(|g| !g.coeff(0).is_zero())
    }

    pub fn product(&self, o: &ExplicitIdeal) -> Result<ExplicitIdeal> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                gens.push(a.mul(b, self.trunc));
            }
        }
        ExplicitIdeal::new(self.trunc, gens)
    }

    pub fn sum(&self, o: &ExplicitIdeal) -> Result<ExplicitIdeal> {
        let mut gens = self.gens.clone();
        gens.extend(o.gens.iter().cloned());
        ExplicitIdeal::new(self.trunc, gens)
    }

    pub fn from_monomial(trunc: usize, m: &MonomialIdeal) -> Result<ExplicitIdeal> {
        if !m.is_integral() {
            return Err(Error::Unsupported(format!("fractional {m} has no explicit generators")));
        }
        let gens = m.generators().into_iter().map(|e| Series::monomial(e as usize)).collect();
        ExplicitIdeal::new(trunc, gens)
    }

    /// The monomial ideal this equals, if any.
    pub fn as_monomial(&self) -> Result<Option<MonomialIdeal>> {
        if self.contains_unit() {
            return Ok(Some(MonomialIdeal::unit()));
        }
        let m = self.min_order() as i64;
        let t = |e: i64| Series::monomial(e as usize);
        if !self.contains(&t(m))? {
            return Ok(None);
        }
        let exps = if m < self.trunc as i64 && self.contains(&t(m + 1))? {
            vec![m, m + 1]
        } else {
            vec![m]
        };
        let cand = MonomialIdeal::from_exponents(&exps)?;
        Ok(self.gens.iter().all(|g| cand.contains_series(g)).then_some(cand))
    }
}

impl fmt::Display for ExplicitIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}
