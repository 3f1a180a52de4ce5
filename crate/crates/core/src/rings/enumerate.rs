use num_bigint::BigInt;

use super::{DomainSpec, QuadInt, RingElement, Series};
use crate::exactnum::{NFElement, Rational};

/// Nonzero elements with coordinates bounded by `height`, shell by shell:
/// everything of height `h` comes before anything of height `h + 1`, so the
/// stream for a smaller height is a prefix of the stream for a larger one.
///
/// Within a shell, coordinates run through `0, 1, -1, 2, -2, ...` with the
/// first coordinate varying fastest.
pub fn enumerate_elements(domain: &DomainSpec, height: u64) -> ElementStream {
    let dims = match domain {
        DomainSpec::Integers => 1,
        DomainSpec::QuadraticOrder { .. } => 2,
        // Exponents 0, 2, 3, ..., trunc.
        DomainSpec::SemigroupRing { trunc } => *trunc,
        DomainSpec::FieldDomain(f) => f.degree(),
    };
    ElementStream { domain: domain.clone(), coeffs: coefficient_vectors(dims, height) }
}

/// Monic monomials `t^2, ..., t^trunc` of the semigroup ring.
pub fn enumerate_monomials(trunc: usize) -> impl Iterator<Item = RingElement> {
    (2..=trunc).map(|e| RingElement::Series(Series::monomial(e)))
}

/// Integer vectors of length `dims` with entries bounded by `height`, in
/// the shell order described on [`enumerate_elements`]; the zero vector is skipped.
#[derive(Clone, Debug)]
pub struct CoefficientVectors {
    dims: usize,
    height: u64,
    shell: u64,
    digits: Vec<u64>,
    fresh: bool,
}

pub fn coefficient_vectors(dims: usize, height: u64) -> CoefficientVectors {
    CoefficientVectors { dims, height, shell: 1, digits: vec![0; dims], fresh: true }
}

fn digit_value(i: u64) -> i64 {
    if i % 2 == 1 {
        i.div_ceil(2) as i64
    } else {
        -((i / 2) as i64)
    }
}

impl CoefficientVectors {
    /// Advances the odometer over `[0, 2·shell]^dims`; false when it wraps.
    fn step(&mut self) -> bool {
        let top = 2 * self.shell;
        for d in self.digits.iter_mut() {
            if *d < top {
                *d += 1;
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for CoefficientVectors {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.shell > self.height || self.dims == 0 {
                return None;
            }
            let advanced = if self.fresh {
                self.fresh = false;
                true
            } else {
                self.step()
            };
            if !advanced {
                self.shell += 1;
                self.digits.iter_mut().for_each(|d| *d = 0);
                self.fresh = true;
                continue;
            }
            let top = 2 * self.shell;
            if self.digits.iter().any(|&d| d + 1 >= top) {
                return Some(self.digits.iter().map(|&i| digit_value(i)).collect());
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ElementStream {
    domain: DomainSpec,
    coeffs: CoefficientVectors,
}

impl ElementStream {
    fn build(&self, vals: &[i64]) -> RingElement {
        let q = |v: i64| Rational::from_integer(BigInt::from(v));
        match &self.domain {
            DomainSpec::Integers => RingElement::Int(BigInt::from(vals[0])),
            DomainSpec::QuadraticOrder { .. } => RingElement::Quad(QuadInt::new(vals[0], vals[1])),
            DomainSpec::SemigroupRing { trunc } => {
                let mut c = vec![q(vals[0]), q(0)];
                c.extend(vals[1..].iter().map(|&v| q(v)));
                RingElement::Series(Series::new(c, *trunc).expect("coefficient vector fits"))
            }
            DomainSpec::FieldDomain(f) => RingElement::Field(
                NFElement::new(f, vals.iter().map(|&v| q(v)).collect()).expect("coordinate count matches degree"),
            ),
        }
    }
}

impl Iterator for ElementStream {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        let vals = self.coeffs.next()?;
        Some(self.build(&vals))
    }
}
