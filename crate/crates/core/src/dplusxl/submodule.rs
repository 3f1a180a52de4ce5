use std::sync::Arc;

use num_traits::{One, Zero};

use super::DxlSpec;
use crate::error::{Error, Result};
use crate::exactnum::{rref, solve_unique, NFElement, NumberField, Rational};
use crate::ideals::lattice::QLattice;
use crate::ideals::FractionalIdeal;
use crate::rings::DomainSpec;
use crate::verdict::Verdict;

/// Nonzero finitely generated D-submodule of L.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    field: Arc<NumberField>,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Z-span in power-basis coordinates.
    Lattice(QLattice),
    /// Fractional ideal of Z[√d] inside L = Q(√d).
    Ideal(FractionalIdeal),
    /// Q-span, as reduced row echelon rows.
    Space(Vec<Vec<Rational>>),
}

impl Submodule {
    pub fn generated(spec: &DxlSpec, gens: &[NFElement]) -> Result<Submodule> {
        if gens.iter().any(|g| g.field() != spec.field()) {
            return Err(Error::FieldMismatch);
        }
        let coords: Vec<Vec<Rational>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.coords().to_vec()).collect();
        if coords.is_empty() {
            return Err(Error::ZeroInput("a submodule needs a nonzero generator"));
        }
        let repr = match spec.base() {
            DomainSpec::Integers => Repr::Lattice(QLattice::from_vectors(&coords, spec.field().degree())),
            DomainSpec::QuadraticOrder { .. } => Repr::Ideal(FractionalIdeal::from_kvecs(spec.base(), &coords)?),
            _ => Repr::Space(rref(&coords).0.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect()),
        };
        Ok(Submodule { field: Arc::clone(spec.field()), repr })
    }

    pub fn basis(&self) -> Vec<NFElement> {
        let rows = match &self.repr {
            Repr::Lattice(l) => l.basis(),
            Repr::Ideal(i) => i.basis(),
            Repr::Space(rows) => rows.clone(),
        };
        rows.into_iter()
            .map(|r| NFElement::new(&self.field, r).expect("coordinates match the field degree"))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    pub fn contains(&self, c: &NFElement) -> bool {
        if c.field() != &self.field {
            return false;
        }
        match &self.repr {
            Repr::Lattice(l) => l.contains(c.coords()),
            Repr::Ideal(i) => i.contains(c.coords()),
            Repr::Space(rows) => c.is_zero() || solve_unique(rows, c.coords()).is_some(),
        }
    }

    pub fn contains_module(&self, o: &Submodule) -> bool {
        o.basis().iter().all(|b| self.contains(b))
    }

    /// Module generated by pairwise products of basis elements.
    pub fn product(&self, o: &Submodule, spec: &DxlSpec) -> Result<Submodule> {
        if let (Repr::Ideal(a), Repr::Ideal(b)) = (&self.repr, &o.repr) {
            return Ok(Submodule { field: Arc::clone(&self.field), repr: Repr::Ideal(a.product(b)?) });
        }
        let (p, q) = (self.basis(), o.basis());
        let gens: Vec<NFElement> = p.iter().flat_map(|a| q.iter().map(move |b| a * b)).collect();
        Submodule::generated(spec, &gens)
    }

    /// True when the module is all of L.
    pub fn is_full(&self) -> bool {
        matches!(&self.repr, Repr::Space(rows) if rows.len() == self.field.degree())
    }

    pub fn within_base(&self, spec: &DxlSpec) -> bool {
        self.basis().iter().all(|b| spec.in_base(b))
    }

    /// `m` with `M = D·m`, decided completely except when a Pell search
    /// for Z[√d] exceeds its cap.
    pub fn principal_generator(&self, spec: &DxlSpec) -> Result<Verdict<NFElement, String>> {
        match &self.repr {
            Repr::Lattice(l) if l.rank() == 1 => Ok(Verdict::Holds(self.basis().remove(0))),
            Repr::Lattice(l) => Ok(Verdict::Fails(format!("Z-lattice of rank {} is not cyclic", l.rank()))),
            Repr::Space(rows) if rows.len() == 1 => Ok(Verdict::Holds(self.basis().remove(0))),
            Repr::Space(rows) => Ok(Verdict::Fails(format!("Q-span of dimension {}", rows.len()))),
            Repr::Ideal(i) => Ok(match i.is_principal()? {
                Verdict::Holds(g) => {
                    let num = spec.embed(&g.numerator)?;
                    Verdict::Holds(num.scale(&Rational::new(One::one(), g.den)))
                }
                Verdict::Fails(w) => Verdict::Fails(w),
                Verdict::Unknown(sb) => Verdict::Unknown(sb),
            }),
        }
    }

    /// The fractional ideal, for a Z[√d] base.
    pub fn as_fractional(&self) -> Option<&FractionalIdeal> {
        match &self.repr {
            Repr::Ideal(i) => Some(i),
            _ => None,
        }
    }

    /// Generators for display; with `in_base` set and every generator in D,
    /// they are written as elements of D.
    pub(super) fn fmt_gens(&self, spec: &DxlSpec, in_base: bool) -> String {
        let gens: Vec<String> = match &self.repr {
            Repr::Ideal(i) if in_base && i.is_integral() => {
                i.generator_elements().iter().map(|g| g.to_string()).collect()
            }
            Repr::Ideal(i) => {
                let den = Rational::new(One::one(), i.den().clone());
                i.generator_elements()
                    .iter()
                    .map(|g| spec.embed(g).expect("element of D").scale(&den).to_string())
                    .collect()
            }
            _ => self.basis().iter().map(|b| b.to_string()).collect(),
        };
        gens.join(", ")
    }
}
