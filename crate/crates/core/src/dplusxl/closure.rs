//! vs-closedness of `Q ⊆ L`, sampled sm-closedness probes, and the combined
//! condensedness verdict for D + X·L[X].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::bilinear::{scalar_factor, solve_pair, Refutation};
use super::{DxlSpec, Submodule};
use crate::condensed::lemma_a1_certificates;
use crate::error::{Error, Result};
use crate::exactnum::{linearly_independent, NFElement, NumberField, Rational};
use crate::exec::Strategy;
use crate::rings::{coefficient_vectors, CondensedStatus, DomainSpec};
use crate::verdict::Verdict;

/// `Holds` means vs-closed (reported as Yes), `Fails` carries a pair with no solution.
pub type VsVerdict = Verdict<String, VsWitness>;

/// Elements to sample in [`sm_closed_probe`].
pub const SM_SAMPLE_LIMIT: usize = 256;

/// A pair `α, β` for which `1 + αβ ∉ span(1, α)·span(1, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VsWitness {
    pub alpha: NFElement,
    pub beta: NFElement,
    /// Whether `1, α, β, αβ` are linearly independent over Q.
    pub independent: bool,
    pub refutation: Refutation,
}

impl VsWitness {
    pub fn verify(&self) -> Result<Vec<String>> {
        let one = NFElement::one(self.alpha.field());
        let ab = &self.alpha * &self.beta;
        let indep = linearly_independent(&[one, self.alpha.clone(), self.beta.clone(), ab])?;
        if indep != self.independent {
            return Err(Error::Consistency("independence flag does not replay".into()));
        }
        let mut lines = Vec::new();
        if indep {
            lines.push(format!("1, {}, {}, {} are linearly independent over Q", self.alpha, self.beta, &self.alpha * &self.beta));
        }
        lines.extend(self.refutation.replay()?);
        Ok(lines)
    }
}

impl fmt::Display for VsWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

fn witness(alpha: NFElement, beta: NFElement) -> Result<Option<VsWitness>> {
    let Verdict::Fails(refutation) = solve_pair(&alpha, &beta)? else {
        return Ok(None);
    };
    let one = NFElement::one(alpha.field());
    let independent = linearly_independent(&[one, alpha.clone(), beta.clone(), &alpha * &beta])?;
    let w = VsWitness { alpha, beta, independent, refutation };
    w.verify()?;
    Ok(Some(w))
}

fn element(field: &Arc<NumberField>, v: &[i64]) -> NFElement {
    NFElement::new(field, v.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
        .expect("coordinate count matches degree")
}

/// Decides vs-closedness of `Q ⊆ L` for degree ≠ 3; for cubic fields sweeps
/// unordered pairs of irrational elements with coordinates bounded by `bound`.
pub fn vs_closed(field: &Arc<NumberField>, bound: u64, strategy: Strategy) -> Result<VsVerdict> {
    match field.degree() {
        1 | 2 => Ok(Verdict::Holds(format!("[L:Q] = {} <= 2", field.degree()))),
        3 => {
            let elems: Vec<NFElement> = coefficient_vectors(3, bound)
                .filter(|v| v[1] != 0 || v[2] != 0)
                .map(|v| element(field, &v))
                .collect();
            let pairs: Vec<(usize, usize)> =
                (0..elems.len()).flat_map(|i| (i..elems.len()).map(move |j| (i, j))).collect();
            let hit = strategy.find_first(&pairs, |&(i, j)| witness(elems[i].clone(), elems[j].clone()))?;
            Ok(match hit {
                Some(w) => Verdict::Fails(w),
                None => Verdict::unknown(bound, format!("all {} pairs of height <= {bound} solve", pairs.len())),
            })
        }
        _ => {
            let th = NFElement::generator(field);
            let w = witness(th.clone(), th.pow(2))?
                .ok_or_else(|| Error::Consistency("(th, th^2) solved in degree >= 4".into()))?;
            if !w.independent {
                return Err(Error::Consistency("1, th, th^2, th^3 are dependent".into()));
            }
            Ok(Verdict::Fails(w))
        }
    }
}

/// An element of `MN` that does not split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmFailure {
    pub gamma: NFElement,
    pub reason: String,
}

impl fmt::Display for SmFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.gamma, self.reason)
    }
}

/// Samples elements of `MN` (integer combinations of its basis, height
/// `bound`, at most [`SM_SAMPLE_LIMIT`]) and splits each with [`scalar_factor`].
pub fn sm_closed_probe(
    spec: &DxlSpec,
    m: &Submodule,
    n: &Submodule,
    bound: u64,
    strategy: Strategy,
) -> Result<Verdict<String, SmFailure>> {
    for (name, s) in [("M", m), ("N", n)] {
        if let Verdict::Holds(g) = s.principal_generator(spec)? {
            return Ok(Verdict::Holds(format!("{name} = D*({g}) is principal, so every element of MN splits")));
        }
    }
    let basis = m.product(n, spec)?.basis();
    let gammas: Vec<NFElement> = coefficient_vectors(basis.len(), bound)
        .take(SM_SAMPLE_LIMIT)
        .map(|v| {
            basis.iter().zip(&v).fold(NFElement::zero(spec.field()), |acc, (b, &c)| {
                &acc + &b.scale(&Rational::from_integer(c.into()))
            })
        })
        .filter(|g| !g.is_zero())
        .collect();
    let verdicts = strategy.map(&gammas, |g| scalar_factor(spec, g, m, n, bound))?;
    let mut undecided = 0;
    for (g, v) in gammas.iter().zip(verdicts) {
        match v {
            Verdict::Fails(reason) => return Ok(Verdict::Fails(SmFailure { gamma: g.clone(), reason })),
            Verdict::Unknown(_) => undecided += 1,
            Verdict::Holds(_) => {}
        }
    }
    Ok(Verdict::unknown(
        bound,
        format!("{} sampled elements: {} split, {undecided} undecided", gammas.len(), gammas.len() - undecided),
    ))
}

/// Condensedness of `D + X·L[X]`.
pub fn is_condensed_dplusxl(spec: &DxlSpec, height: u64, strategy: Strategy) -> Result<Verdict<String, String>> {
    let deg = spec.relative_degree();
    if deg >= 4 {
        let w = vs_closed(spec.field(), height, strategy)?;
        let pair = w.fails().map(|w| w.to_string()).unwrap_or_default();
        return Ok(Verdict::Fails(format!("[L:K] = {deg} > 3; unsolvable pair {pair}")));
    }
    if let DomainSpec::QuadraticOrder { .. } = spec.base() {
        let certs = lemma_a1_certificates(spec.base(), 2, strategy)?;
        if let Some(c) = certs.first() {
            return Ok(Verdict::Fails(format!("D is not condensed: {c}")));
        }
    }
    if deg == 1 {
        return Ok(match spec.base().condensed_status() {
            CondensedStatus::KnownCondensed(why) => Verdict::Holds(format!("L = K and D is condensed ({why})")),
            CondensedStatus::KnownNotCondensed(why) => Verdict::Fails(format!("L = K and D is not condensed ({why})")),
            CondensedStatus::Unknown => Verdict::unknown(height, format!("condensedness of {} is undecided", spec.base())),
        });
    }
    if spec.base_is_field() {
        return Ok(match vs_closed(spec.field(), height, strategy)? {
            Verdict::Holds(why) => Verdict::Holds(format!("K in L is vs-closed: {why}")),
            Verdict::Fails(w) => Verdict::Fails(format!("K in L is not vs-closed: pair {w}")),
            Verdict::Unknown(sb) => Verdict::Unknown(sb),
        });
    }
    let th = NFElement::generator(spec.field());
    let one = NFElement::one(spec.field());
    let m = Submodule::generated(spec, &[one, th])?;
    Ok(match sm_closed_probe(spec, &m, &m, height, strategy)? {
        Verdict::Fails(f) => Verdict::Fails(format!("an element of (D + D*th)^2 does not split: {f}")),
        Verdict::Unknown(sb) => Verdict::Unknown(sb),
        Verdict::Holds(_) => Verdict::unknown(height, "sampled submodule pairs split"),
    })
}
