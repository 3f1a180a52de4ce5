//! Moving a factorisation problem from an overring B = L[X] down to
//! A = D + X·L[X] through elements of the conductor `(A : B) = X·L[X]`.

use crate::dplusxl::{factor_scaled, CanonicalRIdeal, DxlSpec, LPoly, ScaledRIdeal};
use crate::error::{Error, Result};
use crate::exactnum::NFElement;
use crate::verdict::Verdict;

/// Factoriser for `x` in a product of two A-ideals.
pub type FactorOracle<'a> = dyn Fn(&LPoly, &ScaledRIdeal, &ScaledRIdeal) -> Result<Verdict<(LPoly, LPoly), String>> + 'a;

/// `αI` for `I = f·L[X]`, written as `g·X^k·L[X]` with `g(0) = 1`.
fn scaled_ideal(spec: &DxlSpec, alpha_f: &LPoly) -> Result<ScaledRIdeal> {
    let k = alpha_f.order().expect("nonzero product");
    let g = alpha_f.unshift(k).expect("order divides");
    let g = g.scale(&g.coeff(0).inverse()?);
    ScaledRIdeal::new(g, CanonicalRIdeal::full(spec, k as u32)?)
}

/// Splits `x ∈ IJ` (with `I = f_I·B`, `J = f_J·B`) as `i·j`, `i ∈ I`, `j ∈ J`,
/// by factoring `αβx` in `(αI)(βJ)` over A and dividing back.
#[allow(clippy::too_many_arguments)]
pub fn conductor_transfer_with(
    spec: &DxlSpec,
    x: &LPoly,
    f_i: &LPoly,
    f_j: &LPoly,
    alpha: &LPoly,
    beta: &LPoly,
    oracle: &FactorOracle<'_>,
) -> Result<Verdict<(LPoly, LPoly), String>> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroInput("conductor elements must be nonzero"));
    }
    if f_i.is_zero() || f_j.is_zero() || x.is_zero() {
        return Err(Error::ZeroInput("conductor_transfer needs nonzero ideals and x"));
    }
    let whole = spec.base_is_field() && spec.relative_degree() == 1;
    if !whole && (!alpha.coeff(0).is_zero() || !beta.coeff(0).is_zero()) {
        return Err(Error::Precondition("alpha and beta must lie in the conductor X*L[X]".into()));
    }
    if x.div_exact(&f_i.mul(f_j))?.is_none() {
        return Err(Error::Precondition(format!("{x} is not in ({f_i})*({f_j})")));
    }
    let ai = scaled_ideal(spec, &alpha.mul(f_i))?;
    let bj = scaled_ideal(spec, &beta.mul(f_j))?;
    let target = alpha.mul(beta).mul(x);
    let (r, s) = match oracle(&target, &ai, &bj)? {
        Verdict::Holds(p) => p,
        Verdict::Fails(w) => return Ok(Verdict::Fails(w)),
        Verdict::Unknown(sb) => return Ok(Verdict::Unknown(sb)),
    };
    let (Some(i), Some(j)) = (r.div_exact(alpha)?, s.div_exact(beta)?) else {
        return Err(Error::Consistency(format!("{r}, {s} are not divisible by the conductor elements")));
    };
    if i.div_exact(f_i)?.is_none() || j.div_exact(f_j)?.is_none() || &i.mul(&j) != x {
        return Err(Error::Consistency(format!("transferred factors {i}, {j} of {x} do not check")));
    }
    Ok(Verdict::Holds((i, j)))
}

/// [`conductor_transfer_with`] using the constructive factoriser of A.
pub fn conductor_transfer(
    spec: &DxlSpec,
    x: &LPoly,
    f_i: &LPoly,
    f_j: &LPoly,
    alpha: &LPoly,
    beta: &LPoly,
    bound: u64,
) -> Result<Verdict<(LPoly, LPoly), String>> {
    let oracle = |t: &LPoly, a: &ScaledRIdeal, b: &ScaledRIdeal| factor_scaled(spec, t, a, b, bound);
    let (i, j) = match conductor_transfer_with(spec, x, f_i, f_j, alpha, beta, &oracle)? {
        Verdict::Holds(p) => p,
        other => return Ok(other),
    };
    // Normalise so that i is a scalar multiple of f_I with the same leading coefficient.
    let lead = |p: &LPoly| p.coeffs().last().cloned().unwrap_or_else(|| NFElement::one(p.field()));
    let c = lead(f_i).checked_div(&lead(&i))?;
    if c.is_one() {
        return Ok(Verdict::Holds((i, j)));
    }
    let (i, j) = (i.scale(&c), j.scale(&c.inverse()?));
    Ok(Verdict::Holds((i, j)))
}
