//! Equivariant Chevalley coefficients `a_{I,J}` in
//! `f_I · (f_H - f_H(I)) = Σ_J a_{I,J} f_J`.

use serde::Serialize;
use thiserror::Error;

use crate::charring::CharPoly;
use crate::gkm::{curve_between, CurveKind};
use crate::subsets::{codim, dominates, enumerate_admissible, AdmissibleSubset, Geometry, GrassmannianSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error("bisymplectic Chevalley coefficients are only known for k = 2, got k = {0}")]
    UnsupportedK(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChevalleyCoefficient {
    pub source: AdmissibleSubset,
    pub target: AdmissibleSubset,
    pub value: CharPoly,
}

/// Steps a positive index down by `by`, skipping over 0, so that
/// `2 - 2` reads as `-1`. This is how the degenerate members of the
/// explicit families at small `i` are resolved.
fn step_down(i: i32, by: i32) -> i32 {
    let j = i - by;
    if j <= 0 {
        j - 1
    } else {
        j
    }
}

/// The explicit part of the formula for sources of the forms `(i,-i+1)`
/// and `(i,-i+2)`; entries whose written target is out of range or not
/// strictly descending are dropped.
fn explicit_rules(source: &AdmissibleSubset, n: usize) -> Vec<(AdmissibleSubset, CharPoly)> {
    let [a, b] = source.entries() else {
        return Vec::new();
    };
    let (i, b) = (*a, *b);
    if i <= 0 {
        return Vec::new();
    }
    let mut raw: Vec<([i32; 2], CharPoly)> = Vec::new();
    let c = |v: i64| CharPoly::constant(n, v);
    if b == -i + 1 {
        let lin = CharPoly::var(n, (i - 1) as usize) - CharPoly::var(n, i as usize);
        raw.push(([i, -i - 1], lin.clone()));
        raw.push(([step_down(i, 2), -i + 1], lin));
        raw.push(([i - 1, -i - 1], c(1)));
        raw.push(([step_down(i, 2), -i], c(1)));
        raw.push(([i, -i - 2], c(0)));
        raw.push(([step_down(i, 3), -i + 1], c(0)));
    } else if b == -i + 2 {
        raw.push(([step_down(i, 3), -i + 2], c(1)));
        raw.push(([i, -i - 1], c(1)));
        raw.push(([step_down(i, 2), -i + 1], c(2)));
        raw.push(([i - 1, -i], c(2)));
    }
    raw.into_iter()
        .filter_map(|(t, v)| {
            let target = AdmissibleSubset::from_descending(&t)?;
            target.fits(n).then_some((target, v))
        })
        .collect()
}

/// `a_{I,J}` for `I2Gr(2, 2n)`.
///
/// The explicit families (including their explicit zeros) take precedence;
/// otherwise the coefficient is 1 when `I ≥ J`, `#(I ∩ J) = 1` and
/// `codim J = codim I + 1`, and 0 in all remaining cases.
pub fn coeff_bisym(
    source: &AdmissibleSubset,
    target: &AdmissibleSubset,
    spec: &GrassmannianSpec,
) -> Result<CharPoly, ChevalleyError> {
    if spec.k() != 2 {
        return Err(ChevalleyError::UnsupportedK(spec.k()));
    }
    let n = spec.n();
    let spec = spec.with_geometry(Geometry::Bisymplectic);
    if let Some((_, v)) = explicit_rules(source, n)
        .into_iter()
        .find(|(t, _)| t == target)
    {
        return Ok(v);
    }
    let generic = dominates(source, target)
        && source.intersection_size(target) == 1
        && codim(target, &spec) == codim(source, &spec) + 1;
    Ok(if generic {
        CharPoly::one(n)
    } else {
        CharPoly::zero(n)
    })
}

/// `a_{I,J}` for `IGr(k, 2n)`: 1 along a line, 2 along a conic, between
/// points one codimension apart with `I ≥ J`.
pub fn coeff_sympl(source: &AdmissibleSubset, target: &AdmissibleSubset, spec: &GrassmannianSpec) -> u32 {
    let spec = spec.with_geometry(Geometry::Symplectic);
    if !dominates(source, target) || codim(target, &spec) != codim(source, &spec) + 1 {
        return 0;
    }
    match curve_between(source, target, &spec) {
        Some((_, CurveKind::Alpha)) => 1,
        Some((_, CurveKind::Beta)) => 2,
        None => 0,
    }
}

/// Coefficient for whichever geometry `spec` names.
pub fn coeff(
    source: &AdmissibleSubset,
    target: &AdmissibleSubset,
    spec: &GrassmannianSpec,
) -> Result<CharPoly, ChevalleyError> {
    match spec.geometry() {
        Geometry::Bisymplectic => coeff_bisym(source, target, spec),
        Geometry::Symplectic => Ok(CharPoly::constant(spec.n(), coeff_sympl(source, target, spec))),
    }
}

/// All nonzero coefficients, ordered by source then target in canonical
/// order.
pub fn chevalley_table(spec: &GrassmannianSpec) -> Result<Vec<ChevalleyCoefficient>, ChevalleyError> {
    if spec.geometry() == Geometry::Bisymplectic && spec.k() != 2 {
        return Err(ChevalleyError::UnsupportedK(spec.k()));
    }
    let points = enumerate_admissible(spec);
    let codims: Vec<usize> = points.iter().map(|p| codim(p, spec)).collect();
    let mut out = Vec::new();
    for (si, source) in points.iter().enumerate() {
        for (ti, target) in points.iter().enumerate() {
            // Coefficients only go one step down, or sideways at the middle
            // level.
            if si == ti || codims[ti] < codims[si] || codims[ti] > codims[si] + 1 {
                continue;
            }
            let value = coeff(source, target, spec)?;
            if !value.is_zero() {
                out.push(ChevalleyCoefficient {
                    source: source.clone(),
                    target: target.clone(),
                    value,
                });
            }
        }
    }
    Ok(out)
}
