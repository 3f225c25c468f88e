use crate::convexlat::{Cone, LatVec};
use crate::error::{Error, Result};
use crate::funcfield::{Curve, CurvePoint, QDivisor};
use crate::pdiv::PolyDivisor;

/// Outcome of [`surface_support_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    pub pass: bool,
    pub fractional: QDivisor,
    pub limit: usize,
    pub detail: String,
}

/// For a surface (`N = ℤ`, `σ = ℝ≥0`) admitting a horizontal action, the
/// fractional part of `𝔇(1)` is supported in at most one rational point over
/// the affine line and at most two over the projective line.
pub fn surface_support_check(d: &PolyDivisor) -> Result<SurfaceReport> {
    if d.rank() != 1 || !d.tail().same_set(&Cone::new(1, &[LatVec::new(vec![1])])?) {
        return Err(Error::Precondition("expects rank one with tail cone R>=0".into()));
    }
    let frac = d.evaluate(&LatVec::new(vec![1]))?.fractional();
    let limit = match d.curve() {
        Curve::Affine => 1,
        Curve::Projective => 2,
    };
    let support: Vec<CurvePoint> = frac.support();
    let irrational: Vec<&CurvePoint> = support.iter().filter(|z| !z.is_rational()).collect();
    let pass = support.len() <= limit && irrational.is_empty();
    let detail = if pass {
        format!("{{D(1)}} = {frac} has {} point(s), limit {limit}", support.len())
    } else if !irrational.is_empty() {
        format!("inconsistent: {{D(1)}} = {frac} meets non-rational points although a horizontal action exists")
    } else {
        format!("inconsistent: {{D(1)}} = {frac} has {} points, limit {limit}, although a horizontal action exists", support.len())
    };
    Ok(SurfaceReport { pass, fractional: frac, limit, detail })
}
