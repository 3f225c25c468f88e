use std::collections::BTreeMap;

use crate::convexlat::LatVec;
use crate::error::{Error, Result};
use crate::funcfield::{binomial_signed, Fe, RatFunc};
use crate::graded::GradedElement;

use super::series::ExpSeries;
use super::spec::{ToricSpec, VerticalSpec};

/// Shared engine for `ψ·∂_e` twisted by `p^r`: the coefficient of `x^{i p^r}`
/// on `f χ^m` is `C(⟨m,ρ⟩, i) (λψ)^i f χ^{m+ie}`.
fn root_exp(
    e: &LatVec,
    ray: &LatVec,
    lambda: &Fe,
    psi: Option<&RatFunc>,
    period: u64,
    a: &GradedElement,
    order: usize,
) -> Result<ExpSeries> {
    if a.cover() != 1 {
        return Err(Error::Precondition("element lives on a cover of the line".into()));
    }
    let field = a.field();
    let period = period as usize;
    let mut coeffs: BTreeMap<usize, GradedElement> = BTreeMap::new();
    let mut complete = true;
    for (m, f) in a.terms() {
        let n = m.dot(ray);
        let top = if n >= 0 {
            n as usize
        } else {
            complete = false;
            order / period
        };
        let mut scal = RatFunc::one(field);
        let step = match psi {
            Some(p) => p.scale(lambda),
            None => RatFunc::constant(lambda.clone()),
        };
        let mut deg = m.clone();
        for i in 0..=top {
            let c = binomial_signed(n, i as u64, field);
            if !c.is_zero() {
                let term = &(f * &scal).scale(&c);
                coeffs.entry(i * period).or_insert_with(|| GradedElement::zero(field, a.rank())).add_term(deg.clone(), term);
            }
            scal = &scal * &step;
            deg = &deg + e;
        }
    }
    coeffs.entry(0).or_insert_with(|| GradedElement::zero(field, a.rank()));
    Ok(ExpSeries::new(a.clone(), coeffs, order, complete))
}

/// `e^{x∂}(χ^m)` for a toric spec; requires `⟨m, ρ⟩ ≥ 0`.
pub fn apply_toric(spec: &ToricSpec, m: &LatVec) -> Result<ExpSeries> {
    if m.rank() != spec.root().e.rank() {
        return Err(Error::RankMismatch { expected: spec.root().e.rank(), found: m.rank() });
    }
    if m.dot(&spec.root().ray) < 0 {
        return Err(Error::OutsideDualCone(m.to_string()));
    }
    apply_toric_element(spec, &GradedElement::character(spec.field(), m.clone()), 0)
}

/// `e^{x∂}(a)` for a toric spec, coefficients of `a` being treated as constants.
///
/// Terms with `⟨m, ρ⟩ < 0` produce infinite series, truncated at `order`.
pub fn apply_toric_element(spec: &ToricSpec, a: &GradedElement, order: usize) -> Result<ExpSeries> {
    let r = spec.root();
    root_exp(&r.e, &r.ray, spec.lambda(), None, spec.period(), a, order)
}

/// `e^{x∂_{e,φ}}(a)`, with `∂_{e,φ}^{(i)}(f χ^m) = φ^i C(⟨m,ρ⟩, i) f χ^{m+ie}`.
pub fn apply_vertical_raw(spec: &VerticalSpec, a: &GradedElement, order: usize) -> Result<ExpSeries> {
    let r = spec.root();
    root_exp(&r.e, &r.ray, &spec.field().one(), Some(spec.phi()), 1, a, order)
}
