use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::funcfield::{Poly, RatFunc};
use crate::graded::GradedElement;
use crate::pdiv::PolyDivisor;

use super::series::ExpSeries;
use super::spec::{HorizontalSpec, Step};

/// A polynomial in `x` with coefficients in `k[ζ]`, truncated above `cap`.
type Bivariate = BTreeMap<usize, Poly>;

fn add_into(s: &mut Bivariate, n: usize, p: Poly) {
    if p.is_zero() {
        return;
    }
    let v = match s.remove(&n) {
        Some(q) => &q + &p,
        None => p,
    };
    if !v.is_zero() {
        s.insert(n, v);
    }
}

/// `P(ζ + Σ λ_i x^{q_i})` by Horner's rule.
fn substitute(p: &Poly, steps: &[Step], cap: usize) -> Bivariate {
    let mut acc: Bivariate = BTreeMap::new();
    for c in p.coeffs().iter().rev() {
        let mut next: Bivariate = BTreeMap::new();
        for (n, q) in &acc {
            add_into(&mut next, *n, q.shift(1));
            for st in steps {
                let k = n + st.exponent as usize;
                if k <= cap {
                    add_into(&mut next, k, q.scale(&st.lambda));
                }
            }
        }
        add_into(&mut next, 0, Poly::constant(c.clone()));
        acc = next;
    }
    acc
}

/// `N / D` as a power series in `x` up to `cap`, where `D` has nonzero constant term.
fn divide(num: &Bivariate, den: &Bivariate, cap: usize) -> Result<BTreeMap<usize, RatFunc>> {
    let d0 = den.get(&0).ok_or(Error::DivisionByZero)?;
    let field = d0.field();
    let d0 = RatFunc::from_poly(d0.clone());
    let mut out: BTreeMap<usize, RatFunc> = BTreeMap::new();
    for n in 0..=cap {
        let mut acc = num.get(&n).map(|p| RatFunc::from_poly(p.clone())).unwrap_or_else(|| RatFunc::zero(field));
        for (j, dj) in den.range(1..=n) {
            if let Some(q) = out.get(&(n - j)) {
                acc = &acc - &(&RatFunc::from_poly(dj.clone()) * q);
            }
        }
        if !acc.is_zero() {
            out.insert(n, &acc / &d0);
        }
    }
    Ok(out)
}

/// `e^{x∂}(a)` on the cover `t = ζ^d`, before descending.
///
/// Conjugates to `k[σ^∨_M][ζ]` by `ζ^l χ^m ↦ ζ^{dh(m)+l} χ^m`, substitutes
/// `ζ ↦ ζ + Σ λ_i x^{q_i}`, and conjugates back, tracking `χ^{ne}` on `x^n`.
pub(crate) fn horizontal_exp_cover(spec: &HorizontalSpec, a: &GradedElement, order: usize) -> Result<ExpSeries> {
    let d = spec.d();
    if a.cover() != 1 && a.cover() != d {
        return Err(Error::Precondition(format!("element lives on a cover of degree {}, expected {d}", a.cover())));
    }
    if a.rank() != spec.e().rank() {
        return Err(Error::RankMismatch { expected: spec.e().rank(), found: a.rank() });
    }
    let field = a.field();
    if field != spec.field() {
        return Err(Error::FieldMismatch);
    }
    let a = a.at_cover(d);
    let dhe = spec.dh(spec.e());
    let mut coeffs: BTreeMap<usize, GradedElement> = BTreeMap::new();
    let mut complete = true;
    for (m, f) in a.terms() {
        let k = spec.dh(m);
        let g = f * &RatFunc::laurent_monomial(field.one(), k);
        let den = g.den();
        let series: BTreeMap<usize, RatFunc> = if den.is_constant() {
            let inv = den.leading().inv()?;
            substitute(g.num(), spec.steps(), usize::MAX)
                .into_iter()
                .map(|(n, p)| (n, RatFunc::from_poly(p.scale(&inv))))
                .collect()
        } else {
            complete = false;
            let num = substitute(g.num(), spec.steps(), order);
            let dser = substitute(den, spec.steps(), order);
            divide(&num, &dser, order)?
        };
        for (n, q) in series {
            let shift = k + n as i64 * dhe;
            let c = &q * &RatFunc::laurent_monomial(field.one(), -shift);
            let deg = m + &spec.e().scale(n as i64);
            coeffs.entry(n).or_insert_with(|| GradedElement::zero(field, a.rank()).with_cover(d)).add_term(deg, &c);
        }
    }
    Ok(ExpSeries::new(a, coeffs, order, complete))
}

/// Rewrites every coefficient in `t` where possible.
fn descend_series(s: ExpSeries, input: &GradedElement) -> ExpSeries {
    let complete = s.is_complete();
    let order = s.order();
    let coeffs = s.nonzero().iter().map(|(n, c)| (*n, c.descend().unwrap_or_else(|| c.clone()))).collect();
    ExpSeries::new(input.clone(), coeffs, order, complete)
}

/// `e^{x∂}(a)` for a horizontal spec, following `∂^{(i)}(t^l χ^m) = ζ^{-dh(m+ie)} ∂_ζ^{(i)}(ζ^{dh(m)} t^l) χ^{m+ie}`.
///
/// Coefficients whose `ζ`-exponents are not multiples of `d` stay on the cover.
/// When `d` is given, every coefficient receives a membership flag.
pub fn apply_horizontal(
    spec: &HorizontalSpec,
    a: &GradedElement,
    d: Option<&PolyDivisor>,
    order: usize,
) -> Result<ExpSeries> {
    let s = horizontal_exp_cover(spec, a, order)?;
    let mut s = descend_series(s, a);
    if let Some(div) = d {
        let flags = s
            .nonzero()
            .iter()
            .map(|(n, c)| {
                let verdict = if c.cover() != 1 {
                    Err(format!("zeta-exponents are not multiples of {}", spec.d()))
                } else {
                    div.membership(c)
                };
                (*n, verdict)
            })
            .collect();
        s.set_flags(flags);
    }
    Ok(s)
}

/// `∂_ζ^{(i)}(ζ^n)` as a polynomial in `ζ`, read off from `(ζ + Σ λ x^q)^n`.
pub fn zeta_image(spec: &HorizontalSpec, n: u64) -> BTreeMap<usize, Poly> {
    let f = spec.field();
    substitute(&Poly::monomial(f.one(), n as usize), spec.steps(), usize::MAX)
}
