#![allow(dead_code)]

use tvar_core::classify::piece_generators;
use tvar_core::convexlat::{qr, Cone, LatVec, LatticeBox, QVec, SigmaPolyhedron};
use tvar_core::funcfield::{Curve, CurvePoint, Fe, Poly, PrimeField, RatFunc};
use tvar_core::graded::GradedElement;
use tvar_core::lfihd::Algebra;
use tvar_core::pdiv::PolyDivisor;

pub fn lv(c: &[i64]) -> LatVec {
    LatVec::new(c.to_vec())
}

pub fn qv(c: &[(i64, i64)]) -> QVec {
    QVec::new(c.iter().map(|&(n, d)| qr(n, d)).collect())
}

pub fn cone(rank: usize, gens: &[&[i64]]) -> Cone {
    Cone::new(rank, &gens.iter().map(|g| lv(g)).collect::<Vec<_>>()).unwrap()
}

pub fn quadrant() -> Cone {
    cone(2, &[&[1, 0], &[0, 1]])
}

pub fn poly(f: PrimeField, c: &[i64]) -> Poly {
    Poly::from_i64s(f, c)
}

/// `num / den` from ascending integer coefficients.
pub fn rf(f: PrimeField, num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(poly(f, num), poly(f, den)).unwrap()
}

pub fn el(f: RatFunc, m: &[i64]) -> GradedElement {
    GradedElement::monomial(f, lv(m))
}

pub fn at(f: PrimeField, a: i64) -> CurvePoint {
    CurvePoint::at(&f.from_i64(a))
}

pub fn fe(f: PrimeField, a: i64) -> Fe {
    f.from_i64(a)
}

/// Quadrant tail over P^1 with `Δ_0 = Δ_∞ = (1/2,0) + σ` and `Δ_1 = [(0,0),(-1/2,1/2)] + σ`.
pub fn p1_quadrant(f: PrimeField) -> PolyDivisor {
    let s = quadrant();
    let half = SigmaPolyhedron::new(vec![qv(&[(1, 2), (0, 1)])], s.clone()).unwrap();
    let seg = SigmaPolyhedron::new(vec![qv(&[(0, 1), (0, 1)]), qv(&[(-1, 2), (1, 2)])], s.clone()).unwrap();
    PolyDivisor::new(
        f,
        Curve::Projective,
        s,
        vec![(at(f, 0), half.clone()), (at(f, 1), seg), (CurvePoint::Infinity, half)],
    )
    .unwrap()
}

/// The five generators `u_1, ..., u_5` of the coordinate ring of [`p1_quadrant`].
pub fn p1_quadrant_generators(f: PrimeField) -> Vec<GradedElement> {
    let sq = &[1, -2, 1][..];
    vec![
        el(rf(f, &[-1, 1], &[0, 1]), &[2, 0]),
        el(RatFunc::one(f), &[0, 1]),
        el(RatFunc::one(f), &[1, 1]),
        el(rf(f, sq, &[0, 1]), &[2, 0]),
        el(rf(f, sq, &[0, 1]), &[3, 0]),
    ]
}

/// The cone spanned by `(0,1)` and `(2,-1)`.
pub fn skew_cone() -> Cone {
    cone(2, &[&[0, 1], &[2, -1]])
}

/// Rank one, `σ = {0}`, over `F_2`: `{1/5}·[0] + [0, 1/5]·[1]` on the affine line.
pub fn bertin() -> PolyDivisor {
    let f = PrimeField::fp(2).unwrap();
    let z = Cone::zero(1);
    let d0 = SigmaPolyhedron::new(vec![qv(&[(1, 5)])], z.clone()).unwrap();
    let d1 = SigmaPolyhedron::new(vec![qv(&[(0, 1)]), qv(&[(1, 5)])], z.clone()).unwrap();
    PolyDivisor::new(f, Curve::Affine, z, vec![(at(f, 0), d0), (at(f, 1), d1)]).unwrap()
}

/// `x = t^{-1}χ^5`, `y = (t^2+t)χ^{-5}`, `z = χ`.
pub fn bertin_xyz() -> (GradedElement, GradedElement, GradedElement) {
    let f = PrimeField::fp(2).unwrap();
    (
        el(RatFunc::laurent_monomial(f.one(), -1), &[5]),
        el(RatFunc::from_poly(poly(f, &[0, 1, 1])), &[-5]),
        el(RatFunc::one(f), &[1]),
    )
}

/// The cone generated by `(1)` in rank one.
pub fn half_line() -> Cone {
    cone(1, &[&[1]])
}

/// At least `n` test elements of `algebra`: the given ones, then generators of
/// small graded pieces, then sums of neighbours.
pub fn samples(algebra: &Algebra, given: &[GradedElement], n: usize) -> Vec<GradedElement> {
    let mut out: Vec<GradedElement> = given.to_vec();
    let extra: Vec<GradedElement> = match algebra {
        Algebra::Toric(sigma) => {
            let f = given.first().map(|a| a.field()).unwrap_or_else(PrimeField::rationals);
            let dual = sigma.dual();
            let bx = LatticeBox::new(sigma.rank(), 2);
            let mut pts: Vec<LatVec> = (0..bx.len()).map(|i| bx.point(i)).filter(|m| dual.contains(m)).collect();
            pts.sort_by(|a, b| a.sup_norm().cmp(&b.sup_norm()).then_with(|| a.cmp(b)));
            pts.into_iter().map(|m| GradedElement::character(f, m)).collect()
        }
        Algebra::Divisor(d) => piece_generators(d, 2).unwrap(),
    };
    for a in extra {
        if out.len() >= n {
            break;
        }
        if !out.contains(&a) {
            out.push(a);
        }
    }
    let k = out.len();
    for i in 0..k.saturating_sub(1) {
        if out.len() >= n {
            break;
        }
        out.push(&out[i] + &out[i + 1]);
    }
    out
}
