use crate::convexlat::{Cone, LatVec, QVec, SigmaPolyhedron};
use crate::error::{Error, Result};
use crate::funcfield::{Curve, CurvePoint, Fe, Poly, PrimeField, RatFunc};
use crate::graded::GradedElement;

use super::divisor::PolyDivisor;

/// The coordinate change `t = (α s + β) / (γ s + δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub alpha: Fe,
    pub beta: Fe,
    pub gamma: Fe,
    pub delta: Fe,
}

impl Mobius {
    pub fn identity(f: PrimeField) -> Mobius {
        Mobius { alpha: f.one(), beta: f.zero(), gamma: f.zero(), delta: f.one() }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero() && self.gamma.is_zero() && self.delta.is_one()
    }

    pub fn inverse(&self) -> Mobius {
        Mobius { alpha: self.delta.clone(), beta: -&self.beta, gamma: -&self.gamma, delta: self.alpha.clone() }
    }

    fn field(&self) -> PrimeField {
        self.alpha.field()
    }

    /// `t` as a rational function of the new coordinate.
    fn substitution(&self) -> RatFunc {
        let f = self.field();
        let num = Poly::from_coeffs(f, vec![self.beta.clone(), self.alpha.clone()]);
        let den = Poly::from_coeffs(f, vec![self.delta.clone(), self.gamma.clone()]);
        RatFunc::new(num, den).expect("invertible transformation")
    }

    /// `f(t(s))`.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        if self.is_identity() {
            return f.clone();
        }
        f.compose(&self.substitution())
    }

    /// The point in the new coordinate corresponding to `z`.
    pub fn map_point(&self, z: &CurvePoint) -> CurvePoint {
        let f = self.field();
        match z {
            CurvePoint::Infinity => {
                if self.gamma.is_zero() {
                    CurvePoint::Infinity
                } else {
                    CurvePoint::at(&-(&self.delta / &self.gamma))
                }
            }
            CurvePoint::Finite(p) => {
                let k = p.degree().expect("nonconstant");
                let den = Poly::from_coeffs(f, vec![self.delta.clone(), self.gamma.clone()]);
                let pulled = &self.apply(&RatFunc::from_poly(p.clone())) * &RatFunc::from_poly(den.pow(k as u64));
                debug_assert!(pulled.is_polynomial());
                let q = pulled.num().clone();
                if q.degree() == Some(k) {
                    CurvePoint::Finite(q.monic())
                } else {
                    CurvePoint::Infinity
                }
            }
        }
    }
}

/// A shift `Δ_z ↦ Δ_z - v` compensated by a principal polyhedral divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub point: CurvePoint,
    pub v: LatVec,
}

/// Record of the coordinate change and shifts applied by [`normalize_for_horizontal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub mobius: Mobius,
    pub shifts: Vec<Shift>,
}

impl Transcript {
    pub fn is_identity(&self) -> bool {
        self.mobius.is_identity() && self.shifts.iter().all(|s| s.v.is_zero())
    }

    fn factor(&self, m: &LatVec, field: PrimeField) -> RatFunc {
        let mut acc = RatFunc::one(field);
        for s in &self.shifts {
            let p = RatFunc::from_poly(s.point.poly().expect("finite").clone());
            acc = &acc * &p.pow(m.dot(&s.v));
        }
        acc
    }

    /// Image of an element of the original algebra in the normalized algebra.
    pub fn forward(&self, a: &GradedElement) -> GradedElement {
        let f = a.field();
        GradedElement::from_terms(
            f,
            a.rank(),
            a.terms().iter().map(|(m, g)| (m.clone(), &self.mobius.apply(g) * &self.factor(m, f))),
        )
    }

    /// Image of an element of the normalized algebra in the original algebra.
    pub fn backward(&self, a: &GradedElement) -> GradedElement {
        let f = a.field();
        let inv = self.mobius.inverse();
        GradedElement::from_terms(
            f,
            a.rank(),
            a.terms().iter().map(|(m, g)| (m.clone(), inv.apply(&(g / &self.factor(m, f))))),
        )
    }
}

fn choose_mobius(f: PrimeField, z0: &CurvePoint, zinf: &CurvePoint) -> Result<Mobius> {
    let (one, zero) = (f.one(), f.zero());
    Ok(match (z0.coordinate(), zinf) {
        (Some(a), CurvePoint::Infinity) => Mobius { alpha: one.clone(), beta: a, gamma: zero, delta: one },
        (Some(a), _) => {
            let b = zinf.coordinate().expect("rational");
            Mobius { alpha: -&b, beta: a, gamma: -&one, delta: one }
        }
        (None, _) => {
            let b = zinf.coordinate().ok_or_else(|| Error::Normalization("z0 and zinf coincide".into()))?;
            Mobius { alpha: b, beta: one.clone(), gamma: one, delta: zero }
        }
    })
}

/// The vertex `v` of `Δ` with `h_Δ = ⟨·, v⟩` on `omega`, if `h_Δ` is linear there.
pub fn linear_vertex_on(delta: &SigmaPolyhedron, omega: &Cone) -> Option<QVec> {
    let v = delta.minimizing_vertex(&omega.relint_point()).clone();
    omega.generators().iter().all(|g| delta.vertex_min(g) == g.pair(&v)).then_some(v)
}

/// Moves `z0` to `[t]` and `zinf` to infinity, then shifts every other
/// coefficient so that its support function vanishes on `omega`.
pub fn normalize_for_horizontal(
    d: &PolyDivisor,
    z0: &CurvePoint,
    zinf: Option<&CurvePoint>,
    omega: &Cone,
) -> Result<(PolyDivisor, Transcript)> {
    let f = d.field();
    if !z0.is_rational() {
        return Err(Error::Normalization(format!("{z0} is not a rational point")));
    }
    let zinf = match (d.curve(), zinf) {
        (Curve::Affine, Some(CurvePoint::Infinity) | None) => CurvePoint::Infinity,
        (Curve::Affine, Some(z)) => {
            return Err(Error::Normalization(format!("{z} cannot be moved to infinity on the affine line")))
        }
        (Curve::Projective, Some(z)) => z.clone(),
        (Curve::Projective, None) => CurvePoint::Infinity,
    };
    if *z0 == CurvePoint::Infinity && d.curve() == Curve::Affine {
        return Err(Error::Normalization("z0 must be a finite point on the affine line".into()));
    }
    if !zinf.is_rational() {
        return Err(Error::Normalization(format!("{zinf} is not a rational point")));
    }
    if *z0 == zinf {
        return Err(Error::Normalization("z0 and zinf coincide".into()));
    }
    let mobius = choose_mobius(f, z0, &zinf)?;
    let origin = CurvePoint::at(&f.zero());
    let mut coeffs: Vec<(CurvePoint, SigmaPolyhedron)> =
        d.coefficients().iter().map(|(z, p)| (mobius.map_point(z), p.clone())).collect();
    let mut shifts = Vec::new();
    let mut infinity_shift = QVec::zero(d.rank());
    for (z, p) in coeffs.iter_mut() {
        if *z == origin || *z == CurvePoint::Infinity {
            continue;
        }
        let v = linear_vertex_on(p, omega)
            .ok_or_else(|| Error::Normalization(format!("h at {z} is not linear on {omega}")))?;
        let vi = v
            .to_latvec()
            .ok_or_else(|| Error::Normalization(format!("h at {z} is not integral on {omega}")))?;
        if vi.is_zero() {
            continue;
        }
        *p = p.translate(&-&v);
        let k = crate::convexlat::qi(z.degree() as i64);
        infinity_shift = &infinity_shift + &v.scale(&k);
        shifts.push(Shift { point: z.clone(), v: vi });
    }
    if d.curve() == Curve::Projective && !infinity_shift.is_zero() {
        match coeffs.iter_mut().find(|(z, _)| *z == CurvePoint::Infinity) {
            Some((_, p)) => *p = p.translate(&infinity_shift),
            None => coeffs.push((
                CurvePoint::Infinity,
                SigmaPolyhedron::tail_only(d.tail().clone()).translate(&infinity_shift),
            )),
        }
    }
    let nd = PolyDivisor::new(f, d.curve(), d.tail().clone(), coeffs)?;
    Ok((nd, Transcript { mobius, shifts }))
}
