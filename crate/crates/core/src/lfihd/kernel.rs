use crate::convexlat::{hilbert_points, hilbert_points_where, Cone, LatVec, Q};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::funcfield::{Curve, CurvePoint, RatFunc, SectionBasis};
use crate::graded::GradedElement;
use crate::pdiv::{linear_vertex_on, PolyDivisor};

use super::spec::{HorizontalSpec, LfihdSpec};
use super::verify::{apply, Algebra, DEFAULT_ORDER};

/// Whether `a` is killed by every `∂^{(i)}`, `i > 0`.
pub fn kernel_test(spec: &LfihdSpec, a: &GradedElement) -> Result<bool> {
    Ok(apply(spec, a, None, DEFAULT_ORDER)?.is_constant())
}

/// Homogeneous kernel elements found by [`kernel_generators`], with notes on skipped degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KernelGenerators {
    pub elements: Vec<GradedElement>,
    pub diagnostics: Vec<String>,
}

/// The maximal cell `ω` of the quasifan away from infinity on which `h_0 = ⟨·, v⟩`
/// and `h_z = 0` for every other finite point.
pub fn horizontal_weight_cone(spec: &HorizontalSpec, d: &PolyDivisor) -> Option<Cone> {
    let origin = CurvePoint::at(&d.field().zero());
    let fan = d.quasifan(Some(&CurvePoint::Infinity));
    fan.cells()
        .iter()
        .find(|cell| {
            d.coefficients().iter().filter(|(z, _)| **z != CurvePoint::Infinity).all(|(z, delta)| {
                match linear_vertex_on(delta, cell) {
                    Some(w) if *z == origin => w == *spec.v(),
                    Some(w) => w.is_zero(),
                    None => false,
                }
            }) && (d.coefficients().contains_key(&origin) || spec.v().is_zero())
        })
        .cloned()
}

fn piece_elements(d: &PolyDivisor, m: &LatVec) -> Result<Vec<GradedElement>> {
    let piece = d.graded_piece(m)?;
    Ok(match piece.basis {
        SectionBasis::Affine { generator } => vec![GradedElement::monomial(generator, m.clone())],
        SectionBasis::Projective { basis } => basis.into_iter().map(|f| GradedElement::monomial(f, m.clone())).collect(),
    })
}

/// Homogeneous generators of `ker ∂` whose degrees lie in the sup-norm box of radius `bound`.
///
/// Toric and vertical: the pieces of degree in `ρ^⋆`. Horizontal: `φ_m χ^m` for the
/// irreducible `m ∈ ω ∩ h^{-1}(ℤ)`, where `div φ_m + 𝔇(m) = 0` on the affine part;
/// `ω` defaults to [`horizontal_weight_cone`]. Every returned element passes [`kernel_test`].
pub fn kernel_generators(
    spec: &LfihdSpec,
    algebra: &Algebra,
    bound: i64,
    omega: Option<&Cone>,
) -> Result<KernelGenerators> {
    let mut out = KernelGenerators::default();
    let candidates: Vec<GradedElement> = match spec {
        LfihdSpec::Toric(_) | LfihdSpec::Vertical(_) => {
            let ray = match spec {
                LfihdSpec::Toric(t) => &t.root().ray,
                LfihdSpec::Vertical(v) => &v.root().ray,
                _ => unreachable!(),
            };
            let sigma = algebra.sigma();
            let face = sigma.dual_face(&Cone::ray(ray))?;
            let pts = hilbert_points(&face, bound);
            match algebra {
                Algebra::Toric(_) => pts.into_iter().map(|m| GradedElement::character(spec.field(), m)).collect(),
                Algebra::Divisor(d) => {
                    let mut v = Vec::new();
                    if d.curve() == Curve::Affine {
                        v.push(GradedElement::monomial(RatFunc::var(d.field()), LatVec::zero(d.rank())));
                    }
                    for m in pts {
                        v.extend(piece_elements(d, &m)?);
                    }
                    v
                }
            }
        }
        LfihdSpec::Scaled(_) => {
            return Err(Error::Precondition("kernels are only computed for genuine LFIHDs".into()));
        }
        LfihdSpec::Horizontal(h) => {
            let Algebra::Divisor(d) = algebra else {
                return Err(Error::Precondition("horizontal kernels need a polyhedral divisor".into()));
            };
            let omega = match omega {
                Some(o) => o.clone(),
                None => horizontal_weight_cone(h, d)
                    .ok_or_else(|| Error::Precondition("no quasifan cell matches the spec's vertex".into()))?,
            };
            let v = h.v().clone();
            let pts = hilbert_points_where(&omega, bound, Exec::default(), |m| m.pair(&v).is_integer());
            let mut v = Vec::new();
            for m in pts {
                match kernel_function(d, &m) {
                    Some(phi) => v.push(GradedElement::monomial(phi, m)),
                    None => out.diagnostics.push(format!("degree {m}: D(m) is not integral on the affine part")),
                }
            }
            v
        }
    };
    for a in candidates {
        if kernel_test(spec, &a)? {
            out.elements.push(a);
        } else {
            out.diagnostics.push(format!("{a} is not in the kernel"));
        }
    }
    Ok(out)
}

/// `φ_m` with `div φ_m + 𝔇(m) = 0` away from infinity, if `𝔇(m)` is integral there.
fn kernel_function(d: &PolyDivisor, m: &LatVec) -> Option<RatFunc> {
    let mut phi = RatFunc::one(d.field());
    for (z, delta) in d.coefficients() {
        let Some(p) = z.poly() else { continue };
        let h: Q = delta.vertex_min(m);
        if !h.is_integer() {
            return None;
        }
        let k = (-h).to_integer();
        let k: i64 = num_traits::ToPrimitive::to_i64(&k)?;
        phi = &phi * &RatFunc::from_poly(p.clone()).pow(k);
    }
    Some(phi)
}
