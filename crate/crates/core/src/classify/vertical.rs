use crate::convexlat::{Cone, LatVec, QVec, Q};
use crate::error::{Error, Result};
use crate::funcfield::{section_module, Curve};
use crate::lfihd::VerticalSpec;
use crate::pdiv::PolyDivisor;
use crate::roots::{enumerate_roots, is_root, DemazureRoot};

/// Whether a ray of `σ` can be the distinguished ray of a vertical LFIHD.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayVerdict {
    pub ray: LatVec,
    pub admissible: bool,
    pub reason: String,
}

/// Whether the ray through `rho` meets `deg 𝔇`, decided on the homogenization
/// `cone{(w, 1), (σ, 0)} ∩ cone{(ρ, 0), (0, 1)}`.
pub fn ray_meets_degree(d: &PolyDivisor, rho: &LatVec) -> Result<bool> {
    let deg = d.degree_polyhedron()?;
    let n = d.rank();
    let mut gens: Vec<QVec> = deg.vertices().iter().map(|w| w.extend(Q::from_integer(1.into()))).collect();
    gens.extend(d.tail().generators().iter().map(|g| g.to_qvec().extend(Q::from_integer(0.into()))));
    let hom = Cone::from_qvecs(n + 1, &gens)?;
    let plane = Cone::new(n + 1, &[rho.extend(0), LatVec::unit(n + 1, n)])?;
    let meet = hom.intersect(&plane);
    Ok(meet.generators().iter().any(|g| g.coords()[n] > 0))
}

/// Rays of the tail cone with their vertical admissibility.
///
/// Over the affine line every ray is admissible; over the projective line a
/// ray is admissible exactly when it misses `deg 𝔇`.
pub fn vertical_admissible_rays(d: &PolyDivisor) -> Result<Vec<RayVerdict>> {
    let mut out = Vec::new();
    for ray in d.tail().rays() {
        let (admissible, reason) = match d.curve() {
            Curve::Affine => (true, "the curve is affine".to_string()),
            Curve::Projective => {
                if ray_meets_degree(d, ray)? {
                    (false, format!("the ray through {ray} meets deg D"))
                } else {
                    (true, format!("the ray through {ray} misses deg D"))
                }
            }
        };
        out.push(RayVerdict { ray: ray.clone(), admissible, reason });
    }
    Ok(out)
}

/// Vertical specs `∂_{e,φ}` for `φ` running over a basis of `Φ_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalFamily {
    pub root: DemazureRoot,
    pub specs: Vec<VerticalSpec>,
    pub reason: String,
}

/// `Φ_e = H^0(C, O(𝔇(e)))` and one spec per basis element (the module
/// generator over the affine line, where `Φ_e` is that generator times `k[t]`).
pub fn build_vertical(d: &PolyDivisor, e: &LatVec) -> Result<VerticalFamily> {
    let root = is_root(d.tail(), e)?.ok_or_else(|| Error::InvalidSpec(format!("{e} is not a root of {}", d.tail())))?;
    let de = d.evaluate_extended(e);
    let basis = section_module(&de, d.curve(), d.field());
    let elements = basis.elements();
    if elements.is_empty() {
        return Ok(VerticalFamily { root, specs: vec![], reason: format!("deg D(e) = {} < 0", de.degree()) });
    }
    let specs = elements.into_iter().map(|phi| VerticalSpec::new(d, e, phi)).collect::<Result<Vec<_>>>()?;
    let reason = match d.curve() {
        Curve::Affine => "the affine line: Phi_e is generated by one section".into(),
        Curve::Projective => format!("dim Phi_e = {}", specs.len()),
    };
    Ok(VerticalFamily { root, specs, reason })
}

/// Roots in the box whose distinguished ray is admissible and with `Φ_e ≠ 0`.
pub fn vertical_roots(d: &PolyDivisor, bound: i64) -> Result<Vec<VerticalFamily>> {
    let admissible: Vec<LatVec> =
        vertical_admissible_rays(d)?.into_iter().filter(|r| r.admissible).map(|r| r.ray).collect();
    let mut out = Vec::new();
    for root in enumerate_roots(d.tail(), bound)? {
        if !admissible.contains(&root.ray) {
            continue;
        }
        let fam = build_vertical(d, &root.e)?;
        if !fam.specs.is_empty() {
            out.push(fam);
        }
    }
    Ok(out)
}
