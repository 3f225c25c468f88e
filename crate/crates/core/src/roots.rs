//! Demazure roots of strongly convex cones.

use crate::convexlat::{Cone, LatVec, LatticeBox};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// A root `e` together with its distinguished ray `ρ`, where `⟨e, ρ⟩ = -1`
/// and `e` pairs nonnegatively with every other extremal ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DemazureRoot {
    pub e: LatVec,
    pub ray: LatVec,
}

fn check_cone(c: &Cone) -> Result<()> {
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex);
    }
    if c.rays().is_empty() {
        return Err(Error::NoRays);
    }
    Ok(())
}

fn root_of(c: &Cone, e: &LatVec) -> Option<DemazureRoot> {
    let mut ray = None;
    for r in c.rays() {
        match e.dot(r) {
            -1 if ray.is_none() => ray = Some(r.clone()),
            x if x < 0 => return None,
            _ => {}
        }
    }
    ray.map(|ray| DemazureRoot { e: e.clone(), ray })
}

/// Certifies `e` as a root of `c`.
pub fn is_root(c: &Cone, e: &LatVec) -> Result<Option<DemazureRoot>> {
    check_cone(c)?;
    if e.rank() != c.rank() {
        return Err(Error::RankMismatch { expected: c.rank(), found: e.rank() });
    }
    Ok(root_of(c, e))
}

/// All roots of sup-norm at most `bound`, sorted by distinguished ray, then by `e`.
pub fn enumerate_roots(c: &Cone, bound: i64) -> Result<Vec<DemazureRoot>> {
    enumerate_roots_with(c, bound, Exec::default())
}

pub fn enumerate_roots_with(c: &Cone, bound: i64, exec: Exec) -> Result<Vec<DemazureRoot>> {
    check_cone(c)?;
    if bound <= 0 {
        return Ok(Vec::new());
    }
    let bx = LatticeBox::new(c.rank(), bound);
    let mut roots = exec.filter_map(bx.len(), |i| root_of(c, &bx.point(i)));
    roots.sort_by(|a, b| a.ray.cmp(&b.ray).then_with(|| a.e.cmp(&b.e)));
    Ok(roots)
}
