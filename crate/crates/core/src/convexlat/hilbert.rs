use std::collections::HashSet;

use super::cone::Cone;
use super::lattice::{LatVec, LatticeBox};
use crate::exec::Exec;

/// Irreducible lattice points of a cone within a sup-norm box.
///
/// Returns every nonzero lattice point of `c` with sup-norm at most `bound`
/// that is not the sum of two nonzero points of the box in `c`. For cones
/// containing a line, a decomposition only counts when both summands have
/// smaller 1-norm. The result contains the Hilbert basis once `bound` is large
/// enough.
pub fn hilbert_points(c: &Cone, bound: i64) -> Vec<LatVec> {
    hilbert_points_where(c, bound, Exec::default(), |_| true)
}

/// Like [`hilbert_points`], restricted to the points accepted by `keep`,
/// where `keep` must describe a subsemigroup (closed under addition).
pub fn hilbert_points_where<F>(c: &Cone, bound: i64, exec: Exec, keep: F) -> Vec<LatVec>
where
    F: Fn(&LatVec) -> bool + Sync + Send,
{
    let bx = LatticeBox::new(c.rank(), bound);
    let pts: Vec<LatVec> = exec.filter_map(bx.len(), |i| {
        let p = bx.point(i);
        (!p.is_zero() && c.contains(&p) && keep(&p)).then_some(p)
    });
    let set: HashSet<&LatVec> = pts.iter().collect();
    let pointed = c.is_strongly_convex();
    let l1 = |v: &LatVec| v.0.iter().map(|x| x.abs()).sum::<i64>();
    let irreducible = |p: &LatVec| {
        !pts.iter().any(|a| {
            let b = p - a;
            !b.is_zero() && set.contains(&b) && (pointed || (l1(a) < l1(p) && l1(&b) < l1(p)))
        })
    };
    let flags = exec.map(&pts, irreducible);
    pts.iter().zip(flags).filter(|(_, f)| *f).map(|(p, _)| p.clone()).collect()
}
