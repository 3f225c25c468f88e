use std::fmt;

use num_traits::Zero;

use super::cone::Cone;
use super::fan::QuasiFan;
use super::lattice::{qi, LatVec, QVec, Q};
use crate::error::{Error, Result};

/// Value of a support function: a rational or `-∞` outside the dual of the tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SupportValue {
    NegInfinity,
    Finite(Q),
}

impl SupportValue {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            SupportValue::Finite(q) => Some(q),
            SupportValue::NegInfinity => None,
        }
    }
}

impl fmt::Display for SupportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportValue::NegInfinity => write!(f, "-inf"),
            SupportValue::Finite(q) => write!(f, "{}", super::lattice::fmt_q(q)),
        }
    }
}

/// A polyhedron `conv(vertices) + tail` with a minimal, sorted vertex list.
#[derive(Clone, Debug)]
pub struct SigmaPolyhedron {
    vertices: Vec<QVec>,
    tail: Cone,
}

fn is_vertex(v: &QVec, all: &[QVec], tail: &Cone) -> bool {
    let mut gens: Vec<LatVec> = all.iter().filter(|w| *w != v).map(|w| (w - v).ray_direction()).collect();
    gens.extend(tail.generators());
    Cone::new(tail.rank(), &gens).map(|c| c.is_strongly_convex()).unwrap_or(false)
}

impl SigmaPolyhedron {
    pub fn new(vertices: Vec<QVec>, tail: Cone) -> Result<SigmaPolyhedron> {
        if vertices.is_empty() {
            return Err(Error::Precondition("polyhedron needs at least one vertex".into()));
        }
        for v in &vertices {
            if v.rank() != tail.rank() {
                return Err(Error::RankMismatch { expected: tail.rank(), found: v.rank() });
            }
        }
        let mut vs = vertices;
        vs.sort();
        vs.dedup();
        let keep: Vec<QVec> = vs.iter().filter(|v| is_vertex(v, &vs, &tail)).cloned().collect();
        if keep.is_empty() {
            return Err(Error::NotStronglyConvex);
        }
        Ok(SigmaPolyhedron { vertices: keep, tail })
    }

    /// The tail cone itself, i.e. `{0} + tail`.
    pub fn tail_only(tail: Cone) -> SigmaPolyhedron {
        SigmaPolyhedron { vertices: vec![QVec::zero(tail.rank())], tail }
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn rank(&self) -> usize {
        self.tail.rank()
    }

    /// True iff the polyhedron equals its tail.
    pub fn is_tail(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].is_zero()
    }

    /// Minimum of `⟨m, v⟩` over the vertices, regardless of the tail.
    pub fn vertex_min(&self, m: &LatVec) -> Q {
        self.vertices.iter().map(|v| m.pair(v)).min().expect("nonempty vertex list")
    }

    /// The support function `h(m) = min ⟨m, Δ⟩`, `-∞` when `m` is outside the dual of the tail.
    pub fn support_value(&self, m: &LatVec) -> Result<SupportValue> {
        if m.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: m.rank() });
        }
        if !self.tail.dual().contains(m) {
            return Ok(SupportValue::NegInfinity);
        }
        Ok(SupportValue::Finite(self.vertex_min(m)))
    }

    /// The first vertex attaining `vertex_min(m)`.
    pub fn minimizing_vertex(&self, m: &LatVec) -> &QVec {
        let best = self.vertex_min(m);
        self.vertices.iter().find(|v| m.pair(v) == best).expect("minimum attained")
    }

    pub fn minkowski_sum(&self, other: &SigmaPolyhedron) -> Result<SigmaPolyhedron> {
        if !self.tail.same_set(&other.tail) {
            return Err(Error::TailMismatch);
        }
        let mut vs = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                vs.push(a + b);
            }
        }
        SigmaPolyhedron::new(vs, self.tail.clone())
    }

    pub fn dilate(&self, k: u64) -> Result<SigmaPolyhedron> {
        if k == 0 {
            return Err(Error::Precondition("dilation factor must be positive".into()));
        }
        let f = qi(k as i64);
        Ok(SigmaPolyhedron { vertices: self.vertices.iter().map(|v| v.scale(&f)).collect(), tail: self.tail.clone() })
    }

    pub fn translate(&self, t: &QVec) -> SigmaPolyhedron {
        let mut vs: Vec<QVec> = self.vertices.iter().map(|v| v + t).collect();
        vs.sort();
        SigmaPolyhedron { vertices: vs, tail: self.tail.clone() }
    }

    /// The cone of `m` in the dual of the tail on which `vertex` attains the minimum.
    pub fn normal_cone(&self, vertex: &QVec) -> Cone {
        let mut gens: Vec<LatVec> =
            self.vertices.iter().filter(|w| *w != vertex).map(|w| (w - vertex).ray_direction()).collect();
        gens.extend(self.tail.generators());
        Cone::new(self.rank(), &gens).expect("rank validated").dual()
    }

    /// The normal quasifan: one full-dimensional cell per vertex.
    pub fn normal_fan(&self) -> QuasiFan {
        QuasiFan::new(self.vertices.iter().map(|v| self.normal_cone(v)).collect())
    }

    /// Membership test via the homogenized cone.
    pub fn contains(&self, x: &QVec) -> Result<bool> {
        let n = self.rank();
        let mut gens: Vec<QVec> = self.vertices.iter().map(|v| v.extend(qi(1))).collect();
        gens.extend(self.tail.generators().iter().map(|r| r.to_qvec().extend(Q::zero())));
        let hom = Cone::from_qvecs(n + 1, &gens)?;
        Ok(hom.contains_q(&x.extend(qi(1))))
    }

    /// Set equality.
    pub fn same_set(&self, other: &SigmaPolyhedron) -> bool {
        self.tail.same_set(&other.tail) && self.vertices == other.vertices
    }
}

impl PartialEq for SigmaPolyhedron {
    fn eq(&self, other: &SigmaPolyhedron) -> bool {
        self.same_set(other)
    }
}

impl fmt::Display for SigmaPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "conv{{{}}} + {}", vs.join(","), self.tail)
    }
}

/// Support value as a free function.
pub fn support_value(poly: &SigmaPolyhedron, m: &LatVec) -> Result<SupportValue> {
    poly.support_value(m)
}

pub fn minkowski_sum(a: &SigmaPolyhedron, b: &SigmaPolyhedron) -> Result<SigmaPolyhedron> {
    a.minkowski_sum(b)
}

pub fn dilate(a: &SigmaPolyhedron, k: u64) -> Result<SigmaPolyhedron> {
    a.dilate(k)
}
