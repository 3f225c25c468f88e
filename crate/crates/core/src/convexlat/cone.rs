use std::fmt;

use num_traits::Zero;

use super::lattice::{LatVec, QVec, Q};
use super::linalg::{lat_rows, nullspace, primitive_of, rank, rref};
use crate::error::{Error, Result};

/// Largest supported ambient rank.
pub const MAX_RANK: usize = 4;

/// A rational polyhedral cone, kept in both V- and H-representation.
///
/// The V-representation is a list of primitive extremal rays together with a
/// basis of the lineality space. The H-representation is a list of primitive
/// inward facet normals together with a basis of the linear forms vanishing
/// on the cone. Duality swaps the two. The zero cone has no rays, and its
/// dual is the full space, which has no facets.
#[derive(Clone, Debug)]
pub struct Cone {
    rank: usize,
    rays: Vec<LatVec>,
    lineality: Vec<LatVec>,
    facets: Vec<LatVec>,
    equations: Vec<LatVec>,
}

fn check_rank(rank: usize, vs: &[LatVec]) -> Result<()> {
    if rank > MAX_RANK {
        return Err(Error::UnsupportedRank(rank));
    }
    for v in vs {
        if v.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: v.rank() });
        }
    }
    Ok(())
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Canonical integer basis of a linear subspace given by spanning vectors.
fn canonical_basis(vs: &[LatVec], n: usize) -> Vec<LatVec> {
    let (m, _) = rref(&lat_rows(vs), n);
    let mut out: Vec<LatVec> = m.iter().map(|r| primitive_of(r)).collect();
    out.sort();
    out
}

/// Facet normals and equations of the cone generated by `gens`.
fn describe(gens: &[LatVec], n: usize) -> (Vec<LatVec>, Vec<LatVec>) {
    let mut g: Vec<LatVec> = gens.iter().filter(|v| !v.is_zero()).map(|v| v.primitive()).collect();
    g.sort();
    g.dedup();
    let r = rank(&lat_rows(&g), n);
    let eq_basis: Vec<Vec<Q>> = nullspace(&lat_rows(&g), n);
    let equations: Vec<LatVec> = eq_basis.iter().map(|v| primitive_of(v)).collect();
    let equations = canonical_basis(&equations, n);
    if r == 0 {
        return (Vec::new(), equations);
    }
    let eq_rows = lat_rows(&equations);
    let mut combos = Vec::new();
    subsets(g.len(), r - 1, 0, &mut Vec::new(), &mut combos);
    let mut facets: Vec<LatVec> = Vec::new();
    for combo in combos {
        let mut rows: Vec<Vec<Q>> = combo.iter().map(|&i| lat_rows(&g[i..=i]).remove(0)).collect();
        rows.extend(eq_rows.iter().cloned());
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            continue;
        }
        let a = primitive_of(&ns[0]);
        let (mut pos, mut neg) = (false, false);
        for v in &g {
            let s = a.dot(v);
            pos |= s > 0;
            neg |= s < 0;
        }
        let a = match (pos, neg) {
            (true, false) => a,
            (false, true) => -&a,
            _ => continue,
        };
        if !facets.contains(&a) {
            facets.push(a);
        }
    }
    facets.sort();
    (facets, equations)
}

fn with_negatives(vs: &[LatVec]) -> Vec<LatVec> {
    vs.iter().flat_map(|v| [v.clone(), -v]).collect()
}

impl Cone {
    /// The cone generated by `generators` (which need not be minimal).
    pub fn new(rank: usize, generators: &[LatVec]) -> Result<Cone> {
        check_rank(rank, generators)?;
        let (facets, equations) = describe(generators, rank);
        let mut dual_gens = facets.clone();
        dual_gens.extend(with_negatives(&equations));
        let (rays, lineality) = describe(&dual_gens, rank);
        Ok(Cone { rank, rays, lineality, facets, equations })
    }

    /// The cone `{x : ⟨a, x⟩ ≥ 0 for a in facets, ⟨b, x⟩ = 0 for b in equations}`.
    pub fn from_inequalities(rank: usize, facets: &[LatVec], equations: &[LatVec]) -> Result<Cone> {
        check_rank(rank, facets)?;
        check_rank(rank, equations)?;
        let mut gens = facets.to_vec();
        gens.extend(with_negatives(equations));
        Ok(Cone::new(rank, &gens)?.dual())
    }

    /// Cone generated by rays plus a linear subspace.
    pub fn with_lineality(rank: usize, rays: &[LatVec], lineality: &[LatVec]) -> Result<Cone> {
        let mut gens = rays.to_vec();
        gens.extend(with_negatives(lineality));
        Cone::new(rank, &gens)
    }

    pub fn zero(rank: usize) -> Cone {
        Cone::new(rank, &[]).expect("rank within bounds")
    }

    pub fn full(rank: usize) -> Cone {
        Cone::zero(rank).dual()
    }

    /// The cone generated by a set of rational vectors.
    pub fn from_qvecs(rank: usize, gens: &[QVec]) -> Result<Cone> {
        let g: Vec<LatVec> = gens.iter().map(|v| v.ray_direction()).collect();
        Cone::new(rank, &g)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Primitive extremal rays (modulo the lineality space).
    pub fn rays(&self) -> &[LatVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[LatVec] {
        &self.lineality
    }

    /// Primitive inward facet normals in the dual lattice.
    pub fn facets(&self) -> &[LatVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[LatVec] {
        &self.equations
    }

    /// Rays together with both signs of every lineality basis vector.
    pub fn generators(&self) -> Vec<LatVec> {
        let mut g = self.rays.clone();
        g.extend(with_negatives(&self.lineality));
        g
    }

    pub fn dim(&self) -> usize {
        self.rank - self.equations.len()
    }

    pub fn is_full_dim(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// True iff the cone contains no line.
    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn dual(&self) -> Cone {
        Cone {
            rank: self.rank,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn contains(&self, x: &LatVec) -> bool {
        self.facets.iter().all(|a| a.dot(x) >= 0) && self.equations.iter().all(|b| b.dot(x) == 0)
    }

    pub fn contains_q(&self, x: &QVec) -> bool {
        self.facets.iter().all(|a| a.pair(x) >= Q::zero()) && self.equations.iter().all(|b| b.pair(x).is_zero())
    }

    /// Membership in the relative interior.
    pub fn contains_relint(&self, x: &LatVec) -> bool {
        self.facets.iter().all(|a| a.dot(x) > 0) && self.equations.iter().all(|b| b.dot(x) == 0)
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Set equality.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.rank == other.rank && self.contains_cone(other) && other.contains_cone(self)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut f = self.facets.clone();
        f.extend(other.facets.iter().cloned());
        let mut e = self.equations.clone();
        e.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.rank, &f, &e).expect("ranks already validated")
    }

    /// A lattice point in the relative interior.
    pub fn relint_point(&self) -> LatVec {
        self.rays.iter().fold(LatVec::zero(self.rank), |acc, r| &acc + r)
    }

    /// All faces of dimension `d`.
    pub fn faces(&self, d: usize) -> Vec<Cone> {
        let mut out: Vec<Cone> = Vec::new();
        let nf = self.facets.len();
        for mask in 0u64..(1u64 << nf) {
            let tight: Vec<&LatVec> = (0..nf).filter(|i| mask & (1 << i) != 0).map(|i| &self.facets[i]).collect();
            let rays: Vec<LatVec> =
                self.rays.iter().filter(|r| tight.iter().all(|a| a.dot(r) == 0)).cloned().collect();
            let face = Cone::with_lineality(self.rank, &rays, &self.lineality).expect("ranks already validated");
            if face.dim() == d && !out.iter().any(|f| f.same_set(&face)) {
                out.push(face);
            }
        }
        out.sort_by(|a, b| a.rays.cmp(&b.rays));
        out
    }

    /// The dual face `f^⊥ ∩ self^∨` of a face `f`.
    pub fn dual_face(&self, f: &Cone) -> Result<Cone> {
        if f.rank != self.rank || !self.contains_cone(f) {
            return Err(Error::NotAFace);
        }
        let fg = f.generators();
        let dual_rays: Vec<LatVec> =
            self.facets.iter().filter(|a| fg.iter().all(|g| a.dot(g) == 0)).cloned().collect();
        let star = Cone::with_lineality(self.rank, &dual_rays, &self.equations)?;
        let sg = star.generators();
        let rays: Vec<LatVec> = self.rays.iter().filter(|r| sg.iter().all(|a| a.dot(r) == 0)).cloned().collect();
        let recovered = Cone::with_lineality(self.rank, &rays, &self.lineality)?;
        if !recovered.same_set(f) {
            return Err(Error::NotAFace);
        }
        Ok(star)
    }

    /// Cone spanned by a single ray.
    pub fn ray(v: &LatVec) -> Cone {
        Cone::new(v.rank(), std::slice::from_ref(v)).expect("rank within bounds")
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Cone) -> bool {
        self.same_set(other)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(|r| r.to_string()).collect();
        write!(f, "cone{{{}}}", rays.join(","))?;
        if !self.lineality.is_empty() {
            let lin: Vec<String> = self.lineality.iter().map(|r| r.to_string()).collect();
            write!(f, "+lin{{{}}}", lin.join(","))?;
        }
        Ok(())
    }
}

/// Dual cone. Errors for ranks above [`MAX_RANK`].
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    if c.rank() > MAX_RANK {
        return Err(Error::UnsupportedRank(c.rank()));
    }
    Ok(c.dual())
}
