use std::collections::BTreeMap;
use std::fmt;

use crate::convexlat::{common_refinement, Cone, LatVec, QuasiFan, SigmaPolyhedron, Q};
use crate::error::{Error, Result};
use crate::funcfield::{check_section, section_module, Curve, CurvePoint, PrimeField, QDivisor, SectionBasis};
use crate::graded::GradedElement;

/// A proper-or-not polyhedral divisor `Σ Δ_z·z` over the affine or projective line.
///
/// Coefficients equal to the tail cone are not stored.
#[derive(Clone, Debug)]
pub struct PolyDivisor {
    field: PrimeField,
    curve: Curve,
    tail: Cone,
    coeffs: BTreeMap<CurvePoint, SigmaPolyhedron>,
    proper: bool,
    proper_reason: String,
}

/// A graded piece `A_m` of the coordinate ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: LatVec,
    pub basis: SectionBasis,
}

impl PolyDivisor {
    pub fn new(
        field: PrimeField,
        curve: Curve,
        tail: Cone,
        coefficients: Vec<(CurvePoint, SigmaPolyhedron)>,
    ) -> Result<PolyDivisor> {
        if !tail.is_strongly_convex() {
            return Err(Error::NotStronglyConvex);
        }
        let mut coeffs = BTreeMap::new();
        for (z, delta) in coefficients {
            match &z {
                CurvePoint::Infinity if curve == Curve::Affine => {
                    return Err(Error::InvalidPoint("infinity on the affine line".into()));
                }
                CurvePoint::Finite(p) if p.field() != field => return Err(Error::FieldMismatch),
                _ => {}
            }
            if !delta.tail().same_set(&tail) {
                return Err(Error::TailMismatch);
            }
            if coeffs.contains_key(&z) {
                return Err(Error::InvalidPoint(format!("{z} listed twice")));
            }
            if !delta.is_tail() {
                coeffs.insert(z, delta);
            }
        }
        let mut d = PolyDivisor { field, curve, tail, coeffs, proper: true, proper_reason: String::new() };
        let (proper, reason) = d.compute_properness();
        d.proper = proper;
        d.proper_reason = reason;
        Ok(d)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn rank(&self) -> usize {
        self.tail.rank()
    }

    /// Stored coefficients (those different from the tail), sorted by point.
    pub fn coefficients(&self) -> &BTreeMap<CurvePoint, SigmaPolyhedron> {
        &self.coeffs
    }

    pub fn coefficient(&self, z: &CurvePoint) -> SigmaPolyhedron {
        self.coeffs.get(z).cloned().unwrap_or_else(|| SigmaPolyhedron::tail_only(self.tail.clone()))
    }

    pub fn points(&self) -> Vec<CurvePoint> {
        self.coeffs.keys().cloned().collect()
    }

    /// `σ^∨`.
    pub fn weight_cone(&self) -> Cone {
        self.tail.dual()
    }

    /// `h_z(m)` for `m ∈ σ^∨`.
    pub fn h(&self, z: &CurvePoint, m: &LatVec) -> Q {
        match self.coeffs.get(z) {
            Some(d) => d.vertex_min(m),
            None => Q::from_integer(0.into()),
        }
    }

    fn check_rank(&self, m: &LatVec) -> Result<()> {
        if m.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: m.rank() });
        }
        Ok(())
    }

    /// `𝔇(m) = Σ h_z(m)·z` for `m ∈ σ^∨_M`.
    pub fn evaluate(&self, m: &LatVec) -> Result<QDivisor> {
        self.check_rank(m)?;
        if !self.weight_cone().contains(m) {
            return Err(Error::OutsideDualCone(m.to_string()));
        }
        Ok(self.evaluate_extended(m))
    }

    /// `Σ min_{v ∈ Δ_z(0)} ⟨m, v⟩·z` for any `m`, as used for roots outside `σ^∨`.
    pub fn evaluate_extended(&self, m: &LatVec) -> QDivisor {
        QDivisor::from_pairs(self.coeffs.iter().map(|(z, d)| (z.clone(), d.vertex_min(m))))
    }

    /// `deg 𝔇 = Σ deg(z)·Δ_z` on the projective line.
    pub fn degree_polyhedron(&self) -> Result<SigmaPolyhedron> {
        if self.curve != Curve::Projective {
            return Err(Error::NotProjective);
        }
        let mut acc = SigmaPolyhedron::tail_only(self.tail.clone());
        for (z, d) in &self.coeffs {
            acc = acc.minkowski_sum(&d.dilate(z.degree() as u64)?)?;
        }
        Ok(acc)
    }

    fn compute_properness(&self) -> (bool, String) {
        if self.curve == Curve::Affine {
            return (true, "the curve is affine".into());
        }
        let deg = self.degree_polyhedron().expect("projective");
        if let Some(v) = deg.vertices().iter().find(|v| !self.tail.contains_q(v)) {
            return (false, format!("deg D has the vertex {v} outside the tail cone"));
        }
        if deg.is_tail() {
            return (false, "deg D equals the tail cone".into());
        }
        (
            true,
            "deg D is a proper subset of the tail cone; every degree-0 divisor on P^1 is principal, so the principality condition holds"
                .into(),
        )
    }

    /// Properness verdict with its reason.
    pub fn is_proper(&self) -> (bool, &str) {
        (self.proper, &self.proper_reason)
    }

    /// The quasifan on which `m ↦ 𝔇(m)` is linear, optionally ignoring one point.
    pub fn quasifan(&self, restrict_away_from: Option<&CurvePoint>) -> QuasiFan {
        let fans: Vec<QuasiFan> = self
            .coeffs
            .iter()
            .filter(|(z, _)| Some(*z) != restrict_away_from)
            .map(|(_, d)| d.normal_fan())
            .collect();
        if fans.is_empty() {
            return QuasiFan::new(vec![self.weight_cone()]);
        }
        common_refinement(&fans).expect("all normal fans cover the dual of the tail")
    }

    /// `A_m = H^0(C, O(𝔇(m)))`.
    pub fn graded_piece(&self, m: &LatVec) -> Result<GradedPiece> {
        if !self.proper {
            return Err(Error::Improper(self.proper_reason.clone()));
        }
        let d = self.evaluate(m)?;
        Ok(GradedPiece { degree: m.clone(), basis: section_module(&d, self.curve, self.field) })
    }

    /// Why `a` is not in `A`, or `Ok` if it is.
    pub fn membership(&self, a: &GradedElement) -> std::result::Result<(), String> {
        if a.field() != self.field {
            return Err("field mismatch".into());
        }
        if a.cover() != 1 {
            return Err(format!("coefficients involve a root of t of order {}", a.cover()));
        }
        let sd = self.weight_cone();
        for (m, f) in a.terms() {
            if m.rank() != self.rank() {
                return Err(format!("degree {m} has the wrong rank"));
            }
            if !sd.contains(m) {
                return Err(format!("degree {m} lies outside the weight cone"));
            }
            check_section(&self.evaluate_extended(m), f, self.curve).map_err(|e| format!("degree {m}: {e}"))?;
        }
        Ok(())
    }

    /// Whether every homogeneous component of `a` lies in its graded piece.
    pub fn check_membership(&self, a: &GradedElement) -> bool {
        self.membership(a).is_ok()
    }
}

impl fmt::Display for PolyDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}, {} line, tail {}", self.field, self.curve, self.tail)?;
        for (z, d) in &self.coeffs {
            writeln!(f, "  {z}: {d}")?;
        }
        Ok(())
    }
}
