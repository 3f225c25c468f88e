//! JSON problem files.
//!
//! Rationals are exact strings `"p/q"`; field elements may also be given as
//! JSON integers. Polynomials are coefficient arrays, lowest degree first.
//! Files written by this module use strings throughout and parse back to the
//! same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::convexlat::{fmt_q, parse_q, Cone, LatVec, QVec, SigmaPolyhedron};
use crate::error::{Error, Result};
use crate::funcfield::{Curve, CurvePoint, Fe, Poly, PrimeField, RatFunc};
use crate::graded::GradedElement;
use crate::lfihd::{Algebra, HorizontalSpec, LfihdSpec, Step, ToricSpec, VerticalSpec};
use crate::pdiv::PolyDivisor;

/// A number written either as a JSON integer or as a string `"p"`, `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    fn from_fe(a: &Fe) -> Num {
        Num::Str(a.to_string())
    }

    fn to_fe(&self, f: PrimeField) -> Result<Fe> {
        match self {
            Num::Int(n) => Ok(f.from_i64(*n)),
            Num::Str(s) => f.from_q(&parse_q(s)?),
        }
    }

    fn to_q(&self) -> Result<crate::convexlat::Q> {
        match self {
            Num::Int(n) => Ok(crate::convexlat::Q::from_integer((*n).into())),
            Num::Str(s) => parse_q(s),
        }
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Num::Int(n) => write!(f, "{n}"),
            Num::Str(s) => write!(f, "{s}"),
        }
    }
}

/// `"affine"`, `"projective"`, or `"toric"` for the toric algebra `k[σ^∨ ∩ M]` itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Affine,
    Projective,
    Toric,
}

/// A closed point: `"infinity"` or the coefficients of its monic irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Named(String),
    Poly(Vec<Num>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientJson {
    pub point: PointJson,
    pub vertices: Vec<Vec<Num>>,
}

/// `num / den`; `den` defaults to `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuncJson {
    pub num: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<Vec<Num>>,
}

/// One homogeneous term `f·χ^degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub degree: Vec<i64>,
    #[serde(flatten)]
    pub coefficient: FuncJson,
}

/// A step `λ·x^{p^s}` of a horizontal spec, or `λ·x^{exponent}` for raw exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    pub lambda: Num,
}

fn is_false(b: &bool) -> bool {
    !*b
}

fn is_zero_u32(r: &u32) -> bool {
    *r == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpecJson {
    Toric {
        e: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ray: Option<Vec<i64>>,
        lambda: Num,
        #[serde(default, skip_serializing_if = "is_zero_u32")]
        r: u32,
        #[serde(default, skip_serializing_if = "is_false")]
        unchecked: bool,
    },
    Vertical {
        e: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ray: Option<Vec<i64>>,
        phi: FuncJson,
        #[serde(default, skip_serializing_if = "is_false")]
        unchecked: bool,
    },
    Horizontal {
        e: Vec<i64>,
        v: Vec<Num>,
        steps: Vec<StepJson>,
    },
    Scaled {
        base: Box<SpecJson>,
        index: usize,
        factor: Num,
    },
}

/// Optional parameters for the CLI subcommands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_list: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
}

/// A problem: a polyhedral divisor (or a bare cone), plus optional spec, query and named elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub field: u64,
    pub rank: usize,
    pub tail: Vec<Vec<i64>>,
    pub curve: CurveKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coefficients: Vec<CoefficientJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<SpecJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, Vec<TermJson>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn lat(rank: usize, c: &[i64]) -> Result<LatVec> {
    if c.len() != rank {
        return Err(Error::RankMismatch { expected: rank, found: c.len() });
    }
    Ok(LatVec::new(c.to_vec()))
}

fn poly_from(f: PrimeField, c: &[Num]) -> Result<Poly> {
    Ok(Poly::from_coeffs(f, c.iter().map(|x| x.to_fe(f)).collect::<Result<_>>()?))
}

fn poly_json(p: &Poly) -> Vec<Num> {
    p.coeffs().iter().map(Num::from_fe).collect()
}

fn func_from(f: PrimeField, j: &FuncJson) -> Result<RatFunc> {
    let den = match &j.den {
        Some(d) => poly_from(f, d)?,
        None => Poly::one(f),
    };
    RatFunc::new(poly_from(f, &j.num)?, den)
}

fn func_json(r: &RatFunc) -> FuncJson {
    FuncJson { num: poly_json(r.num()), den: (!r.den().is_constant()).then(|| poly_json(r.den())) }
}

fn cone_json(c: &Cone) -> Vec<Vec<i64>> {
    c.generators().iter().map(|g| g.0.clone()).collect()
}

/// Parses a cone given by generators.
pub fn cone_from(rank: usize, gens: &[Vec<i64>]) -> Result<Cone> {
    let g: Vec<LatVec> = gens.iter().map(|c| lat(rank, c)).collect::<Result<_>>()?;
    Cone::new(rank, &g)
}

pub fn point_from(f: PrimeField, p: &PointJson) -> Result<CurvePoint> {
    match p {
        PointJson::Named(s) if s == "infinity" => Ok(CurvePoint::Infinity),
        PointJson::Named(s) => Err(Error::Parse(format!("unknown point {s:?}"))),
        PointJson::Poly(c) => CurvePoint::finite(poly_from(f, c)?),
    }
}

pub fn point_json(z: &CurvePoint) -> PointJson {
    match z {
        CurvePoint::Infinity => PointJson::Named("infinity".into()),
        CurvePoint::Finite(p) => PointJson::Poly(poly_json(p)),
    }
}

fn qvec_from(rank: usize, c: &[Num]) -> Result<QVec> {
    if c.len() != rank {
        return Err(Error::RankMismatch { expected: rank, found: c.len() });
    }
    Ok(QVec::new(c.iter().map(Num::to_q).collect::<Result<_>>()?))
}

fn qvec_json(v: &QVec) -> Vec<Num> {
    v.coords().iter().map(|q| Num::Str(fmt_q(q))).collect()
}

/// Parses one element given as a list of terms.
pub fn element_from(f: PrimeField, rank: usize, terms: &[TermJson]) -> Result<GradedElement> {
    let mut g = GradedElement::zero(f, rank);
    for t in terms {
        g.add_term(lat(rank, &t.degree)?, &func_from(f, &t.coefficient)?);
    }
    Ok(g)
}

/// The terms of an element over the base field (cover 1).
pub fn element_json(a: &GradedElement) -> Result<Vec<TermJson>> {
    let a = a.descend().ok_or_else(|| Error::Precondition("element involves a root of t".into()))?;
    Ok(a.terms().iter().map(|(m, f)| TermJson { degree: m.0.clone(), coefficient: func_json(f) }).collect())
}

pub fn spec_json(spec: &LfihdSpec) -> SpecJson {
    match spec {
        LfihdSpec::Toric(t) => SpecJson::Toric {
            e: t.root().e.0.clone(),
            ray: Some(t.root().ray.0.clone()),
            lambda: Num::from_fe(t.lambda()),
            r: t.r(),
            unchecked: false,
        },
        LfihdSpec::Vertical(v) => SpecJson::Vertical {
            e: v.root().e.0.clone(),
            ray: Some(v.root().ray.0.clone()),
            phi: func_json(v.phi()),
            unchecked: false,
        },
        LfihdSpec::Horizontal(h) => {
            let s = h.s_list();
            let steps = h
                .steps()
                .iter()
                .enumerate()
                .map(|(i, st)| StepJson {
                    s: s.as_ref().map(|s| s[i]),
                    exponent: s.is_none().then_some(st.exponent),
                    lambda: Num::from_fe(&st.lambda),
                })
                .collect();
            SpecJson::Horizontal { e: h.e().0.clone(), v: qvec_json(h.v()), steps }
        }
        LfihdSpec::Scaled(s) => {
            SpecJson::Scaled { base: Box::new(spec_json(&s.base)), index: s.index, factor: Num::from_fe(&s.factor) }
        }
    }
}

impl ProblemFile {
    pub fn parse(s: &str) -> Result<ProblemFile> {
        serde_json::from_str(s).map_err(parse_err)
    }

    pub fn read(path: &std::path::Path) -> Result<ProblemFile> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        ProblemFile::parse(&s)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// The canonical file of a divisor.
    pub fn from_divisor(d: &PolyDivisor) -> ProblemFile {
        let coefficients = d
            .coefficients()
            .iter()
            .map(|(z, delta)| CoefficientJson {
                point: point_json(z),
                vertices: delta.vertices().iter().map(qvec_json).collect(),
            })
            .collect();
        ProblemFile {
            field: d.field().characteristic(),
            rank: d.rank(),
            tail: cone_json(d.tail()),
            curve: match d.curve() {
                Curve::Affine => CurveKind::Affine,
                Curve::Projective => CurveKind::Projective,
            },
            coefficients,
            spec: None,
            query: None,
            elements: BTreeMap::new(),
        }
    }

    /// The canonical file of the toric algebra of `sigma`.
    pub fn from_cone(field: PrimeField, sigma: &Cone) -> ProblemFile {
        ProblemFile {
            field: field.characteristic(),
            rank: sigma.rank(),
            tail: cone_json(sigma),
            curve: CurveKind::Toric,
            coefficients: vec![],
            spec: None,
            query: None,
            elements: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.field)
    }

    pub fn tail_cone(&self) -> Result<Cone> {
        cone_from(self.rank, &self.tail)
    }

    /// The polyhedral divisor; errors for toric files.
    pub fn divisor(&self) -> Result<PolyDivisor> {
        let curve = match self.curve {
            CurveKind::Affine => Curve::Affine,
            CurveKind::Projective => Curve::Projective,
            CurveKind::Toric => return Err(Error::Precondition("the file describes a toric algebra".into())),
        };
        let f = self.field()?;
        let tail = self.tail_cone()?;
        let mut coeffs = Vec::new();
        for c in &self.coefficients {
            let verts: Vec<QVec> = c.vertices.iter().map(|v| qvec_from(self.rank, v)).collect::<Result<_>>()?;
            coeffs.push((point_from(f, &c.point)?, SigmaPolyhedron::new(verts, tail.clone())?));
        }
        PolyDivisor::new(f, curve, tail, coeffs)
    }

    pub fn algebra(&self) -> Result<Algebra> {
        match self.curve {
            CurveKind::Toric => {
                if !self.coefficients.is_empty() {
                    return Err(Error::Parse("a toric file has no coefficients".into()));
                }
                let c = self.tail_cone()?;
                if !c.is_strongly_convex() {
                    return Err(Error::NotStronglyConvex);
                }
                Ok(Algebra::Toric(c))
            }
            _ => Ok(Algebra::Divisor(self.divisor()?)),
        }
    }

    /// The spec, validated against the algebra unless marked `unchecked`.
    pub fn lfihd_spec(&self) -> Result<Option<LfihdSpec>> {
        match &self.spec {
            None => Ok(None),
            Some(s) => Ok(Some(self.build_spec(s)?)),
        }
    }

    fn build_spec(&self, s: &SpecJson) -> Result<LfihdSpec> {
        let f = self.field()?;
        let n = self.rank;
        Ok(match s {
            SpecJson::Toric { e, ray, lambda, r, unchecked } => {
                let (e, lambda) = (lat(n, e)?, lambda.to_fe(f)?);
                if *unchecked {
                    LfihdSpec::Toric(ToricSpec::unchecked(e, lat(n, need_ray(ray)?)?, lambda, *r))
                } else {
                    let spec = ToricSpec::new(&self.tail_cone()?, &e, lambda, *r)?;
                    check_ray(ray, &spec.root().ray)?;
                    LfihdSpec::Toric(spec)
                }
            }
            SpecJson::Vertical { e, ray, phi, unchecked } => {
                let (e, phi) = (lat(n, e)?, func_from(f, phi)?);
                if *unchecked {
                    LfihdSpec::Vertical(VerticalSpec::unchecked(e, lat(n, need_ray(ray)?)?, phi))
                } else {
                    let spec = VerticalSpec::new(&self.divisor()?, &e, phi)?;
                    check_ray(ray, &spec.root().ray)?;
                    LfihdSpec::Vertical(spec)
                }
            }
            SpecJson::Horizontal { e, v, steps } => {
                let (e, v) = (lat(n, e)?, qvec_from(n, v)?);
                let raw = steps.iter().any(|st| st.exponent.is_some());
                if raw {
                    let st = steps
                        .iter()
                        .map(|st| match (st.s, st.exponent) {
                            (None, Some(x)) => Ok(Step { exponent: x, lambda: st.lambda.to_fe(f)? }),
                            _ => Err(Error::Parse("give either s for every step or exponent for every step".into())),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    LfihdSpec::Horizontal(HorizontalSpec::with_raw_exponents(e, v, st))
                } else {
                    let st = steps
                        .iter()
                        .map(|st| {
                            let s = st.s.ok_or_else(|| Error::Parse("step without s".into()))?;
                            Ok((s, st.lambda.to_fe(f)?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    LfihdSpec::Horizontal(HorizontalSpec::new(e, v, &st)?)
                }
            }
            SpecJson::Scaled { base, index, factor } => {
                LfihdSpec::scaled(self.build_spec(base)?, *index, factor.to_fe(f)?)
            }
        })
    }

    /// Named elements, sorted by name.
    pub fn named_elements(&self) -> Result<Vec<(String, GradedElement)>> {
        let f = self.field()?;
        self.elements.iter().map(|(k, t)| Ok((k.clone(), element_from(f, self.rank, t)?))).collect()
    }

    pub fn query(&self) -> QueryJson {
        self.query.clone().unwrap_or_default()
    }
}

fn need_ray(ray: &Option<Vec<i64>>) -> Result<&Vec<i64>> {
    ray.as_ref().ok_or_else(|| Error::Parse("unchecked specs need an explicit ray".into()))
}

fn check_ray(given: &Option<Vec<i64>>, found: &LatVec) -> Result<()> {
    match given {
        Some(r) if r != &found.0 => {
            Err(Error::InvalidSpec(format!("the distinguished ray is {found}, not ({})", join(r))))
        }
        _ => Ok(()),
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `"1,2"` or `"(1,2)"` into a lattice vector.
pub fn parse_latvec(s: &str) -> Result<LatVec> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let c: std::result::Result<Vec<i64>, _> = t.split(',').map(|x| x.trim().parse::<i64>()).collect();
    c.map(LatVec::new).map_err(|_| Error::Parse(format!("not a lattice vector: {s:?}")))
}

/// Parses `"0,1;1,1"` into a list of generators.
pub fn parse_generators(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';').map(|g| parse_latvec(g).map(|v| v.0)).collect()
}

/// Parses a field element written as `"p"` or `"p/q"`.
pub fn parse_fe(f: PrimeField, s: &str) -> Result<Fe> {
    f.from_q(&parse_q(s)?)
}
