use std::fmt::Write as _;

use serde_json::{json, Value};

use tvar_core::classify::{
    build_horizontal, build_horizontal_steps, check_horizontal_query, closure_oracle, default_s_list, piece_generators,
    vertical_admissible_rays, vertical_roots, HorizontalCertificate, HorizontalOutcome, HorizontalQuery, Rejection,
};
use tvar_core::convexlat::{fmt_q, LatVec, LatticeBox, QVec};
use tvar_core::exec::Exec;
use tvar_core::funcfield::{QDivisor, SectionBasis};
use tvar_core::graded::GradedElement;
use tvar_core::io::{cone_from, parse_fe, parse_generators, parse_latvec, spec_json, ProblemFile};
use tvar_core::lfihd::{verify_axioms, Algebra, ExpSeries, LfihdSpec, Renderer, DEFAULT_ORDER};
use tvar_core::roots::enumerate_roots;
use tvar_core::{Error, Result};

use crate::Common;

const DEFAULT_BOUND: i64 = 4;
const DEFAULT_SAMPLES: usize = 10;

pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { text, json, code: 0 }
    }
}

fn load(c: &Common) -> Result<ProblemFile> {
    ProblemFile::read(&c.file)
}

fn vec_json(v: &LatVec) -> Value {
    json!(v.0)
}

fn qvec_json(v: &QVec) -> Value {
    json!(v.coords().iter().map(fmt_q).collect::<Vec<_>>())
}

fn qdiv_json(d: &QDivisor) -> Value {
    json!(d.iter().map(|(z, a)| json!({"point": z.to_string(), "value": fmt_q(a)})).collect::<Vec<_>>())
}

fn qdiv_text(d: &QDivisor) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.iter().map(|(z, a)| format!("{}*{z}", fmt_q(a))).collect::<Vec<_>>().join(" + ")
}

/// The degree from the flag, else from the file's query.
fn degree(flag: Option<&str>, q: Option<&Vec<i64>>, rank: usize, what: &str) -> Result<LatVec> {
    let v = match (flag, q) {
        (Some(s), _) => parse_latvec(s)?,
        (None, Some(v)) => LatVec::new(v.clone()),
        (None, None) => return Err(Error::Parse(format!("missing --{what}"))),
    };
    if v.rank() != rank {
        return Err(Error::RankMismatch { expected: rank, found: v.rank() });
    }
    Ok(v)
}

pub fn props(c: &Common) -> Result<Report> {
    let file = load(c)?;
    let algebra = file.algebra()?;
    let Algebra::Divisor(d) = algebra else {
        let sigma = algebra.sigma();
        return Ok(Report::ok(
            format!("toric algebra of {sigma}\nproper: yes\n"),
            json!({"kind": "toric", "sigma": sigma.to_string(), "proper": true}),
        ));
    };
    let (proper, reason) = d.is_proper();
    let mut text = format!("{d}proper: {}\n  {reason}\n", if proper { "yes" } else { "no" });
    let mut verts = Value::Null;
    if let Ok(deg) = d.degree_polyhedron() {
        let v: Vec<String> = deg.vertices().iter().map(|w| w.to_string()).collect();
        let _ = writeln!(text, "deg D vertices: {}", v.join(" "));
        verts = json!(deg.vertices().iter().map(qvec_json).collect::<Vec<_>>());
    }
    let fan = d.quasifan(None);
    let cells: Vec<String> = fan.cells().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(text, "quasifan cells: {}", cells.join(" "));
    let json = json!({
        "kind": d.curve().to_string(),
        "proper": proper,
        "reason": reason,
        "degree_vertices": verts,
        "quasifan": cells,
    });
    Ok(Report { text, json, code: if proper { 0 } else { 1 } })
}

pub fn eval(c: &Common, m: Option<&str>) -> Result<Report> {
    let file = load(c)?;
    let d = file.divisor()?;
    let m = degree(m, file.query().m.as_ref(), d.rank(), "m")?;
    let q = d.evaluate(&m)?;
    Ok(Report::ok(format!("D({m}) = {}\n", qdiv_text(&q)), json!({"m": vec_json(&m), "divisor": qdiv_json(&q)})))
}

pub fn piece(c: &Common, m: Option<&str>) -> Result<Report> {
    let file = load(c)?;
    let d = file.divisor()?;
    let m = degree(m, file.query().m.as_ref(), d.rank(), "m")?;
    let p = d.graded_piece(&m)?;
    let (text, json) = match &p.basis {
        SectionBasis::Affine { generator } => (
            format!("A_{m} = ({generator})*k[t]*chi^{m}\n"),
            json!({"m": vec_json(&m), "module": "free", "generator": generator.to_string()}),
        ),
        SectionBasis::Projective { basis } => {
            let b: Vec<String> = basis.iter().map(|f| f.to_string()).collect();
            (
                format!("A_{m}: dimension {}\n{}", b.len(), b.iter().map(|f| format!("  {f}\n")).collect::<String>()),
                json!({"m": vec_json(&m), "dimension": b.len(), "basis": b}),
            )
        }
    };
    Ok(Report::ok(text, json))
}

pub fn roots(c: &Common, bound: Option<i64>) -> Result<Report> {
    let file = load(c)?;
    let sigma = file.tail_cone()?;
    let bound = bound.or(file.query().bound).unwrap_or(DEFAULT_BOUND);
    let rs = enumerate_roots(&sigma, bound)?;
    let mut text = format!("{} roots of {sigma} with |e| <= {bound}\n", rs.len());
    for r in &rs {
        let _ = writeln!(text, "  e = {}  ray = {}", r.e, r.ray);
    }
    let json = json!({
        "bound": bound,
        "roots": rs.iter().map(|r| json!({"e": vec_json(&r.e), "ray": vec_json(&r.ray)})).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

pub fn vertical(c: &Common, bound: Option<i64>) -> Result<Report> {
    let file = load(c)?;
    let d = file.divisor()?;
    let bound = bound.or(file.query().bound).unwrap_or(DEFAULT_BOUND);
    let rays = vertical_admissible_rays(&d)?;
    let mut text = String::new();
    for r in &rays {
        let _ = writeln!(text, "ray {}: {} ({})", r.ray, if r.admissible { "admissible" } else { "not admissible" }, r.reason);
    }
    let fams = vertical_roots(&d, bound)?;
    for f in &fams {
        let phis: Vec<String> = f.specs.iter().map(|s| s.phi().to_string()).collect();
        let _ = writeln!(text, "root e = {} ray = {}: phi in span{{{}}}", f.root.e, f.root.ray, phis.join(", "));
    }
    let json = json!({
        "rays": rays.iter().map(|r| json!({"ray": vec_json(&r.ray), "admissible": r.admissible, "reason": r.reason})).collect::<Vec<_>>(),
        "families": fams.iter().map(|f| json!({
            "e": vec_json(&f.root.e),
            "ray": vec_json(&f.root.ray),
            "phi_basis": f.specs.iter().map(|s| s.phi().to_string()).collect::<Vec<_>>(),
            "reason": f.reason,
        })).collect::<Vec<_>>(),
    });
    let code = if rays.iter().any(|r| r.admissible) { 0 } else { 1 };
    Ok(Report { text, json, code })
}

pub struct HorizontalOpts {
    pub e: Option<String>,
    pub omega: Option<String>,
    pub s_list: Option<String>,
    pub bound: Option<i64>,
    pub s1: Option<u32>,
    pub lambdas: Vec<String>,
}

fn certificate_json(c: &HorizontalCertificate) -> Value {
    json!({
        "omega": c.omega.to_string(),
        "z0": c.z0.to_string(),
        "zinf": c.zinf.to_string(),
        "normalized": ProblemFile::from_divisor(&c.normalized),
        "transcript_identity": c.transcript.is_identity(),
        "e": vec_json(&c.e),
        "v": qvec_json(&c.v),
        "d": c.d,
        "d_prime": c.d_prime,
        "k": c.k,
        "tau": c.tau.to_string(),
        "tau_hat": c.tau_hat.to_string(),
        "s1": c.s1,
        "admissible_s": c.admissible_s,
        "root": {"e": vec_json(&c.root_hat.e), "ray": vec_json(&c.root_hat.ray)},
        "verification": c.verification.to_string(),
        "exact": matches!(c.verification, tvar_core::classify::Verification::Exact { .. }),
        "bound": c.verification.bound(),
    })
}

fn certificate_text(c: &HorizontalCertificate) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "  z0 = {}, zinf = {}, omega = {}", c.z0, c.zinf, c.omega);
    let _ = writeln!(t, "  v = {}, d = {} (d' = {}, k = {})", c.v, c.d, c.d_prime, c.k);
    let _ = writeln!(t, "  tau = {}, tau^ = {}", c.tau, c.tau_hat);
    let _ = writeln!(t, "  s1 = {}, root {} with ray {}", c.s1, c.root_hat.e, c.root_hat.ray);
    let adm: Vec<String> = c.admissible_s.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(t, "  admissible s: {}", adm.join(", "));
    let _ = writeln!(t, "  {}", c.verification);
    t
}

fn rejection_json(r: &Rejection) -> Value {
    json!({
        "condition": r.condition.name(),
        "reason": r.reason,
        "witness": r.witness.as_ref().map(vec_json),
        "s": r.s,
        "provisional": r.provisional.as_deref().map(certificate_json),
    })
}

pub fn horizontal(c: &Common, o: &HorizontalOpts) -> Result<Report> {
    let file = load(c)?;
    let d = file.divisor()?;
    let q = file.query();
    let n = d.rank();
    let e = degree(o.e.as_deref(), q.e.as_ref(), n, "e")?;
    let omega = match (&o.omega, &q.omega) {
        (Some(s), _) => cone_from(n, &parse_generators(s)?)?,
        (None, Some(g)) => cone_from(n, g)?,
        (None, None) => return Err(Error::Parse("missing --omega".into())),
    };
    let s_list = match (&o.s_list, &q.s_list) {
        (Some(s), _) => s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad s-list {s:?}"))))
            .collect::<Result<Vec<_>>>()?,
        (None, Some(l)) => l.clone(),
        (None, None) => default_s_list(),
    };
    let mut query = HorizontalQuery::new(e, omega, s_list);
    query.bound = o.bound.or(q.bound);
    query.s1 = o.s1;
    let outcome = check_horizontal_query(&d, &query, Exec::default())?;
    let f = d.field();
    let lambdas: Vec<String> = if o.lambdas.is_empty() {
        q.lambdas.iter().flatten().map(|x| x.to_string()).collect()
    } else {
        o.lambdas.clone()
    };
    match &outcome {
        HorizontalOutcome::Accepted(cert) => {
            let mut text = format!("ACCEPT\n{}", certificate_text(cert));
            let mut json = json!({"verdict": "accept", "certificate": certificate_json(cert)});
            if !lambdas.is_empty() {
                let ls = lambdas.iter().map(|s| parse_fe(f, s)).collect::<Result<Vec<_>>>()?;
                let spec = if ls.len() == cert.admissible_s.len() {
                    build_horizontal(cert, &ls)?
                } else {
                    let steps: Vec<_> = cert.admissible_s.iter().copied().zip(ls).collect();
                    build_horizontal_steps(cert, &steps)?
                };
                let spec = LfihdSpec::Horizontal(spec);
                let _ = writeln!(text, "spec: {spec}");
                let closure = match &spec {
                    LfihdSpec::Horizontal(h) => closure_oracle(h, &cert.normalized, DEFAULT_BOUND)?,
                    _ => unreachable!(),
                };
                let _ = writeln!(
                    text,
                    "closure oracle: {} generators, {} failures",
                    closure.checked,
                    closure.failures.len()
                );
                json["spec"] = serde_json::to_value(spec_json(&spec)).expect("serializable");
                json["closure_failures"] = json!(closure.failures.len());
            }
            Ok(Report::ok(text, json))
        }
        HorizontalOutcome::Rejected(r) => {
            let mut text = format!("REJECT at condition {}\n  {}\n", r.condition, r.reason);
            if let Some(p) = &r.provisional {
                let _ = write!(text, "provisional data:\n{}", certificate_text(p));
            }
            Ok(Report { text, json: json!({"verdict": "reject", "rejection": rejection_json(r)}), code: 1 })
        }
    }
}

fn series_json(s: &ExpSeries, r: &Renderer) -> Value {
    json!({
        "complete": s.is_complete(),
        "order": s.order(),
        "coefficients": s.nonzero().iter().map(|(i, c)| json!({
            "index": i,
            "value": c.to_string(),
            "rendered": r.element(c),
            "member": s.flags().get(i).map(|f| f.is_ok()),
            "reason": s.flags().get(i).and_then(|f| f.as_ref().err().cloned()),
        })).collect::<Vec<_>>(),
    })
}

pub fn apply(c: &Common, element: Option<&str>, alpha: Option<&str>, order: Option<usize>) -> Result<Report> {
    let file = load(c)?;
    let q = file.query();
    let spec = file.lfihd_spec()?.ok_or_else(|| Error::Parse("the file has no spec".into()))?;
    let algebra = file.algebra()?;
    let named = file.named_elements()?;
    let name = element.map(str::to_string).or(q.element.clone()).ok_or_else(|| Error::Parse("missing --element".into()))?;
    let a = named
        .iter()
        .find(|(k, _)| *k == name)
        .map(|(_, a)| a.clone())
        .ok_or_else(|| Error::Parse(format!("no element named {name:?}")))?;
    let alpha = alpha.map(str::to_string).or(q.alpha.clone()).unwrap_or_else(|| "α".into());
    let s = tvar_core::lfihd::apply(&spec, &a, Some(&algebra), order.unwrap_or(DEFAULT_ORDER))?;
    let r = Renderer::new(named);
    let mut text = format!("exp({alpha} D)({name}) = {}\n", r.series(&s, &alpha));
    for (i, f) in s.flags() {
        if let Err(reason) = f {
            let _ = writeln!(text, "  D^({i})({name}) = {} is not in A: {reason}", s.nonzero()[i]);
        }
    }
    if !s.is_complete() {
        let _ = writeln!(text, "  (truncated at order {})", s.order());
    }
    let code = if s.all_members() { 0 } else { 1 };
    Ok(Report { text, json: json!({"element": name, "series": series_json(&s, &r)}), code })
}

/// Named elements first, then generators of small graded pieces, then sums of pairs.
fn samples(file: &ProblemFile, algebra: &Algebra, n: usize) -> Result<Vec<GradedElement>> {
    let mut out: Vec<GradedElement> = file.named_elements()?.into_iter().map(|(_, a)| a).collect();
    let extra: Vec<GradedElement> = match algebra {
        Algebra::Toric(sigma) => {
            let f = file.field()?;
            let dual = sigma.dual();
            let bx = LatticeBox::new(sigma.rank(), 2);
            let mut pts: Vec<LatVec> = (0..bx.len()).map(|i| bx.point(i)).filter(|m| dual.contains(m)).collect();
            pts.sort_by(|a, b| a.sup_norm().cmp(&b.sup_norm()).then_with(|| a.cmp(b)));
            pts.into_iter().map(|m| GradedElement::character(f, m)).collect()
        }
        Algebra::Divisor(d) => piece_generators(d, 2)?,
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
    out.truncate(n.max(1));
    Ok(out)
}

pub fn verify(c: &Common, n: Option<usize>, max_i: Option<usize>) -> Result<Report> {
    let file = load(c)?;
    let q = file.query();
    let spec = file.lfihd_spec()?.ok_or_else(|| Error::Parse("the file has no spec".into()))?;
    let algebra = file.algebra()?;
    let n = n.or(q.samples).unwrap_or(DEFAULT_SAMPLES);
    let max_i = max_i.or(q.max_i).unwrap_or(2 * spec.period() as usize);
    let sample = samples(&file, &algebra, n)?;
    let report = verify_axioms(&spec, &algebra, &sample, max_i)?;
    let text = format!("{spec}\n{} samples, max_i = {max_i}\n{report}", sample.len());
    let json = json!({
        "spec": spec.to_string(),
        "samples": sample.len(),
        "max_i": max_i,
        "passed": report.passed(),
        "failed_axioms": report.failed_axioms().iter().map(|a| a.name()).collect::<Vec<_>>(),
        "violations": report.violations.iter().map(|v| json!({"axiom": v.axiom.name(), "detail": v.detail})).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, code: if report.passed() { 0 } else { 1 } })
}
