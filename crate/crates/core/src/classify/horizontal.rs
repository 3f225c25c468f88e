use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::convexlat::{floor_i64, qi, Cone, LatVec, LatticeBox, QVec, Q};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::funcfield::{Curve, CurvePoint, Fe, RatFunc, SectionBasis};
use crate::graded::GradedElement;
use crate::lfihd::{apply_horizontal, HorizontalSpec, DEFAULT_ORDER};
use crate::pdiv::{linear_vertex_on, normalize_for_horizontal, PolyDivisor, Transcript};
use crate::roots::{is_root, DemazureRoot};

/// Largest default sup-norm box for the condition scan, by rank.
const MAX_DEFAULT_BOX: [i64; 4] = [0, 0, 200, 40];

/// A condition of the horizontal existence criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// `ω` is a maximal cell and the `h_z` are integral on it away from `z_0`.
    Cell,
    /// `(p^s e, -1/d - h(p^s e))` is a root of `τ̂`.
    Root,
    /// Floor inequality at the points other than `0` and `∞`.
    Iv,
    /// Floor inequality at `0`.
    V,
    /// Floor inequality at `∞`.
    Vi,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Cell => "ii",
            Condition::Root => "iii",
            Condition::Iv => "iv",
            Condition::V => "v",
            Condition::Vi => "vi",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.name())
    }
}

/// How far conditions (iv)-(vi) were checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Rank one: every residue class was covered, so the check is a proof.
    Exact { bound: i64 },
    /// All `m` of sup-norm at most `bound`.
    Bounded { bound: i64 },
}

impl Verification {
    pub fn bound(&self) -> i64 {
        match self {
            Verification::Exact { bound } | Verification::Bounded { bound } => *bound,
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verification::Exact { bound } => write!(f, "exact (all residue classes, |m| <= {bound})"),
            Verification::Bounded { bound } => write!(f, "bounded verification (|m| <= {bound})"),
        }
    }
}

/// Outcomes of conditions (iv), (v), (vi); `vi` is `None` over the affine line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionFlags {
    pub iv: bool,
    pub v: bool,
    pub vi: Option<bool>,
}

impl ConditionFlags {
    pub fn all(&self) -> bool {
        self.iv && self.v && self.vi.unwrap_or(true)
    }
}

/// Data proving that a horizontal LFIHD of degree `e` with kernel weight cone `ω` exists.
#[derive(Clone, Debug)]
pub struct HorizontalCertificate {
    pub omega: Cone,
    pub z0: CurvePoint,
    pub zinf: CurvePoint,
    /// The divisor after moving `z_0` to `0`, `z_∞` to `∞` and making `h_z|_ω = 0` elsewhere.
    pub normalized: PolyDivisor,
    pub transcript: Transcript,
    pub e: LatVec,
    pub v: QVec,
    pub d: u64,
    pub d_prime: u64,
    pub k: u32,
    pub tau: Cone,
    pub tau_hat: Cone,
    pub s1: u32,
    /// Every `s ≥ s_1` from the query whose lifted vector is a root of `τ̂`.
    pub admissible_s: Vec<u32>,
    pub root_hat: DemazureRoot,
    pub verification: Verification,
    pub flags: ConditionFlags,
}

impl HorizontalCertificate {
    pub fn field(&self) -> crate::funcfield::PrimeField {
        self.normalized.field()
    }
}

/// Why no certificate was produced, with a witness degree when a floor
/// inequality failed. `provisional` carries the data a forced build would use.
#[derive(Clone, Debug)]
pub struct Rejection {
    pub condition: Condition,
    pub reason: String,
    pub witness: Option<LatVec>,
    pub s: Option<u32>,
    pub provisional: Option<Box<HorizontalCertificate>>,
}

#[derive(Clone, Debug)]
pub enum HorizontalOutcome {
    Accepted(Box<HorizontalCertificate>),
    Rejected(Rejection),
}

impl HorizontalOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, HorizontalOutcome::Accepted(_))
    }

    pub fn certificate(&self) -> Option<&HorizontalCertificate> {
        match self {
            HorizontalOutcome::Accepted(c) => Some(c),
            HorizontalOutcome::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            HorizontalOutcome::Accepted(_) => None,
            HorizontalOutcome::Rejected(r) => Some(r),
        }
    }
}

/// Parameters of [`check_horizontal_query`].
#[derive(Clone, Debug)]
pub struct HorizontalQuery {
    pub e: LatVec,
    pub omega: Cone,
    pub s_list: Vec<u32>,
    /// Sup-norm box for the condition scan; derived from the data when `None`.
    pub bound: Option<i64>,
    pub z0: Option<CurvePoint>,
    pub zinf: Option<CurvePoint>,
    /// Use this `s_1` instead of searching the passing values in increasing order.
    pub s1: Option<u32>,
}

impl HorizontalQuery {
    pub fn new(e: LatVec, omega: Cone, s_list: Vec<u32>) -> HorizontalQuery {
        HorizontalQuery { e, omega, s_list, bound: None, z0: None, zinf: None, s1: None }
    }
}

/// The default list `0, ..., 8`.
pub fn default_s_list() -> Vec<u32> {
    (0..=8).collect()
}

/// Decides whether a homogeneous horizontal LFIHD of degree `e` with kernel
/// weight cone `omega` exists, for `s_1` drawn from `s_list`.
pub fn check_horizontal(
    d: &PolyDivisor,
    e: &LatVec,
    omega: &Cone,
    s_list: &[u32],
    bound: Option<i64>,
) -> Result<HorizontalOutcome> {
    let mut q = HorizontalQuery::new(e.clone(), omega.clone(), s_list.to_vec());
    q.bound = bound;
    check_horizontal_query(d, &q, Exec::default())
}

fn reject(condition: Condition, reason: String) -> HorizontalOutcome {
    HorizontalOutcome::Rejected(Rejection { condition, reason, witness: None, s: None, provisional: None })
}

/// Candidate points for `z_0` or `z_∞`: the given one, or the rational points of
/// the support followed by one rational point outside it.
fn candidates(d: &PolyDivisor, given: Option<&CurvePoint>, infinity_first: bool) -> Vec<CurvePoint> {
    if let Some(z) = given {
        return vec![z.clone()];
    }
    let f = d.field();
    let origin = CurvePoint::at(&f.zero());
    let mut out: Vec<CurvePoint> = Vec::new();
    if infinity_first {
        out.push(CurvePoint::Infinity);
    }
    out.push(origin);
    for z in d.points() {
        if z.is_rational() && !out.contains(&z) {
            out.push(z);
        }
    }
    let limit = match f.characteristic() {
        0 => 64,
        p => p.min(64) as i64,
    };
    for a in 0..limit {
        let z = CurvePoint::at(&f.from_i64(a));
        if !out.contains(&z) {
            out.push(z);
            break;
        }
    }
    if !infinity_first && d.curve() == Curve::Projective && !out.contains(&CurvePoint::Infinity) {
        out.push(CurvePoint::Infinity);
    }
    out
}

/// Checks (ii) for a choice of `z_0`, `z_∞`.
fn cell_condition(d: &PolyDivisor, omega: &Cone, z0: &CurvePoint, zinf: &CurvePoint) -> std::result::Result<(), String> {
    if z0 == zinf {
        return Err("z0 and zinf coincide".into());
    }
    if !z0.is_rational() {
        return Err(format!("{z0} is not rational"));
    }
    let away = (d.curve() == Curve::Projective).then_some(zinf);
    let fan = d.quasifan(away);
    if fan.position(omega).is_none() {
        return Err(format!("{omega} is not a maximal cell of the quasifan away from {zinf}"));
    }
    for (z, delta) in d.coefficients() {
        if z == z0 || (z == zinf && d.curve() == Curve::Projective) {
            continue;
        }
        match linear_vertex_on(delta, omega) {
            Some(w) if w.is_integral() => {}
            Some(w) => return Err(format!("h at {z} is <., {w}> on omega, which is not integral")),
            None => return Err(format!("h at {z} is not linear on omega")),
        }
    }
    Ok(())
}

struct Setup {
    omega: Cone,
    z0: CurvePoint,
    zinf: CurvePoint,
    nd: PolyDivisor,
    transcript: Transcript,
    v: QVec,
    d: u64,
    d_prime: u64,
    k: u32,
    tau: Cone,
    tau_hat: Cone,
}

fn setup(d: &PolyDivisor, q: &HorizontalQuery) -> Result<std::result::Result<Setup, String>> {
    let zinfs = match d.curve() {
        Curve::Affine => vec![CurvePoint::Infinity],
        Curve::Projective => candidates(d, q.zinf.as_ref(), true),
    };
    let z0s = candidates(d, q.z0.as_ref(), false);
    let mut first_err = None;
    let mut chosen = None;
    'search: for zinf in &zinfs {
        for z0 in &z0s {
            if *z0 == CurvePoint::Infinity && d.curve() == Curve::Affine {
                continue;
            }
            match cell_condition(d, &q.omega, z0, zinf) {
                Ok(()) => {
                    chosen = Some((z0.clone(), zinf.clone()));
                    break 'search;
                }
                Err(e) => {
                    first_err.get_or_insert(format!("z0 = {z0}, zinf = {zinf}: {e}"));
                }
            }
        }
    }
    let Some((z0, zinf)) = chosen else {
        return Ok(Err(first_err.unwrap_or_else(|| "no rational point available for z0".into())));
    };
    let (nd, transcript) = normalize_for_horizontal(d, &z0, Some(&zinf), &q.omega)?;
    let f = d.field();
    let origin = CurvePoint::at(&f.zero());
    let v = linear_vertex_on(&nd.coefficient(&origin), &q.omega)
        .ok_or_else(|| Error::Normalization("h_0 is not linear on omega".into()))?;
    let d_big = v.denominator_lcm();
    let dd = d_big.to_u64().ok_or_else(|| Error::Precondition("denominator too large".into()))?;
    let p = f.characteristic();
    let (mut d_prime, mut k) = (dd, 0u32);
    if p > 0 {
        while d_prime % p == 0 {
            d_prime /= p;
            k += 1;
        }
    }
    let n = d.rank();
    if n + 1 > crate::convexlat::MAX_RANK {
        return Err(Error::UnsupportedRank(n + 1));
    }
    let tau = q.omega.dual();
    let mut gens: Vec<QVec> = vec![v.extend(qi(1))];
    gens.extend(tau.generators().iter().map(|g| g.to_qvec().extend(qi(0))));
    if d.curve() == Curve::Projective {
        let dinf = nd.coefficient(&CurvePoint::Infinity);
        gens.extend(dinf.vertices().iter().map(|w| w.extend(qi(-1))));
        gens.extend(nd.tail().generators().iter().map(|g| g.to_qvec().extend(qi(0))));
    }
    let tau_hat = Cone::from_qvecs(n + 1, &gens)?;
    Ok(Ok(Setup { omega: q.omega.clone(), z0, zinf, nd, transcript, v, d: dd, d_prime, k, tau, tau_hat }))
}

/// `(p^s e, -1/d - h(p^s e))` when it is a lattice vector.
fn lifted(st: &Setup, e: &LatVec, s: u32, base: u64) -> std::result::Result<LatVec, String> {
    let qe = e.scale(base.pow(s) as i64);
    let last = -Q::new(1.into(), st.d.into()) - qe.pair(&st.v);
    if !last.is_integer() {
        return Err(format!("s = {s}: -1/d - h(p^s e) = {} is not an integer", crate::convexlat::fmt_q(&last)));
    }
    Ok(qe.extend(last.to_integer().to_i64().expect("small")))
}

struct Scan<'a> {
    st: &'a Setup,
    delta: LatVec,
    pk: Q,
    dq: Q,
    dh_delta: Q,
    sigma_dual: Cone,
    origin: CurvePoint,
}

impl Scan<'_> {
    /// The first failing condition at `m`, if any.
    fn check(&self, m: &LatVec) -> Option<(Condition, String)> {
        let m2 = m + &self.delta;
        if !self.sigma_dual.contains(m) || !self.sigma_dual.contains(&m2) {
            return None;
        }
        let nd = &self.st.nd;
        for (z, delta) in nd.coefficients() {
            if *z == self.origin || *z == CurvePoint::Infinity {
                continue;
            }
            let (a, b) = (delta.vertex_min(&m2), delta.vertex_min(m));
            if !a.is_zero() {
                let diff = floor_i64(&(&self.pk * &a)) - floor_i64(&(&self.pk * &b));
                if diff < 1 {
                    return Some((Condition::Iv, format!("at {z}: floor(p^k h(m+p^s e)) - floor(p^k h(m)) = {diff} < 1")));
                }
            }
        }
        let d0 = nd.coefficient(&self.origin);
        let (a, b) = (d0.vertex_min(&m2), d0.vertex_min(m));
        if a != m2.pair(&self.st.v) {
            let diff = floor_i64(&(&self.dq * &a)) - floor_i64(&(&self.dq * &b));
            let need = qi(1) + &self.dh_delta;
            if qi(diff) < need {
                return Some((
                    Condition::V,
                    format!("at 0: floor(d h_0(m+p^s e)) - floor(d h_0(m)) = {diff} < {}", crate::convexlat::fmt_q(&need)),
                ));
            }
        }
        if nd.curve() == Curve::Projective {
            let di = nd.coefficient(&CurvePoint::Infinity);
            let (a, b) = (di.vertex_min(&m2), di.vertex_min(m));
            let diff = floor_i64(&(&self.dq * &a)) - floor_i64(&(&self.dq * &b));
            let need = qi(-1) - &self.dh_delta;
            if qi(diff) < need {
                return Some((
                    Condition::Vi,
                    format!("at infinity: floor(d h_inf(m+p^s e)) - floor(d h_inf(m)) = {diff} < {}", crate::convexlat::fmt_q(&need)),
                ));
            }
        }
        None
    }
}

/// Lattice points of the box sorted by sup-norm, then lexicographically.
fn sorted_box(rank: usize, bound: i64) -> Vec<LatVec> {
    let bx = LatticeBox::new(rank, bound);
    let mut pts: Vec<LatVec> = (0..bx.len()).map(|i| bx.point(i)).collect();
    pts.sort_by(|a, b| a.sup_norm().cmp(&b.sup_norm()).then_with(|| a.cmp(b)));
    pts
}

fn scan_bound(st: &Setup, delta: &LatVec, q: &HorizontalQuery, rank: usize, pq: u64) -> Verification {
    if rank == 1 {
        let mut period = Integer::lcm(&num_bigint::BigInt::from(st.d), &num_bigint::BigInt::from(1));
        for delta_z in st.nd.coefficients().values() {
            for w in delta_z.vertices() {
                period = period.lcm(&w.denominator_lcm());
            }
        }
        let p = period.to_i64().expect("small period");
        let exact = delta.sup_norm() + 2 * p + 2;
        return Verification::Exact { bound: q.bound.map_or(exact, |b| b.max(exact)) };
    }
    let maxden = st
        .nd
        .coefficients()
        .values()
        .flat_map(|c| c.vertices().iter().map(|w| w.max_denominator()))
        .max()
        .and_then(|b| b.to_i64())
        .unwrap_or(1);
    let default = (4 * st.d as i64 * pq as i64 * maxden).min(MAX_DEFAULT_BOX[rank.min(3)]);
    Verification::Bounded { bound: q.bound.unwrap_or(default) }
}

/// Runs the scan for `s`; returns the flags, the verification extent, and the first failure.
fn run_scan(
    st: &Setup,
    q: &HorizontalQuery,
    s: u32,
    exec: Exec,
) -> (ConditionFlags, Verification, Option<(Condition, String, LatVec)>) {
    let f = st.nd.field();
    let base = f.exponent_base();
    let pq = base.pow(s);
    let delta = q.e.scale(pq as i64);
    let pk = if f.characteristic() == 0 { qi(1) } else { qi(f.characteristic().pow(st.k) as i64) };
    let dq = qi(st.d as i64);
    let scan = Scan {
        st,
        dh_delta: &dq * &delta.pair(&st.v),
        delta: delta.clone(),
        pk,
        dq,
        sigma_dual: st.nd.weight_cone(),
        origin: CurvePoint::at(&f.zero()),
    };
    let rank = q.e.rank();
    let verification = scan_bound(st, &delta, q, rank, pq);
    let pts = sorted_box(rank, verification.bound());
    let results = exec.filter_map(pts.len() as u64, |i| scan.check(&pts[i as usize]).map(|(c, r)| (i, c, r)));
    let mut flags = ConditionFlags { iv: true, v: true, vi: (st.nd.curve() == Curve::Projective).then_some(true) };
    for (_, c, _) in &results {
        match c {
            Condition::Iv => flags.iv = false,
            Condition::V => flags.v = false,
            Condition::Vi => flags.vi = Some(false),
            _ => {}
        }
    }
    let first = results.into_iter().next().map(|(i, c, r)| (c, r, pts[i as usize].clone()));
    (flags, verification, first)
}

/// [`check_horizontal`] with all options.
///
/// Conditions (iv)-(vi) are tried for each `s` passing (iii), in increasing order;
/// the first `s` satisfying all of them becomes `s_1`. If none does, the rejection
/// reports the failure for the smallest passing `s`.
pub fn check_horizontal_query(d: &PolyDivisor, q: &HorizontalQuery, exec: Exec) -> Result<HorizontalOutcome> {
    let (proper, why) = d.is_proper();
    if !proper {
        return Err(Error::Improper(why.to_string()));
    }
    if q.e.rank() != d.rank() || q.omega.rank() != d.rank() {
        return Err(Error::RankMismatch { expected: d.rank(), found: q.e.rank() });
    }
    let st = match setup(d, q)? {
        Ok(st) => st,
        Err(reason) => return Ok(reject(Condition::Cell, reason)),
    };
    let f = d.field();
    let base = f.exponent_base();
    let mut s_list: Vec<u32> = match q.s1 {
        Some(s) => vec![s],
        None => q.s_list.clone(),
    };
    s_list.sort_unstable();
    s_list.dedup();
    if f.characteristic() == 0 {
        s_list.retain(|&s| s == 0);
    }
    let mut passing: Vec<(u32, DemazureRoot)> = Vec::new();
    let mut notes = Vec::new();
    for &s in &s_list {
        match lifted(&st, &q.e, s, base) {
            Ok(l) => match is_root(&st.tau_hat, &l)? {
                Some(r) => passing.push((s, r)),
                None => notes.push(format!("s = {s}: {l} is not a root of {}", st.tau_hat)),
            },
            Err(msg) => notes.push(msg),
        }
    }
    if passing.is_empty() {
        let reason = if notes.is_empty() { "no admissible s in the list".to_string() } else { notes.join("; ") };
        let mut r = Rejection { condition: Condition::Root, reason, witness: None, s: None, provisional: None };
        if let [only] = s_list[..] {
            r.s = Some(only);
        }
        return Ok(HorizontalOutcome::Rejected(r));
    }
    let mut first_failure: Option<Rejection> = None;
    for (idx, (s, root)) in passing.iter().enumerate() {
        let (flags, verification, fail) = run_scan(&st, q, *s, exec);
        let cert = HorizontalCertificate {
            omega: st.omega.clone(),
            z0: st.z0.clone(),
            zinf: st.zinf.clone(),
            normalized: st.nd.clone(),
            transcript: st.transcript.clone(),
            e: q.e.clone(),
            v: st.v.clone(),
            d: st.d,
            d_prime: st.d_prime,
            k: st.k,
            tau: st.tau.clone(),
            tau_hat: st.tau_hat.clone(),
            s1: *s,
            admissible_s: passing[idx..].iter().map(|(s, _)| *s).collect(),
            root_hat: root.clone(),
            verification,
            flags,
        };
        match fail {
            None => return Ok(HorizontalOutcome::Accepted(Box::new(cert))),
            Some((condition, reason, witness)) => {
                if first_failure.is_none() {
                    first_failure = Some(Rejection {
                        condition,
                        reason: format!("s = {s}, m = {witness}: {reason}"),
                        witness: Some(witness),
                        s: Some(*s),
                        provisional: Some(Box::new(cert)),
                    });
                }
            }
        }
    }
    Ok(HorizontalOutcome::Rejected(first_failure.expect("at least one passing s")))
}

/// Assembles the spec of an LFIHD from a certificate and one `λ_i` per admissible `s_i`.
pub fn build_horizontal(cert: &HorizontalCertificate, lambdas: &[Fe]) -> Result<HorizontalSpec> {
    let n = if cert.field().characteristic() == 0 { 1 } else { cert.admissible_s.len() };
    if lambdas.len() != n {
        return Err(Error::InvalidSpec(format!("expected {n} lambda(s), got {}", lambdas.len())));
    }
    let steps: Vec<(u32, Fe)> = cert.admissible_s.iter().copied().zip(lambdas.iter().cloned()).collect();
    build_horizontal_steps(cert, &steps)
}

/// Like [`build_horizontal`], choosing which admissible `s_i` to use; the first must be `s_1`.
pub fn build_horizontal_steps(cert: &HorizontalCertificate, steps: &[(u32, Fe)]) -> Result<HorizontalSpec> {
    match steps.first() {
        Some((s, _)) if *s == cert.s1 => {}
        _ => return Err(Error::InvalidSpec(format!("the first step must use s1 = {}", cert.s1))),
    }
    if let Some((s, _)) = steps.iter().find(|(s, _)| !cert.admissible_s.contains(s)) {
        return Err(Error::InvalidSpec(format!("s = {s} does not give a root of the lifted cone")));
    }
    HorizontalSpec::new(cert.e.clone(), cert.v.clone(), steps)
}

/// A generator whose image leaves the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFailure {
    pub element: GradedElement,
    pub index: usize,
    pub image: GradedElement,
    pub reason: String,
}

/// Result of [`closure_oracle`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub checked: usize,
    pub failures: Vec<ClosureFailure>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generators of the graded pieces `A_m`, `m ∈ σ^∨_M` of sup-norm at most `bound`:
/// `f_m` and `t f_m` over the affine line, a basis over the projective line.
pub fn piece_generators(d: &PolyDivisor, bound: i64) -> Result<Vec<GradedElement>> {
    let sd = d.weight_cone();
    let mut out = Vec::new();
    for m in sorted_box(d.rank(), bound) {
        if !sd.contains(&m) {
            continue;
        }
        match d.graded_piece(&m)?.basis {
            SectionBasis::Affine { generator } => {
                if generator.is_zero() {
                    continue;
                }
                let t = RatFunc::var(d.field());
                out.push(GradedElement::monomial(generator.clone(), m.clone()));
                out.push(GradedElement::monomial(&generator * &t, m));
            }
            SectionBasis::Projective { basis } => {
                out.extend(basis.into_iter().map(|f| GradedElement::monomial(f, m.clone())));
            }
        }
    }
    Ok(out)
}

/// Applies `spec` to the generators of [`piece_generators`] of the normalized
/// divisor and records every image coefficient outside the algebra.
pub fn closure_oracle(spec: &HorizontalSpec, normalized: &PolyDivisor, bound: i64) -> Result<ClosureReport> {
    closure_oracle_with(spec, normalized, bound, Exec::default())
}

pub fn closure_oracle_with(spec: &HorizontalSpec, nd: &PolyDivisor, bound: i64, exec: Exec) -> Result<ClosureReport> {
    let gens = piece_generators(nd, bound)?;
    let results = exec.map(&gens, |a| -> Result<Vec<ClosureFailure>> {
        let s = apply_horizontal(spec, a, Some(nd), DEFAULT_ORDER)?;
        let mut fails: Vec<ClosureFailure> = s
            .flags()
            .iter()
            .filter_map(|(i, v)| {
                v.as_ref().err().map(|r| ClosureFailure {
                    element: a.clone(),
                    index: *i,
                    image: s.coeff(*i).expect("flagged coefficients are known"),
                    reason: r.clone(),
                })
            })
            .collect();
        if !s.is_complete() {
            fails.push(ClosureFailure {
                element: a.clone(),
                index: s.order() + 1,
                image: GradedElement::zero(nd.field(), nd.rank()),
                reason: "the exponential does not terminate".into(),
            });
        }
        Ok(fails)
    });
    let mut report = ClosureReport { checked: gens.len(), failures: vec![] };
    for r in results {
        report.failures.extend(r?);
    }
    Ok(report)
}
