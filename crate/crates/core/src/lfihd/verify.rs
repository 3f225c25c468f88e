use std::collections::BTreeMap;
use std::fmt;

use crate::convexlat::Cone;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::funcfield::binomial_in_field;
use crate::graded::GradedElement;
use crate::pdiv::PolyDivisor;

use super::horizontal::apply_horizontal;
use super::series::ExpSeries;
use super::spec::LfihdSpec;
use super::toric::{apply_toric_element, apply_vertical_raw};

/// Truncation order used when the caller does not need a specific one.
pub const DEFAULT_ORDER: usize = 64;

/// The algebra an LFIHD acts on.
#[derive(Clone, Debug)]
pub enum Algebra {
    /// `k[σ^∨ ∩ M]` for a cone `σ ⊆ N_ℝ`.
    Toric(Cone),
    /// `A[C, 𝔇]`.
    Divisor(PolyDivisor),
}

impl Algebra {
    /// The cone `σ`.
    pub fn sigma(&self) -> &Cone {
        match self {
            Algebra::Toric(c) => c,
            Algebra::Divisor(d) => d.tail(),
        }
    }

    pub fn rank(&self) -> usize {
        self.sigma().rank()
    }

    /// Why `a` is not in the algebra, or `Ok` if it is.
    pub fn membership(&self, a: &GradedElement) -> std::result::Result<(), String> {
        match self {
            Algebra::Divisor(d) => d.membership(a),
            Algebra::Toric(sigma) => {
                if a.cover() != 1 {
                    return Err(format!("coefficients involve a root of t of order {}", a.cover()));
                }
                let sd = sigma.dual();
                for (m, f) in a.terms() {
                    if !f.is_constant() {
                        return Err(format!("degree {m}: coefficient {f} is not a constant"));
                    }
                    if !sd.contains(m) {
                        return Err(format!("degree {m} lies outside the weight cone"));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn contains(&self, a: &GradedElement) -> bool {
        self.membership(a).is_ok()
    }
}

/// `e^{x∂}(a)` for any spec, with membership flags when an algebra is given.
///
/// Series that do not terminate are truncated at `order`.
pub fn apply(spec: &LfihdSpec, a: &GradedElement, algebra: Option<&Algebra>, order: usize) -> Result<ExpSeries> {
    let mut s = match spec {
        LfihdSpec::Toric(t) => apply_toric_element(t, a, order)?,
        LfihdSpec::Vertical(v) => apply_vertical_raw(v, a, order)?,
        LfihdSpec::Scaled(sc) => {
            let mut s = apply(&sc.base, a, algebra, order)?;
            s.scale_coeff(sc.index, &sc.factor);
            return Ok(s);
        }
        LfihdSpec::Horizontal(h) => {
            let d = match algebra {
                Some(Algebra::Divisor(d)) => Some(d),
                _ => None,
            };
            return match (d, algebra) {
                (None, Some(alg)) => {
                    let mut s = apply_horizontal(h, a, None, order)?;
                    s.set_flags(s.nonzero().iter().map(|(i, c)| (*i, alg.membership(c))).collect());
                    Ok(s)
                }
                _ => apply_horizontal(h, a, d, order),
            };
        }
    };
    if let Some(alg) = algebra {
        let flags = s.nonzero().iter().map(|(i, c)| (*i, alg.membership(c))).collect();
        s.set_flags(flags);
    }
    Ok(s)
}

/// `e^{x∂_{e,φ}}(a)` with membership flags against `d`.
pub fn apply_vertical(spec: &super::spec::VerticalSpec, a: &GradedElement, d: &PolyDivisor) -> Result<ExpSeries> {
    let mut s = apply_vertical_raw(spec, a, DEFAULT_ORDER)?;
    let flags = s.nonzero().iter().map(|(i, c)| (*i, d.membership(c))).collect();
    s.set_flags(flags);
    Ok(s)
}

/// The conditions checked by [`verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `∂^{(0)} = id`.
    Identity,
    /// `∂^{(i)}(ab) = Σ ∂^{(j)}(a) ∂^{(i-j)}(b)`.
    Leibniz,
    /// The exponential of every sample is a polynomial in `x`.
    LocalFiniteness,
    /// `∂^{(i)} ∘ ∂^{(j)} = C(i+j, i) ∂^{(i+j)}`.
    Iterativity,
    /// `∂^{(i)}` maps degree `m` to degree `m + ie`.
    Homogeneity,
    /// `∂^{(j)} = 0` unless the period divides `j`.
    RationalHomogeneity,
    /// `∂^{(i)}` maps the algebra into itself.
    Closure,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Identity,
        Axiom::Leibniz,
        Axiom::LocalFiniteness,
        Axiom::Iterativity,
        Axiom::Homogeneity,
        Axiom::RationalHomogeneity,
        Axiom::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Identity => "identity",
            Axiom::Leibniz => "leibniz",
            Axiom::LocalFiniteness => "local-finiteness",
            Axiom::Iterativity => "iterativity",
            Axiom::Homogeneity => "homogeneity",
            Axiom::RationalHomogeneity => "rational-homogeneity",
            Axiom::Closure => "closure",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
}

/// Outcome of [`verify_axioms`]: check and failure counts per axiom, plus
/// the first few violations of each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: BTreeMap<Axiom, usize>,
    pub failures: BTreeMap<Axiom, usize>,
    pub violations: Vec<Violation>,
}

const KEPT_PER_AXIOM: usize = 5;

impl AxiomReport {
    fn record(&mut self, axiom: Axiom, ok: bool, detail: impl FnOnce() -> String) {
        *self.checks.entry(axiom).or_default() += 1;
        if !ok {
            let n = self.failures.entry(axiom).or_default();
            *n += 1;
            if *n <= KEPT_PER_AXIOM {
                self.violations.push(Violation { axiom, detail: detail() });
            }
        }
    }

    fn merge(&mut self, other: AxiomReport) {
        for (a, n) in other.checks {
            *self.checks.entry(a).or_default() += n;
        }
        for (a, n) in other.failures {
            let before = self.failures.get(&a).copied().unwrap_or(0);
            *self.failures.entry(a).or_default() += n;
            let room = KEPT_PER_AXIOM.saturating_sub(before);
            self.violations.extend(other.violations.iter().filter(|v| v.axiom == a).take(room).cloned());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.values().all(|&n| n == 0)
    }

    pub fn failed(&self, axiom: Axiom) -> bool {
        self.failures.get(&axiom).copied().unwrap_or(0) > 0
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        Axiom::ALL.iter().copied().filter(|a| self.failed(*a)).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in Axiom::ALL {
            let c = self.checks.get(&a).copied().unwrap_or(0);
            let n = self.failures.get(&a).copied().unwrap_or(0);
            writeln!(f, "{:<22} {} ({c} checks, {n} failures)", a.name(), if n == 0 { "ok" } else { "FAIL" })?;
        }
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}

/// Coefficient `i` of `s` on the cover of degree `c`, if known.
fn co(s: &ExpSeries, i: usize, c: u64) -> Option<GradedElement> {
    s.coeff(i).map(|g| g.at_cover(c))
}

struct Ctx<'a> {
    spec: &'a LfihdSpec,
    algebra: &'a Algebra,
    max_i: usize,
    cover: u64,
}

impl Ctx<'_> {
    fn series(&self, a: &GradedElement) -> Result<ExpSeries> {
        apply(self.spec, a, Some(self.algebra), 2 * self.max_i)
    }

    fn single(&self, a: &GradedElement, s: &ExpSeries) -> Result<AxiomReport> {
        let mut r = AxiomReport::default();
        let c = self.cover;
        let field = a.field();
        let a_c = a.at_cover(c);
        r.record(Axiom::Identity, co(s, 0, c).as_ref() == Some(&a_c), || format!("d^(0)({a}) != {a}"));
        r.record(Axiom::LocalFiniteness, s.is_complete(), || format!("e^(x d)({a}) does not terminate"));
        let period = self.spec.period() as usize;
        for (i, g) in s.nonzero().iter().filter(|(i, _)| **i <= self.max_i) {
            r.record(Axiom::RationalHomogeneity, i % period == 0, || format!("d^({i})({a}) = {g} is nonzero"));
            let shift = self.spec.shift(*i as u64);
            let ok = g.terms().keys().all(|k| a.terms().contains_key(&(k - &shift)));
            r.record(Axiom::Homogeneity, ok, || format!("d^({i})({a}) = {g} has a degree outside supp(a) + {shift}"));
            let verdict = self.algebra.membership(g);
            r.record(Axiom::Closure, verdict.is_ok(), || {
                format!("d^({i})({a}) = {g} is not in the algebra: {}", verdict.clone().unwrap_err())
            });
        }
        // Iterativity.
        for j in 0..=self.max_i {
            let Some(dj) = co(s, j, c) else { break };
            let inner = if dj.is_zero() { None } else { Some(self.series(&dj)?) };
            for i in 0..=self.max_i {
                let Some(rhs) = co(s, i + j, c) else { break };
                let rhs = rhs.scale(&binomial_in_field((i + j) as u64, i as u64, field));
                let lhs = match &inner {
                    None => GradedElement::zero(field, a.rank()).with_cover(c),
                    Some(t) => match co(t, i, c) {
                        Some(x) => x,
                        None => break,
                    },
                };
                r.record(Axiom::Iterativity, lhs == rhs, || {
                    format!("on {a}: d^({i})(d^({j})(.)) = {lhs} but C({},{i}) d^({})(.) = {rhs}", i + j, i + j)
                });
            }
        }
        Ok(r)
    }

    fn pair(&self, a: &GradedElement, b: &GradedElement, sa: &ExpSeries, sb: &ExpSeries) -> Result<AxiomReport> {
        let mut r = AxiomReport::default();
        let c = self.cover;
        let ab = a * b;
        let sab = self.series(&ab)?;
        for i in 0..=self.max_i {
            let Some(lhs) = co(&sab, i, c) else { break };
            let mut rhs = GradedElement::zero(a.field(), a.rank()).with_cover(c);
            let mut known = true;
            for j in 0..=i {
                match (co(sa, j, c), co(sb, i - j, c)) {
                    (Some(x), Some(y)) => rhs = &rhs + &(&x * &y),
                    _ => known = false,
                }
            }
            if !known {
                break;
            }
            r.record(Axiom::Leibniz, lhs == rhs, || {
                format!("d^({i})(({a})*({b})) = {lhs} but the Leibniz sum is {rhs}")
            });
        }
        Ok(r)
    }
}

/// Checks the LFIHD axioms on `samples` for all indices up to `max_i`.
///
/// Leibniz is checked on every pair of samples (including squares),
/// iterativity on all `i, j ≤ max_i`.
pub fn verify_axioms(
    spec: &LfihdSpec,
    algebra: &Algebra,
    samples: &[GradedElement],
    max_i: usize,
) -> Result<AxiomReport> {
    verify_axioms_with(spec, algebra, samples, max_i, Exec::default())
}

pub fn verify_axioms_with(
    spec: &LfihdSpec,
    algebra: &Algebra,
    samples: &[GradedElement],
    max_i: usize,
    exec: Exec,
) -> Result<AxiomReport> {
    for a in samples {
        if a.rank() != algebra.rank() {
            return Err(Error::RankMismatch { expected: algebra.rank(), found: a.rank() });
        }
    }
    let ctx = Ctx { spec, algebra, max_i, cover: spec.cover() };
    let series: Vec<ExpSeries> = exec.map(samples, |a| ctx.series(a)).into_iter().collect::<Result<_>>()?;
    let idx: Vec<usize> = (0..samples.len()).collect();
    let singles = exec.map(&idx, |&k| ctx.single(&samples[k], &series[k]));
    let pairs: Vec<(usize, usize)> = (0..samples.len()).flat_map(|i| (i..samples.len()).map(move |j| (i, j))).collect();
    let doubles = exec.map(&pairs, |&(i, j)| ctx.pair(&samples[i], &samples[j], &series[i], &series[j]));
    let mut report = AxiomReport::default();
    for a in Axiom::ALL {
        report.checks.insert(a, 0);
    }
    for r in singles.into_iter().chain(doubles) {
        report.merge(r?);
    }
    Ok(report)
}
