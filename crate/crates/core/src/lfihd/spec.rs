use std::fmt;

use crate::convexlat::{fmt_q, Cone, LatVec, QVec};
use crate::error::{Error, Result};
use crate::funcfield::{contains_section, Fe, PrimeField, RatFunc};
use crate::pdiv::PolyDivisor;
use crate::roots::{is_root, DemazureRoot};

/// `λ ∂_e` on `k[σ^∨_M]`, rationally homogeneous of degree `e / p^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSpec {
    root: DemazureRoot,
    lambda: Fe,
    r: u32,
}

impl ToricSpec {
    /// Certifies `e` as a root of `sigma`.
    pub fn new(sigma: &Cone, e: &LatVec, lambda: Fe, r: u32) -> Result<ToricSpec> {
        let root = is_root(sigma, e)?.ok_or_else(|| Error::InvalidSpec(format!("{e} is not a root of {sigma}")))?;
        ToricSpec::from_root(root, lambda, r)
    }

    pub fn from_root(root: DemazureRoot, lambda: Fe, r: u32) -> Result<ToricSpec> {
        if lambda.is_zero() {
            return Err(Error::InvalidSpec("lambda must be nonzero".into()));
        }
        if r > 0 && lambda.field().characteristic() == 0 {
            return Err(Error::InvalidSpec("Frobenius twists need positive characteristic".into()));
        }
        Ok(ToricSpec { root, lambda, r })
    }

    /// Skips root certification. Used to build negative controls.
    pub fn unchecked(e: LatVec, ray: LatVec, lambda: Fe, r: u32) -> ToricSpec {
        ToricSpec { root: DemazureRoot { e, ray }, lambda, r }
    }

    pub fn root(&self) -> &DemazureRoot {
        &self.root
    }

    pub fn lambda(&self) -> &Fe {
        &self.lambda
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn field(&self) -> PrimeField {
        self.lambda.field()
    }

    /// `p^r`.
    pub fn period(&self) -> u64 {
        self.field().exponent_base().pow(self.r)
    }
}

/// `∂_{e,φ}` with `φ ∈ Φ_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalSpec {
    root: DemazureRoot,
    phi: RatFunc,
}

impl VerticalSpec {
    /// Certifies `e` against the tail cone and `φ` as a section of `𝔇(e)`.
    pub fn new(d: &PolyDivisor, e: &LatVec, phi: RatFunc) -> Result<VerticalSpec> {
        let root =
            is_root(d.tail(), e)?.ok_or_else(|| Error::InvalidSpec(format!("{e} is not a root of {}", d.tail())))?;
        if phi.field() != d.field() {
            return Err(Error::FieldMismatch);
        }
        if !phi.is_zero() && !contains_section(&d.evaluate_extended(e), &phi, d.curve()) {
            return Err(Error::InvalidSpec(format!("{phi} is not a section of D({e})")));
        }
        Ok(VerticalSpec { root, phi })
    }

    /// Skips all certification. Used to build negative controls.
    pub fn unchecked(e: LatVec, ray: LatVec, phi: RatFunc) -> VerticalSpec {
        VerticalSpec { root: DemazureRoot { e, ray }, phi }
    }

    pub fn root(&self) -> &DemazureRoot {
        &self.root
    }

    pub fn phi(&self) -> &RatFunc {
        &self.phi
    }

    pub fn field(&self) -> PrimeField {
        self.phi.field()
    }
}

/// One summand `λ x^q` of `e^{x∂_ζ}(ζ) = ζ + Σ λ x^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub exponent: u64,
    pub lambda: Fe,
}

/// The horizontal LFIHD given by `e^{x∂_ζ}(ζ) = ζ + Σ λ_i x^{p^{s_i}}` with `t = ζ^d`,
/// on a divisor normalized so that `Δ_0` has the vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalSpec {
    e: LatVec,
    v: QVec,
    d: u64,
    steps: Vec<Step>,
    raw: bool,
}

fn cover_degree(v: &QVec) -> u64 {
    use num_traits::ToPrimitive;
    v.denominator_lcm().to_u64().expect("denominator fits in u64")
}

impl HorizontalSpec {
    /// `steps` lists `(s_i, λ_i)`; in characteristic zero it must be the single pair `(0, λ)`.
    pub fn new(e: LatVec, v: QVec, steps: &[(u32, Fe)]) -> Result<HorizontalSpec> {
        if e.rank() != v.rank() {
            return Err(Error::RankMismatch { expected: v.rank(), found: e.rank() });
        }
        let Some((_, l0)) = steps.first() else {
            return Err(Error::InvalidSpec("at least one step is required".into()));
        };
        let field = l0.field();
        let p = field.characteristic();
        if p == 0 && (steps.len() != 1 || steps[0].0 != 0) {
            return Err(Error::InvalidSpec("characteristic zero allows exactly one step with s = 0".into()));
        }
        if steps.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidSpec("the s_i must be strictly increasing".into()));
        }
        let mut out = Vec::new();
        for (s, l) in steps {
            if l.field() != field {
                return Err(Error::FieldMismatch);
            }
            if l.is_zero() {
                return Err(Error::InvalidSpec("every lambda must be nonzero".into()));
            }
            let q = field.exponent_base().checked_pow(*s).ok_or_else(|| Error::InvalidSpec(format!("p^{s} overflows")))?;
            out.push(Step { exponent: q, lambda: l.clone() });
        }
        Ok(HorizontalSpec { d: cover_degree(&v), e, v, steps: out, raw: false })
    }

    /// Takes the exponents `q_i` verbatim, without requiring them to be powers of `p`.
    /// Used to build negative controls.
    pub fn with_raw_exponents(e: LatVec, v: QVec, steps: Vec<Step>) -> HorizontalSpec {
        HorizontalSpec { d: cover_degree(&v), e, v, steps, raw: true }
    }

    pub fn e(&self) -> &LatVec {
        &self.e
    }

    pub fn v(&self) -> &QVec {
        &self.v
    }

    /// The smallest `d > 0` with `d·v` integral.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_raw(&self) -> bool {
        self.raw
    }

    pub fn field(&self) -> PrimeField {
        self.steps[0].lambda.field()
    }

    /// `s_i` for every step, when the exponents are powers of `p`.
    pub fn s_list(&self) -> Option<Vec<u32>> {
        let b = self.field().exponent_base();
        self.steps
            .iter()
            .map(|st| {
                let mut q = st.exponent;
                let mut s = 0u32;
                while b > 1 && q % b == 0 {
                    q /= b;
                    s += 1;
                }
                (q == 1).then_some(s)
            })
            .collect()
    }

    /// `d·h(m) = ⟨m, d v⟩`.
    pub fn dh(&self, m: &LatVec) -> i64 {
        use num_traits::ToPrimitive;
        let x = m.pair(&self.v) * crate::convexlat::qi(self.d as i64);
        debug_assert!(x.is_integer());
        x.to_integer().to_i64().expect("d h(m) fits in i64")
    }
}

/// An LFIHD description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LfihdSpec {
    Toric(ToricSpec),
    Vertical(VerticalSpec),
    Horizontal(HorizontalSpec),
    /// `base` with `∂^{(index)}` multiplied by `factor`. Not an LFIHD unless
    /// `factor = 1`; used as a negative control for the axiom checks.
    Scaled(ScaledSpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledSpec {
    pub base: Box<LfihdSpec>,
    pub index: usize,
    pub factor: Fe,
}

impl LfihdSpec {
    pub fn scaled(base: LfihdSpec, index: usize, factor: Fe) -> LfihdSpec {
        LfihdSpec::Scaled(ScaledSpec { base: Box::new(base), index, factor })
    }
}

impl LfihdSpec {
    pub fn field(&self) -> PrimeField {
        match self {
            LfihdSpec::Toric(s) => s.field(),
            LfihdSpec::Vertical(s) => s.field(),
            LfihdSpec::Horizontal(s) => s.field(),
            LfihdSpec::Scaled(s) => s.base.field(),
        }
    }

    /// `deg ∂`.
    pub fn degree(&self) -> &LatVec {
        match self {
            LfihdSpec::Toric(s) => &s.root.e,
            LfihdSpec::Vertical(s) => &s.root.e,
            LfihdSpec::Horizontal(s) => &s.e,
            LfihdSpec::Scaled(s) => s.base.degree(),
        }
    }

    /// The smallest index `j > 0` with `∂^{(j)}` possibly nonzero; all nonzero
    /// indices are multiples of it.
    pub fn period(&self) -> u64 {
        match self {
            LfihdSpec::Toric(s) => s.period(),
            LfihdSpec::Vertical(_) => 1,
            LfihdSpec::Horizontal(s) => {
                let q = s.steps.iter().map(|st| st.exponent).min().expect("nonempty");
                if s.raw {
                    s.steps.iter().fold(q, |g, st| num_integer::gcd(g, st.exponent))
                } else {
                    q
                }
            }
            LfihdSpec::Scaled(s) => s.base.period(),
        }
    }

    /// Degree of `∂^{(i)}`. A Frobenius twist `p^r` spreads `∂_e` over the
    /// indices `p^r i`, so toric specs shift by `(i / p^r) e`.
    pub fn shift(&self, i: u64) -> LatVec {
        match self {
            LfihdSpec::Toric(s) => s.root.e.scale((i / s.period()) as i64),
            LfihdSpec::Scaled(s) => s.base.shift(i),
            _ => self.degree().scale(i as i64),
        }
    }

    /// Degree of the cover `t = ζ^d` on which images are computed.
    pub fn cover(&self) -> u64 {
        match self {
            LfihdSpec::Horizontal(s) => s.d,
            LfihdSpec::Scaled(s) => s.base.cover(),
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            LfihdSpec::Toric(_) => "toric",
            LfihdSpec::Vertical(_) => "vertical",
            LfihdSpec::Horizontal(_) => "horizontal",
            LfihdSpec::Scaled(_) => "scaled",
        }
    }
}

impl fmt::Display for LfihdSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LfihdSpec::Toric(s) => {
                write!(f, "toric e={} rho={} lambda={} r={}", s.root.e, s.root.ray, s.lambda, s.r)
            }
            LfihdSpec::Vertical(s) => write!(f, "vertical e={} rho={} phi={}", s.root.e, s.root.ray, s.phi),
            LfihdSpec::Horizontal(s) => {
                let v: Vec<String> = s.v.coords().iter().map(fmt_q).collect();
                let steps: Vec<String> = s.steps.iter().map(|st| format!("{}*x^{}", st.lambda, st.exponent)).collect();
                write!(f, "horizontal e={} v=({}) d={} zeta -> zeta + {}", s.e, v.join(","), s.d, steps.join(" + "))
            }
            LfihdSpec::Scaled(s) => write!(f, "{} with D^({}) scaled by {}", s.base, s.index, s.factor),
        }
    }
}
