//! Elements of the group algebra `k(t)[M]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::convexlat::LatVec;
use crate::funcfield::{Fe, PrimeField, RatFunc};

/// A finite sum `Σ f_m χ^m` with `f_m` in `k(t)`, or in `k(ζ)` with `t = ζ^d`
/// when `cover = d > 1`. Zero components are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedElement {
    field: PrimeField,
    rank: usize,
    cover: u64,
    terms: BTreeMap<LatVec, RatFunc>,
}

impl GradedElement {
    pub fn zero(field: PrimeField, rank: usize) -> GradedElement {
        GradedElement { field, rank, cover: 1, terms: BTreeMap::new() }
    }

    pub fn with_cover(mut self, cover: u64) -> GradedElement {
        self.cover = cover;
        self
    }

    /// `f·χ^m`.
    pub fn monomial(f: RatFunc, m: LatVec) -> GradedElement {
        let mut g = GradedElement::zero(f.field(), m.rank());
        if !f.is_zero() {
            g.terms.insert(m, f);
        }
        g
    }

    /// The character `χ^m`.
    pub fn character(field: PrimeField, m: LatVec) -> GradedElement {
        GradedElement::monomial(RatFunc::one(field), m)
    }

    pub fn constant(a: Fe, rank: usize) -> GradedElement {
        GradedElement::monomial(RatFunc::constant(a), LatVec::zero(rank))
    }

    pub fn from_terms<I: IntoIterator<Item = (LatVec, RatFunc)>>(field: PrimeField, rank: usize, terms: I) -> Self {
        let mut g = GradedElement::zero(field, rank);
        for (m, f) in terms {
            g.add_term(m, &f);
        }
        g
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cover(&self) -> u64 {
        self.cover
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<LatVec, RatFunc> {
        &self.terms
    }

    pub fn component(&self, m: &LatVec) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(|| RatFunc::zero(self.field))
    }

    /// The degree, if the element is a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<&LatVec> {
        (self.terms.len() == 1).then(|| self.terms.keys().next().expect("one term"))
    }

    /// Adds `f·χ^m` in place.
    pub fn add_term(&mut self, m: LatVec, f: &RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(g) => {
                let s = &*g + f;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *g = s;
                }
            }
            None => {
                self.terms.insert(m, f.clone());
            }
        }
    }

    pub fn scale(&self, a: &Fe) -> GradedElement {
        let mut g = GradedElement::zero(self.field, self.rank).with_cover(self.cover);
        for (m, f) in &self.terms {
            g.add_term(m.clone(), &f.scale(a));
        }
        g
    }

    /// Multiplication by a function of the base variable.
    pub fn scale_func(&self, h: &RatFunc) -> GradedElement {
        let mut g = GradedElement::zero(self.field, self.rank).with_cover(self.cover);
        for (m, f) in &self.terms {
            g.add_term(m.clone(), &(f * h));
        }
        g
    }

    /// Multiplication by `χ^s`.
    pub fn shift(&self, s: &LatVec) -> GradedElement {
        let mut g = GradedElement::zero(self.field, self.rank).with_cover(self.cover);
        for (m, f) in &self.terms {
            g.terms.insert(m + s, f.clone());
        }
        g
    }

    pub fn pow(&self, e: u64) -> GradedElement {
        let mut r = GradedElement::constant(self.field.one(), self.rank).with_cover(self.cover);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Rewrites the coefficients in `ζ` with `t = ζ^d`.
    pub fn lift(&self, d: u64) -> GradedElement {
        assert_eq!(self.cover, 1, "element already lives on a cover");
        let mut g = GradedElement::zero(self.field, self.rank).with_cover(d);
        for (m, f) in &self.terms {
            g.terms.insert(m.clone(), f.inflate(d as usize));
        }
        g
    }

    /// The same element over the cover of degree `d`; lifts when needed.
    pub fn at_cover(&self, d: u64) -> GradedElement {
        if self.cover == d {
            self.clone()
        } else {
            self.lift(d)
        }
    }

    /// Rewrites `ζ`-coefficients back in `t`, if every exponent is a multiple of the cover degree.
    pub fn descend(&self) -> Option<GradedElement> {
        let mut g = GradedElement::zero(self.field, self.rank);
        for (m, f) in &self.terms {
            g.terms.insert(m.clone(), f.deflate(self.cover as usize)?);
        }
        Some(g)
    }

    fn var(&self) -> &'static str {
        if self.cover == 1 {
            "t"
        } else {
            "zeta"
        }
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, g)| {
                let c = g.display_in(self.var());
                if m.is_zero() {
                    format!("({c})")
                } else {
                    format!("({c})*chi^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, o: &GradedElement) -> GradedElement {
        assert_eq!(self.cover, o.cover, "cover mismatch");
        let mut g = self.clone();
        for (m, f) in &o.terms {
            g.add_term(m.clone(), f);
        }
        g
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        let mut g = self.clone();
        for f in g.terms.values_mut() {
            *f = -&*f;
        }
        g
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, o: &GradedElement) -> GradedElement {
        self + &(-o)
    }
}

impl Mul for &GradedElement {
    type Output = GradedElement;
    fn mul(self, o: &GradedElement) -> GradedElement {
        assert_eq!(self.cover, o.cover, "cover mismatch");
        let mut g = GradedElement::zero(self.field, self.rank).with_cover(self.cover);
        for (m, f) in &self.terms {
            for (n, h) in &o.terms {
                g.add_term(m + n, &(f * h));
            }
        }
        g
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for GradedElement {
            type Output = GradedElement;
            fn $m(self, o: GradedElement) -> GradedElement {
                (&self).$m(&o)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

/// Product of two elements.
pub fn multiply(a: &GradedElement, b: &GradedElement) -> GradedElement {
    a * b
}
