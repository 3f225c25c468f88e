use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::point::{certify_irreducible, rational_roots, Curve, CurvePoint};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::convexlat::{floor_i64, fmt_q, qi, Q};
use crate::error::{Error, Result};

/// A Weil `Q`-divisor on the line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QDivisor {
    coeffs: BTreeMap<CurvePoint, Q>,
}

impl QDivisor {
    pub fn new() -> QDivisor {
        QDivisor::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (CurvePoint, Q)>>(pairs: I) -> QDivisor {
        let mut d = QDivisor::new();
        for (z, a) in pairs {
            d.add(z, &a);
        }
        d
    }

    /// Adds `a·z`.
    pub fn add(&mut self, z: CurvePoint, a: &Q) {
        let e = self.coeffs.entry(z).or_insert_with(Q::zero);
        *e += a;
        let zero: Vec<CurvePoint> = self.coeffs.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
        for k in zero {
            self.coeffs.remove(&k);
        }
    }

    pub fn get(&self, z: &CurvePoint) -> Q {
        self.coeffs.get(z).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<CurvePoint> {
        self.coeffs.keys().cloned().collect()
    }

    /// `⌊D⌋`.
    pub fn floor(&self) -> QDivisor {
        QDivisor::from_pairs(self.coeffs.iter().map(|(z, a)| (z.clone(), a.floor())))
    }

    /// `{D} = D - ⌊D⌋`.
    pub fn fractional(&self) -> QDivisor {
        QDivisor::from_pairs(self.coeffs.iter().map(|(z, a)| (z.clone(), a - a.floor())))
    }

    /// `Σ deg(z)·a_z`.
    pub fn degree(&self) -> Q {
        self.coeffs.iter().map(|(z, a)| a * qi(z.degree() as i64)).sum()
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|a| !a.is_negative())
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (z, a) in &self.coeffs {
            let neg = a.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            write!(f, "{}*{}", fmt_q(&a.abs()), z)?;
            first = false;
        }
        Ok(())
    }
}

/// Order of `f` at `z`.
pub fn ord_at(f: &RatFunc, z: &CurvePoint) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::Precondition("order of the zero function".into()));
    }
    Ok(match z {
        CurvePoint::Infinity => f.den().deg() - f.num().deg(),
        CurvePoint::Finite(p) => f.num().multiplicity(p).0 as i64 - f.den().multiplicity(p).0 as i64,
    })
}

/// Strips the given points from a polynomial, recording multiplicities.
fn strip(mut q: Poly, points: &[CurvePoint], sign: i64, out: &mut QDivisor) -> Poly {
    for z in points {
        if let CurvePoint::Finite(p) = z {
            let (k, rest) = q.multiplicity(p);
            if k > 0 {
                out.add(z.clone(), &qi(sign * k as i64));
            }
            q = rest;
        }
    }
    q
}

/// Strips rational linear factors not among the declared points.
fn strip_linear(q: Poly, sign: i64, out: &mut QDivisor) -> Poly {
    let mut q = q;
    if q.is_constant() {
        return q;
    }
    for a in rational_roots(&q).unwrap_or_default() {
        let z = CurvePoint::at(&a);
        let (k, rest) = q.multiplicity(z.poly().expect("finite"));
        out.add(z, &qi(sign * k as i64));
        q = rest;
    }
    q
}

/// `div f`, restricted to the support that can be located.
///
/// Zeros and poles are located at the declared points and at rational
/// points. A remaining pole is an error. A remaining zero is added as a point
/// when its irreducibility can be certified and left out otherwise. On the
/// projective line the order at infinity is included, and the degree is
/// checked to vanish whenever the support is fully located.
pub fn principal_divisor(f: &RatFunc, declared: &[CurvePoint], curve: Curve) -> Result<QDivisor> {
    if f.is_zero() {
        return Err(Error::Precondition("divisor of the zero function".into()));
    }
    let mut d = QDivisor::new();
    let num = strip_linear(strip(f.num().clone(), declared, 1, &mut d), 1, &mut d);
    let den = strip_linear(strip(f.den().clone(), declared, -1, &mut d), -1, &mut d);
    if !den.is_constant() {
        return Err(Error::UnlocatablePole(den.to_string()));
    }
    let mut located = true;
    if !num.is_constant() {
        let m = num.monic();
        if certify_irreducible(&m).is_ok() {
            d.add(CurvePoint::Finite(m), &qi(1));
        } else {
            located = false;
        }
    }
    if curve == Curve::Projective {
        d.add(CurvePoint::Infinity, &qi(ord_at(f, &CurvePoint::Infinity)?));
        if located {
            assert!(d.degree().is_zero(), "principal divisor of nonzero degree");
        }
    }
    Ok(d)
}

/// A basis of `H^0(C, O(D))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionBasis {
    /// The free rank-one `k[t]`-module `generator·k[t]`.
    Affine { generator: RatFunc },
    /// A finite basis over the field (possibly empty).
    Projective { basis: Vec<RatFunc> },
}

impl SectionBasis {
    /// Dimension over the field; `None` for the infinite-dimensional affine case.
    pub fn dim(&self) -> Option<usize> {
        match self {
            SectionBasis::Affine { .. } => None,
            SectionBasis::Projective { basis } => Some(basis.len()),
        }
    }

    /// The generator (affine) or basis elements (projective).
    pub fn elements(&self) -> Vec<RatFunc> {
        match self {
            SectionBasis::Affine { generator } => vec![generator.clone()],
            SectionBasis::Projective { basis } => basis.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SectionBasis::Projective { basis } if basis.is_empty())
    }
}

/// `f` with `div f = -⌊D⌋` away from infinity.
fn f_of_floor(d: &QDivisor, field: super::field::PrimeField) -> RatFunc {
    let (mut num, mut den) = (Poly::one(field), Poly::one(field));
    for (z, a) in d.floor().iter() {
        if let CurvePoint::Finite(p) = z {
            let k = floor_i64(a);
            if k < 0 {
                num = &num * &p.pow((-k) as u64);
            } else if k > 0 {
                den = &den * &p.pow(k as u64);
            }
        }
    }
    RatFunc::new(num, den).expect("nonzero")
}

/// Sections of `O(D)` on the affine or projective line.
pub fn section_module(d: &QDivisor, curve: Curve, field: super::field::PrimeField) -> SectionBasis {
    let gen = f_of_floor(d, field);
    match curve {
        Curve::Affine => SectionBasis::Affine { generator: gen },
        Curve::Projective => {
            let deg = floor_i64(&d.floor().degree());
            let basis = if deg < 0 {
                Vec::new()
            } else {
                (0..=deg as usize).map(|j| &gen * &RatFunc::from_poly(Poly::monomial(field.one(), j))).collect()
            };
            SectionBasis::Projective { basis }
        }
    }
}

/// Whether `div f + ⌊D⌋ ≥ 0`, with a reason when it fails.
pub fn check_section(d: &QDivisor, f: &RatFunc, curve: Curve) -> std::result::Result<(), String> {
    if f.is_zero() {
        return Ok(());
    }
    let mut den = f.den().clone();
    for (z, a) in d.iter() {
        if curve == Curve::Affine && *z == CurvePoint::Infinity {
            continue;
        }
        let o = ord_at(f, z).expect("nonzero");
        if o + floor_i64(a) < 0 {
            return Err(format!("order {o} at {z} below {}", -floor_i64(a)));
        }
        if let CurvePoint::Finite(p) = z {
            den = den.multiplicity(p).1;
        }
    }
    if !den.is_constant() {
        return Err(format!("pole along {den} outside the support"));
    }
    if curve == Curve::Projective && d.get(&CurvePoint::Infinity).is_zero() {
        let o = ord_at(f, &CurvePoint::Infinity).expect("nonzero");
        if o < 0 {
            return Err(format!("order {o} at [inf] below 0"));
        }
    }
    Ok(())
}

/// Whether `div f + ⌊D⌋ ≥ 0`.
pub fn contains_section(d: &QDivisor, f: &RatFunc, curve: Curve) -> bool {
    check_section(d, f, curve).is_ok()
}
