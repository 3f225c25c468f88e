use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::field::{Fe, PrimeField};
use super::poly::Poly;
use crate::convexlat::Q;
use crate::error::{Error, Result};

/// The base curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Affine,
    Projective,
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Affine => write!(f, "affine"),
            Curve::Projective => write!(f, "projective"),
        }
    }
}

/// A closed point: a monic irreducible polynomial, or the point at infinity.
///
/// Points are ordered by degree, then by coefficients; infinity comes last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Finite(Poly),
    Infinity,
}

/// Largest characteristic for which irreducibility of higher-degree points is certified.
pub const MAX_CERTIFIED_P: u64 = 101;
/// Largest characteristic whose elements are scanned for roots.
const MAX_ROOT_SCAN_P: u64 = 1 << 17;
/// Largest constant or leading coefficient factored for rational roots.
const MAX_FACTOR: u64 = 1 << 40;

impl CurvePoint {
    /// A finite point, after certifying that `p` is monic and irreducible.
    pub fn finite(p: Poly) -> Result<CurvePoint> {
        if p.is_constant() || !p.is_monic() {
            return Err(Error::InvalidPoint(format!("{p} is not a monic nonconstant polynomial")));
        }
        certify_irreducible(&p)?;
        Ok(CurvePoint::Finite(p))
    }

    /// The rational point `t = a`.
    pub fn at(a: &Fe) -> CurvePoint {
        CurvePoint::Finite(Poly::linear(a))
    }

    /// Residue degree (1 for infinity).
    pub fn degree(&self) -> usize {
        match self {
            CurvePoint::Finite(p) => p.degree().expect("nonconstant"),
            CurvePoint::Infinity => 1,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// The coordinate `a` of a finite rational point `t - a`.
    pub fn coordinate(&self) -> Option<Fe> {
        match self {
            CurvePoint::Finite(p) if p.degree() == Some(1) => Some(-&p.coeff(0)),
            _ => None,
        }
    }

    pub fn poly(&self) -> Option<&Poly> {
        match self {
            CurvePoint::Finite(p) => Some(p),
            CurvePoint::Infinity => None,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Finite(p) => write!(f, "[{p}]"),
            CurvePoint::Infinity => write!(f, "[inf]"),
        }
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > MAX_FACTOR {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a nonzero polynomial, sorted. `None` when the search
/// space is too large to scan exhaustively.
pub fn rational_roots(p: &Poly) -> Option<Vec<Fe>> {
    let f = p.field();
    if p.is_zero() {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    if f.characteristic() != 0 {
        if f.characteristic() > MAX_ROOT_SCAN_P {
            return None;
        }
        for a in f.elements().expect("finite field") {
            if p.eval(&a).is_zero() {
                roots.push(a);
            }
        }
        return Some(roots);
    }
    let mut q = p.clone();
    if let Some(v) = q.valuation() {
        if v > 0 {
            roots.push(f.zero());
            q = q.unshift(v);
        }
    }
    let l = q.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.to_q().denom()));
    let ints: Vec<BigInt> = q.coeffs().iter().map(|c| (c.to_q() * Q::from_integer(l.clone())).to_integer()).collect();
    let a0 = ints.first().expect("nonzero");
    let an = ints.last().expect("nonzero");
    let (ps, qs) = (divisors(a0)?, divisors(an)?);
    for num in &ps {
        for den in &qs {
            for sign in [1, -1] {
                let cand = Fe::Q(Q::new(num * BigInt::from(sign), den.clone()));
                if !roots.contains(&cand) && q.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn monic_polys_of_degree(f: PrimeField, d: usize) -> Vec<Poly> {
    let els = f.elements().expect("finite field");
    let p = els.len();
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(els[idx % p].clone());
                idx /= p;
            }
            c.push(f.one());
            Poly::from_coeffs(f, c)
        })
        .collect()
}

/// Certifies irreducibility: any degree over `F_p` up to 4 with `p ≤ 101`
/// (degree 1 for every `p`), and up to degree 3 over `Q`.
pub fn certify_irreducible(p: &Poly) -> Result<()> {
    let f = p.field();
    let d = p.degree().unwrap_or(0);
    let reject = |why: &str| Err(Error::InvalidPoint(format!("{p}: {why}")));
    if d == 0 {
        return reject("constant");
    }
    if d == 1 {
        return Ok(());
    }
    if f.characteristic() == 0 {
        if d > 3 {
            return reject("irreducibility over Q is only certified up to degree 3");
        }
        return match rational_roots(p) {
            Some(r) if r.is_empty() => Ok(()),
            Some(_) => reject("reducible"),
            None => reject("coefficients too large to certify"),
        };
    }
    if d > 4 || f.characteristic() > MAX_CERTIFIED_P {
        return reject("irreducibility is only certified up to degree 4 over F_p with p <= 101");
    }
    for k in 1..=d / 2 {
        if monic_polys_of_degree(f, k).iter().any(|q| p.rem(q).is_zero()) {
            return reject("reducible");
        }
    }
    Ok(())
}
