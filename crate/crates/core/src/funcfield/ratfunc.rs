use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::{Fe, PrimeField};
use super::poly::Poly;
use crate::error::{Error, Result};

/// A rational function `num / den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(num.field()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"));
        let lc = d.leading().inv().expect("nonzero");
        n = n.scale(&lc);
        d = d.scale(&lc);
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let f = p.field();
        RatFunc { num: p, den: Poly::one(f) }
    }

    pub fn zero(f: PrimeField) -> RatFunc {
        RatFunc::from_poly(Poly::zero(f))
    }

    pub fn one(f: PrimeField) -> RatFunc {
        RatFunc::from_poly(Poly::one(f))
    }

    pub fn constant(a: Fe) -> RatFunc {
        RatFunc::from_poly(Poly::constant(a))
    }

    pub fn var(f: PrimeField) -> RatFunc {
        RatFunc::from_poly(Poly::var(f))
    }

    /// `a·t^k` for any integer `k`.
    pub fn laurent_monomial(a: Fe, k: i64) -> RatFunc {
        let f = a.field();
        if a.is_zero() {
            return RatFunc::zero(f);
        }
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(a, k as usize))
        } else {
            RatFunc { num: Poly::constant(a), den: Poly::monomial(f.one(), (-k) as usize) }
        }
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_constant() && self.num.is_constant()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let k = e.unsigned_abs();
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn scale(&self, a: &Fe) -> RatFunc {
        if a.is_zero() {
            return RatFunc::zero(self.field());
        }
        RatFunc { num: self.num.scale(a), den: self.den.clone() }
    }

    /// The composition `self(g)`.
    pub fn compose(&self, g: &RatFunc) -> RatFunc {
        let eval = |p: &Poly| {
            let mut acc = RatFunc::zero(self.field());
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * g) + &RatFunc::constant(c.clone());
            }
            acc
        };
        &eval(&self.num) / &eval(&self.den)
    }

    /// `self(t^d)`.
    pub fn inflate(&self, d: usize) -> RatFunc {
        RatFunc { num: self.num.inflate(d), den: self.den.inflate(d) }
    }

    /// `Some(g)` with `self = g(t^d)`.
    pub fn deflate(&self, d: usize) -> Option<RatFunc> {
        Some(RatFunc { num: self.num.deflate(d)?, den: self.den.deflate(d)? })
    }

    /// `Some((a, k))` when `self = a·t^k`.
    pub fn as_laurent_monomial(&self) -> Option<(Fe, i64)> {
        let (a, k) = self.num.as_monomial()?;
        let (b, l) = self.den.as_monomial()?;
        Some((&a / &b, k as i64 - l as i64))
    }

    pub fn display_in(&self, var: &str) -> String {
        let n = self.num.display_in(var);
        if self.den.is_constant() {
            return n;
        }
        let wrap = |s: String, p: &Poly| if p.as_monomial().is_some() { s } else { format!("({s})") };
        format!("{}/{}", wrap(n, &self.num), wrap(self.den.display_in(var), &self.den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("nonzero denominator");
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.field());
        }
        if self.den.is_constant() && o.den.is_constant() {
            return RatFunc { num: &self.num * &o.num, den: self.den.clone() };
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero")
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);
owned_op!(Div, div);
