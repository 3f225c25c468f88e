use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::convexlat::{fmt_q, Q};
use crate::error::{Error, Result};

/// The prime field `Q` (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d: &u64| d * d <= p).all(|d| p % d != 0)
}

impl PrimeField {
    pub fn rationals() -> PrimeField {
        PrimeField { p: 0 }
    }

    /// `F_p` for a prime `p < 2^32`.
    pub fn fp(p: u64) -> Result<PrimeField> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    /// Characteristic 0 or a prime.
    pub fn new(characteristic: u64) -> Result<PrimeField> {
        if characteristic == 0 {
            Ok(PrimeField::rationals())
        } else {
            PrimeField::fp(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// `p` in positive characteristic, 1 in characteristic 0.
    pub fn exponent_base(&self) -> u64 {
        if self.p == 0 {
            1
        } else {
            self.p
        }
    }

    pub fn zero(&self) -> Fe {
        self.from_i64(0)
    }

    pub fn one(&self) -> Fe {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        if self.p == 0 {
            Fe::Q(Q::from_integer(n.into()))
        } else {
            Fe::M { v: n.rem_euclid(self.p as i64) as u64, p: self.p }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Fe {
        if self.p == 0 {
            Fe::Q(Q::from_integer(n.clone()))
        } else {
            let r = n.mod_floor(&BigInt::from(self.p));
            Fe::M { v: r.to_u64().expect("residue fits"), p: self.p }
        }
    }

    /// Reduces a rational into the field; errors when the denominator vanishes mod `p`.
    pub fn from_q(&self, q: &Q) -> Result<Fe> {
        if self.p == 0 {
            return Ok(Fe::Q(q.clone()));
        }
        let d = self.from_bigint(q.denom());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.from_bigint(q.numer()) / &d)
    }

    /// All elements of a finite field.
    pub fn elements(&self) -> Option<Vec<Fe>> {
        (self.p != 0).then(|| (0..self.p).map(|v| Fe::M { v, p: self.p }).collect())
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.p)
        }
    }
}

/// An element of a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fe {
    Q(Q),
    M { v: u64, p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl Fe {
    pub fn field(&self) -> PrimeField {
        match self {
            Fe::Q(_) => PrimeField::rationals(),
            Fe::M { p, .. } => PrimeField { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Fe::Q(q) => q.is_zero(),
            Fe::M { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Fe::Q(q) => q.is_one(),
            Fe::M { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Result<Fe> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Fe::Q(q) => Fe::Q(q.recip()),
            Fe::M { v, p } => Fe::M { v: powmod(*v, p - 2, *p), p: *p },
        })
    }

    pub fn pow(&self, e: u64) -> Fe {
        match self {
            Fe::Q(q) => {
                let mut r = Q::one();
                let mut b = q.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        r *= &b;
                    }
                    e >>= 1;
                    if e > 0 {
                        b = &b * &b;
                    }
                }
                Fe::Q(r)
            }
            Fe::M { v, p } => Fe::M { v: powmod(*v, e, *p), p: *p },
        }
    }

    /// Rational value in characteristic 0; the residue as an integer otherwise.
    pub fn to_q(&self) -> Q {
        match self {
            Fe::Q(q) => q.clone(),
            Fe::M { v, .. } => Q::from_integer(BigInt::from(*v)),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Fe::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fe::Q(q) => write!(f, "{}", fmt_q(q)),
            Fe::M { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $qop:tt, $mop:expr) => {
        impl $tr for &Fe {
            type Output = Fe;
            fn $m(self, o: &Fe) -> Fe {
                match (self, o) {
                    (Fe::Q(a), Fe::Q(b)) => Fe::Q(a $qop b),
                    (Fe::M { v: a, p }, Fe::M { v: b, p: q }) if p == q => Fe::M { v: $mop(*a, *b, *p), p: *p },
                    _ => panic!("field mismatch"),
                }
            }
        }
        impl $tr for Fe {
            type Output = Fe;
            fn $m(self, o: Fe) -> Fe {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, +, |a: u64, b: u64, p: u64| ((a as u128 + b as u128) % p as u128) as u64);
binop!(Sub, sub, -, |a: u64, b: u64, p: u64| ((a as u128 + p as u128 - b as u128) % p as u128) as u64);
binop!(Mul, mul, *, mulmod);

impl Div for &Fe {
    type Output = Fe;
    fn div(self, o: &Fe) -> Fe {
        self * &o.inv().expect("division by zero")
    }
}

impl Div for Fe {
    type Output = Fe;
    fn div(self, o: Fe) -> Fe {
        &self / &o
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        match self {
            Fe::Q(q) => Fe::Q(-q),
            Fe::M { v, p } => Fe::M { v: (p - v) % p, p: *p },
        }
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}
