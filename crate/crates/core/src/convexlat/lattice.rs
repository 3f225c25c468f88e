use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

/// The rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n / d`, reduced.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Floor of a rational as a machine integer.
pub fn floor_i64(q: &Q) -> i64 {
    q.floor().to_integer().to_i64().expect("floor out of range")
}

/// A lattice vector in `M` or `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatVec(pub Vec<i64>);

impl LatVec {
    pub fn new(coords: Vec<i64>) -> Self {
        LatVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        LatVec(vec![0; rank])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatVec(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &LatVec) -> i64 {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in pairing");
        let s: i128 = self.0.iter().zip(&other.0).map(|(&a, &b)| a as i128 * b as i128).sum();
        i64::try_from(s).expect("pairing overflow")
    }

    /// Pairing with a rational vector.
    pub fn pair(&self, v: &QVec) -> Q {
        assert_eq!(self.rank(), v.rank(), "rank mismatch in pairing");
        let mut s = Q::zero();
        for (a, b) in self.0.iter().zip(&v.0) {
            if *a != 0 && !b.is_zero() {
                s += b * qi(*a);
            }
        }
        s
    }

    pub fn scale(&self, k: i64) -> LatVec {
        LatVec(self.0.iter().map(|c| c * k).collect())
    }

    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// Divides by the gcd of the coordinates. The zero vector is returned unchanged.
    pub fn primitive(&self) -> LatVec {
        let g = self.gcd();
        if g <= 1 {
            return self.clone();
        }
        LatVec(self.0.iter().map(|c| c / g).collect())
    }

    pub fn sup_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn to_qvec(&self) -> QVec {
        QVec(self.0.iter().map(|&c| qi(c)).collect())
    }

    /// Appends a coordinate.
    pub fn extend(&self, last: i64) -> LatVec {
        let mut v = self.0.clone();
        v.push(last);
        LatVec(v)
    }
}

impl Add for &LatVec {
    type Output = LatVec;
    fn add(self, o: &LatVec) -> LatVec {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        LatVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatVec {
    type Output = LatVec;
    fn sub(self, o: &LatVec) -> LatVec {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        LatVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatVec {
    type Output = LatVec;
    fn neg(self) -> LatVec {
        LatVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for LatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A rational vector in `M_Q` or `N_Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVec(pub Vec<Q>);

impl QVec {
    pub fn new(coords: Vec<Q>) -> Self {
        QVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        QVec(vec![Q::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, o: &QVec) -> Q {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &Q) -> QVec {
        QVec(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_latvec(&self) -> Option<LatVec> {
        if !self.is_integral() {
            return None;
        }
        Some(LatVec(self.0.iter().map(|c| c.to_integer().to_i64().expect("coordinate out of range")).collect()))
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// The primitive lattice vector on the ray through `self` (zero stays zero).
    pub fn ray_direction(&self) -> LatVec {
        let l = Q::from_integer(self.denominator_lcm());
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return LatVec::zero(self.rank());
        }
        LatVec(ints.iter().map(|c| (c / &g).to_i64().expect("coordinate out of range")).collect())
    }

    pub fn extend(&self, last: Q) -> QVec {
        let mut v = self.0.clone();
        v.push(last);
        QVec(v)
    }

    pub fn max_denominator(&self) -> BigInt {
        self.0.iter().map(|c| c.denom().clone()).max().unwrap_or_else(BigInt::one)
    }

    pub fn abs_max(&self) -> Q {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, o: &QVec) -> QVec {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        QVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, o: &QVec) -> QVec {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        QVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The lattice points of the box `[-bound, bound]^rank`, addressed by index.
#[derive(Clone, Copy, Debug)]
pub struct LatticeBox {
    pub rank: usize,
    pub bound: i64,
}

impl LatticeBox {
    pub fn new(rank: usize, bound: i64) -> Self {
        LatticeBox { rank, bound: bound.max(0) }
    }

    pub fn len(&self) -> u64 {
        (2 * self.bound as u64 + 1).pow(self.rank as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points are ordered lexicographically by coordinates.
    pub fn point(&self, mut idx: u64) -> LatVec {
        let side = 2 * self.bound as u64 + 1;
        let mut v = vec![0i64; self.rank];
        for c in v.iter_mut().rev() {
            *c = (idx % side) as i64 - self.bound;
            idx /= side;
        }
        LatVec(v)
    }
}
