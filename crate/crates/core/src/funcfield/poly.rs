use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Fe, PrimeField};

/// A univariate polynomial over a prime field, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    c: Vec<Fe>,
}

impl Poly {
    pub fn from_coeffs(field: PrimeField, mut c: Vec<Fe>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn from_i64s(field: PrimeField, c: &[i64]) -> Poly {
        Poly::from_coeffs(field, c.iter().map(|&x| field.from_i64(x)).collect())
    }

    pub fn zero(field: PrimeField) -> Poly {
        Poly { field, c: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(a: Fe) -> Poly {
        let f = a.field();
        Poly::from_coeffs(f, vec![a])
    }

    /// The variable `t`.
    pub fn var(field: PrimeField) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    /// `a·t^k`.
    pub fn monomial(a: Fe, k: usize) -> Poly {
        let f = a.field();
        let mut c = vec![f.zero(); k];
        c.push(a);
        Poly::from_coeffs(f, c)
    }

    /// `t - a`.
    pub fn linear(a: &Fe) -> Poly {
        let f = a.field();
        Poly::from_coeffs(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn leading(&self) -> Fe {
        self.c.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Order of vanishing at `t = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    /// `Some((a, k))` when the polynomial is `a·t^k` with `a ≠ 0`.
    pub fn as_monomial(&self) -> Option<(Fe, usize)> {
        let v = self.valuation()?;
        (v + 1 == self.c.len()).then(|| (self.c[v].clone(), v))
    }

    pub fn scale(&self, a: &Fe) -> Poly {
        Poly::from_coeffs(self.field, self.c.iter().map(|x| x * a).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.field.zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { field: self.field, c }
    }

    /// Division by `t^k`, assuming divisibility.
    pub fn unshift(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.field, self.c.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut r = Poly::one(self.field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        r
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = &r[i + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&coef * dj);
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Poly::from_coeffs(self.field, q), Poly::from_coeffs(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        let mut acc = self.field.zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// The composition `self(q)`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero(self.field);
        for c in self.c.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(t^d)`.
    pub fn inflate(&self, d: usize) -> Poly {
        if self.is_zero() || d == 1 {
            return self.clone();
        }
        let mut c = vec![self.field.zero(); (self.c.len() - 1) * d + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * d] = x.clone();
        }
        Poly { field: self.field, c }
    }

    /// `Some(q)` with `self = q(t^d)` when every exponent is a multiple of `d`.
    pub fn deflate(&self, d: usize) -> Option<Poly> {
        if d == 1 {
            return Some(self.clone());
        }
        if self.c.iter().enumerate().any(|(i, x)| i % d != 0 && !x.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(self.field, self.c.iter().step_by(d).cloned().collect()))
    }

    /// Largest `k` with `f^k | self`, and the cofactor. `f` must be nonconstant.
    pub fn multiplicity(&self, f: &Poly) -> (usize, Poly) {
        assert!(!f.is_constant(), "multiplicity of a constant");
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        while let Some(q) = cur.exact_div(f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.field,
            self.c.iter().enumerate().skip(1).map(|(i, x)| x * &self.field.from_i64(i as i64)).collect(),
        )
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}{mono}"));
            }
        }
        out
    }
}

impl Ord for Poly {
    /// Degree first, then coefficients from the constant term upwards.
    fn cmp(&self, o: &Poly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.cmp(&o.c))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, o: &Poly) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs(self.field, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs(self.field, (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { field: self.field, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = &c[i + j] + &(a * b);
                }
            }
        }
        Poly::from_coeffs(self.field, c)
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);
