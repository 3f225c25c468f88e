use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::field::{Fe, PrimeField};

/// `C(n, i)` as a big integer; zero when `i > n`.
pub fn binomial_bigint(n: u64, i: u64) -> BigUint {
    if i > n {
        return BigUint::from(0u32);
    }
    let i = i.min(n - i);
    let mut r = BigUint::one();
    for j in 0..i {
        r = r * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    r
}

/// Multinomial coefficient `(Σ k)! / Π k!`.
pub fn multinomial_bigint(ks: &[u64]) -> BigUint {
    let mut total = 0u64;
    let mut r = BigUint::one();
    for &k in ks {
        total += k;
        r *= binomial_bigint(total, k);
    }
    r
}

fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let f = PrimeField::fp(p).expect("prime");
    let mut r = f.one();
    for j in 0..b {
        r = &(&r * &f.from_i64((a - j) as i64)) / &f.from_i64((j + 1) as i64);
    }
    match r {
        Fe::M { v, .. } => v,
        Fe::Q(_) => unreachable!(),
    }
}

/// `C(n, i) mod p` by Lucas' theorem on base-`p` digits.
pub fn binomial_lucas(mut n: u64, mut i: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while i > 0 || n > 0 {
        let (a, b) = (n % p, i % p);
        if b > a {
            return 0;
        }
        r = (r as u128 * small_binomial_mod(a, b, p) as u128 % p as u128) as u64;
        n /= p;
        i /= p;
    }
    r % p
}

/// `C(n, i)` in the field; Lucas' theorem in positive characteristic.
pub fn binomial_in_field(n: u64, i: u64, f: PrimeField) -> Fe {
    match f.characteristic() {
        0 => f.from_bigint(&BigInt::from(binomial_bigint(n, i))),
        p => f.from_i64(binomial_lucas(n, i, p) as i64),
    }
}

/// `C(n, i)` computed as a big integer and then reduced into the field.
pub fn binomial_via_bigint(n: u64, i: u64, f: PrimeField) -> Fe {
    f.from_bigint(&BigInt::from(binomial_bigint(n, i)))
}

/// `C(n, i)` for a possibly negative upper index, `C(-n, i) = (-1)^i C(n + i - 1, i)`.
pub fn binomial_signed(n: i64, i: u64, f: PrimeField) -> Fe {
    if n >= 0 {
        return binomial_in_field(n as u64, i, f);
    }
    let c = binomial_in_field(i + (-n) as u64 - 1, i, f);
    if i % 2 == 0 {
        c
    } else {
        -c
    }
}
