//! Exact arithmetic in `k[t]` and `k(t)` over prime fields, points and
//! divisors on the affine and projective line, and section spaces.

mod binomial;
mod divisor;
mod field;
mod point;
mod poly;
mod ratfunc;

pub use binomial::{
    binomial_bigint, binomial_in_field, binomial_lucas, binomial_signed, binomial_via_bigint, multinomial_bigint,
};
pub use divisor::{check_section, contains_section, ord_at, principal_divisor, section_module, QDivisor, SectionBasis};
pub use field::{Fe, PrimeField};
pub use point::{certify_irreducible, rational_roots, Curve, CurvePoint};
pub use poly::Poly;
pub use ratfunc::RatFunc;
