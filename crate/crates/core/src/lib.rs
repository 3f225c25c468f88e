//! Exact computations on affine T-varieties of complexity at most one.
//!
//! A variety is described by a proper polyhedral divisor over the affine or
//! projective line. The crate evaluates such divisors, computes graded pieces of
//! the coordinate ring, enumerates Demazure roots, and builds and verifies the
//! locally finite iterative higher derivations (LFIHDs) that encode additive
//! group actions normalized by the torus, in any characteristic.
//!
//! All arithmetic is exact: rationals are arbitrary precision and finite
//! fields are prime fields.

pub mod classify;
pub mod convexlat;
pub mod error;
pub mod exec;
pub mod funcfield;
pub mod graded;
pub mod io;
pub mod lfihd;
pub mod pdiv;
pub mod roots;

pub use error::{Error, Result};
