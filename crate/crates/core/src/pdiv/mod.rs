//! Polyhedral divisors over the affine and projective line.

mod divisor;
mod normalize;

pub use crate::graded::multiply;
pub use divisor::{GradedPiece, PolyDivisor};
pub use normalize::{linear_vertex_on, normalize_for_horizontal, Mobius, Shift, Transcript};
