//! Exact rational polyhedral geometry over the dual lattices `M` and `N`.

mod cone;
mod fan;
mod hilbert;
mod lattice;
pub mod linalg;
mod polyhedron;

pub use cone::{dual_cone, Cone, MAX_RANK};
pub use fan::{common_refinement, QuasiFan};
pub use hilbert::{hilbert_points, hilbert_points_where};
pub use lattice::{floor_i64, fmt_q, parse_q, qi, qr, LatVec, LatticeBox, QVec, Q};
pub use polyhedron::{dilate, minkowski_sum, support_value, SigmaPolyhedron, SupportValue};
