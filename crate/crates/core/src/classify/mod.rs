//! Classification front-ends: toric, vertical and horizontal normalized additive actions.

mod horizontal;
mod surface;
mod toric;
mod vertical;

pub use horizontal::{
    build_horizontal, build_horizontal_steps, check_horizontal, check_horizontal_query, closure_oracle,
    closure_oracle_with, default_s_list, piece_generators, ClosureFailure, ClosureReport, Condition, ConditionFlags,
    HorizontalCertificate, HorizontalOutcome, HorizontalQuery, Rejection, Verification,
};
pub use surface::{surface_support_check, SurfaceReport};
pub use toric::{classify_toric, classify_toric_with, ToricAction};
pub use vertical::{build_vertical, ray_meets_degree, vertical_admissible_rays, vertical_roots, RayVerdict, VerticalFamily};
