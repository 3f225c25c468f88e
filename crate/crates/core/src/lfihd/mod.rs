//! Locally finite iterative higher derivations (LFIHDs), built and checked
//! through their exponential series `e^{x∂}(a) = Σ ∂^{(i)}(a) x^i`.

mod horizontal;
mod kernel;
mod ordformula;
mod render;
mod series;
mod spec;
mod toric;
mod verify;

pub use horizontal::{apply_horizontal, zeta_image};
pub use kernel::{horizontal_weight_cone, kernel_generators, kernel_test, KernelGenerators};
pub use ordformula::{multinomial_oracle, ord_formula_check};
pub use render::Renderer;
pub use series::ExpSeries;
pub use spec::{HorizontalSpec, LfihdSpec, ScaledSpec, Step, ToricSpec, VerticalSpec};
pub use toric::{apply_toric, apply_toric_element, apply_vertical_raw};
pub use verify::{
    apply, apply_vertical, verify_axioms, verify_axioms_with, Algebra, Axiom, AxiomReport, Violation, DEFAULT_ORDER,
};
