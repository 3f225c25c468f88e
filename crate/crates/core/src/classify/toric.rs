use crate::convexlat::Cone;
use crate::error::Result;
use crate::roots::{enumerate_roots_with, DemazureRoot};
use crate::exec::Exec;

/// A root of `σ` together with the kernel weight cone `ρ^⋆` of `∂_e`.
#[derive(Clone, Debug, PartialEq)]
pub struct ToricAction {
    pub root: DemazureRoot,
    pub kernel_face: Cone,
}

/// Every normalized additive action on the toric variety of `sigma` is `λ∂_e`
/// (up to a Frobenius twist `p^r`) for a root `e`; lists the roots in the box.
pub fn classify_toric(sigma: &Cone, bound: i64) -> Result<Vec<ToricAction>> {
    classify_toric_with(sigma, bound, Exec::default())
}

pub fn classify_toric_with(sigma: &Cone, bound: i64, exec: Exec) -> Result<Vec<ToricAction>> {
    enumerate_roots_with(sigma, bound, exec)?
        .into_iter()
        .map(|root| {
            let kernel_face = sigma.dual_face(&Cone::ray(&root.ray))?;
            Ok(ToricAction { root, kernel_face })
        })
        .collect()
}
