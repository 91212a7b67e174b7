//! Class polynomials of the affine Hecke algebra.
//!
//! Polynomials are kept in the variable `ξ = v − v⁻¹`. The recursion
//! `f_w = ξ f_{w₁s} + f_{sw₁s}` (with `w₁` reached from `w` by
//! length-preserving conjugation and `ℓ(sw₁s) < ℓ(w₁)`) bottoms out at
//! minimal length elements, whose table is the indicator of their class.

mod algebra;
mod classpoly;
mod poly;

pub use algebra::{hecke_check_products, hecke_check_quadratic, HeckeElement};
pub use classpoly::{
    class_polynomials, omega_normal_form, path_independence_probe, ClassPolyEngine,
    ClassPolyTable, SearchOrder,
};
pub use poly::{LaurentPoly, XiPoly};
