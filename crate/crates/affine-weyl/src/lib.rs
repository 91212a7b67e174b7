//! Extended affine Weyl groups of classical types A, B, C and D.
//!
//! The crate models elements `t^χ σ` of the groups `W̃^!` (translations by
//! the relevant coweight lattice extended by signed permutations) and
//! provides:
//!
//! * [`weyl_core`]: group law, Iwahori-Matsumoto length, simple reflections,
//!   length-zero elements, Bruhat order, reduced words and length balls.
//! * [`conj_classes`]: the a-sequence machinery, quasi-positive
//!   representatives, the `P_θ` operators and their closure, the labelling of
//!   integral conjugacy classes by pairs `(λ, μ)` and the distinguished
//!   (fundamental) elements.
//! * [`reduction`]: cyclic-shift reduction to minimal length, strong
//!   conjugacy and reduction to fundamental elements.
//! * [`hecke`]: class polynomials of the affine Hecke algebra.
//! * [`newton`]: Newton points, good elements and the partial order on
//!   Newton strata.
//! * [`adlv`]: dimension formulas for affine Deligne-Lusztig varieties.
//! * [`verify`]: property suites shared by the CLI and the test harness.
//!
//! Heavy sweeps run on rayon when the `parallel` feature is enabled (the
//! default); every parallel step is an order-preserving map followed by a
//! sequential merge, so results do not depend on the thread count.

pub mod adlv;
pub mod conj_classes;
pub mod error;
pub mod exec;
pub mod hecke;
pub mod newton;
pub mod reduction;
pub mod verify;
pub mod weyl_core;

pub use error::{AwgError, Result};
pub use exec::Exec;
pub use weyl_core::{GroupElement, SignedPerm, WeylType};
