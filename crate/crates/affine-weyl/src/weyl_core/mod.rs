//! Group law, length function and Coxeter structure of the extended affine
//! Weyl groups of types A, B, C and D.
//!
//! An element is `t^χ σ` with `σ` a signed permutation and `χ` in the
//! coweight lattice of the type, stored doubled so that half-integral
//! translations of types C and D are exact. Type A uses `ℤⁿ ⋊ S_n`, so the
//! central translation `t^(1,…,1)` has length zero. Type D uses the group
//! extended by the sign change `ι` at `n`.

mod ball;
mod bruhat;
mod element;
mod omega;
mod perm;
mod roots;

pub use ball::{ball, ball_layers};
pub use bruhat::{
    bruhat_leq, coset_tag, first_right_descent, left_descents, reduced_word, right_descents,
    word_element,
};
pub use element::{GroupElement, WeylType};
pub use omega::{
    longest_element, minuscule_omega, omega_conjugators, omega_elements, omega_generators,
    omega_representatives, OmegaScope,
};
pub use perm::SignedPerm;
pub use roots::{
    finite_simple_indices, is_positive, length, pairing, positive_roots, simple_indices,
    simple_reflection, simple_reflections, simple_root, two_rho,
};
