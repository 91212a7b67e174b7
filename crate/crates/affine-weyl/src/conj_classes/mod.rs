//! Conjugacy classes of integral elements.
//!
//! Everything here works on the data `(χ, σ)` of an element. The a-sequence
//! `a_i(w)` reads the translation entries along the `σ⁻¹`-orbit of `i`; the
//! operators `P_θ` conjugate by a 0/1 translation and renormalise signs.
//! Integral classes of each type are labelled by double partitions
//! ([`DPPair`]).

mod blocks;
mod dppair;
mod periodic;
mod quasi;
mod wset;

pub use blocks::{block_elements, block_w, block_w_prime, chi_nm, chi_nm_rev, cycle_conjugate, rotate};
pub use dppair::{
    classify, d_map, d_prime_map, enumerate_dppairs, fundamental_element, is_distinguished,
    is_distinguished_class, standard_element, DPPair,
};
pub use periodic::{a_seq, a_seqs, PeriodicSeq};
pub use quasi::{
    e_theta, ev0, ev1, extreme_thetas, is_quasi_positive, p_closure, p_operator,
    quasi_positive_rep, quasi_positive_rep_with_signs,
};
pub use wset::{i_of, is_coset_minimal, is_in_w_set, is_minuscule_for};
pub(crate) use wset::stable_simple_set;
