//! Reduction of elements to minimal length by cyclic shifts.
//!
//! Moves are conjugations `w ↦ s_i w s_i` by simple reflections (written
//! `w → w′` when the length does not increase) and conjugations by
//! length-zero elements. Every search expands neighbours in a canonical
//! order (simple indices ascending, then the length-zero generators in the
//! order of [`omega_conjugators`](crate::weyl_core::omega_conjugators)) and
//! keeps the first visit of each element, so paths are reproducible.

mod fundamental;
mod minimal;
mod path;
mod strong;

pub use fundamental::{reaches_by_simple_moves, reduce_to_fundamental, FundamentalReduction};
pub(crate) use minimal::conj_bfs;
pub use minimal::{
    brute_force_min, class_min_length, ClassLengthCache, conj_step, is_terminal, reachable_nonincreasing, reduce_to_minimal,
    reduce_to_minimal_with, same_length_component, Component,
};
pub use path::{Conjugators, Move, ReductionPath, Step};
pub use strong::strong_conj_connected;
