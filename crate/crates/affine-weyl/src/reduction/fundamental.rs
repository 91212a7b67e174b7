//! Reduction of arbitrary elements to fundamental elements.

use serde::Serialize;

use super::minimal::reachable_nonincreasing;
use crate::conj_classes::{a_seq, classify, d_map, fundamental_element, stable_simple_set, PeriodicSeq};
use crate::error::{AwgError, Result};
use crate::exec::Exec;
use crate::weyl_core::{length, reduced_word, GroupElement, SignedPerm, WeylType};

/// Outcome of [`reduce_to_fundamental`]: `w →̃ reached = x · f` (times `ι`
/// when `iota_twist` is set) with `x ∈ W_{I(f)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalReduction {
    pub x: GroupElement,
    pub f: GroupElement,
    pub iota_twist: bool,
    pub reached: GroupElement,
}

fn in_parabolic(x: &GroupElement, allowed: &[usize]) -> bool {
    if x.trans2().iter().any(|&t| t != 0) {
        return false;
    }
    let (word, tau) = reduced_word(x);
    tau.is_identity() && word.iter().all(|i| allowed.contains(i))
}

/// Finds `y` with `w →̃ y` and `y = x · f`, `x ∈ W_{I(f)}`, where `f` is the
/// fundamental element of `d(classify(w))`. In type D the form `x · f · ι`
/// is also accepted when `a_n(f) = (0, 0, …)`.
///
/// `I(f)` is computed by the same pruning as [`i_of`](crate::conj_classes::i_of)
/// but without its coset-minimality precondition: in types B, C and D the
/// fundamental element is not minimal in `W f` when `μ̃` has a repeated entry.
///
/// Candidates are scanned in the canonical order of the non-increasing
/// reachable set. Fails with a precondition error if none is found.
pub fn reduce_to_fundamental(w: &GroupElement) -> Result<FundamentalReduction> {
    let ty = w.weyl_type();
    let n = w.n();
    let label = d_map(&classify(w)?);
    let f = fundamental_element(ty, &label)?;
    let allowed = stable_simple_set(&f);
    let finv = f.inverse();
    let iota = GroupElement::finite(ty, SignedPerm::flips(n, &[n])).ok();
    let twist_ok = ty == WeylType::D && a_seq(&f, n as i32)? == PeriodicSeq::constant(0);
    let comp = reachable_nonincreasing(w, true, None, Exec::default())?;
    let lf = length(&f);
    for y in &comp.nodes {
        let x = y.mul(&finv);
        if in_parabolic(&x, &allowed) && length(y) == length(&x) + lf {
            return Ok(FundamentalReduction {
                x,
                f,
                iota_twist: false,
                reached: y.clone(),
            });
        }
        if twist_ok {
            let iota = iota.as_ref().expect("type D has ι");
            let x = y.mul(iota).mul(&finv);
            if in_parabolic(&x, &allowed) && length(&x.mul(&f)) == length(&x) + lf {
                return Ok(FundamentalReduction {
                    x,
                    f,
                    iota_twist: true,
                    reached: y.clone(),
                });
            }
        }
    }
    Err(AwgError::Precondition(format!(
        "no element x·f with x in W_I(f) is reachable from {w}"
    )))
}

/// Whether `target` is reachable from `w` by simple conjugations that never
/// raise the length.
pub fn reaches_by_simple_moves(w: &GroupElement, target: &GroupElement) -> Result<bool> {
    Ok(reachable_nonincreasing(w, false, None, Exec::default())?.contains(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::simple_reflection;

    #[test]
    fn s0_in_affine_a2() {
        let s0 = simple_reflection(WeylType::A, 3, 0).unwrap();
        let r = reduce_to_fundamental(&s0).unwrap();
        assert!(r.f.is_identity());
        assert_eq!(length(&r.x), 1);
        assert!(!r.iota_twist);
    }

    #[test]
    fn class_2_0_in_affine_a1() {
        let s0 = simple_reflection(WeylType::A, 2, 0).unwrap();
        let r = reduce_to_fundamental(&s0).unwrap();
        assert!(r.f.is_identity());
        assert_eq!(length(&r.x), 1);
        assert_eq!(r.x.mul(&r.f), r.reached);
    }
}
