//! Coset-minimal elements, the set `𝒲` and minuscule coweights.

use crate::error::{AwgError, Result};
use crate::weyl_core::{
    finite_simple_indices, is_positive, length, pairing, positive_roots, simple_reflection,
    GroupElement,
};

/// Whether `w` has minimal length in its coset `W w`.
pub fn is_coset_minimal(w: &GroupElement) -> bool {
    let l = length(w);
    finite_simple_indices(w.weyl_type(), w.n())
        .into_iter()
        .all(|j| length(&simple_reflection(w.weyl_type(), w.n(), j).unwrap().mul(w)) > l)
}

/// `I(w)`: the largest `J ⊆ S` with `w⁻¹ s_J w = s_J`, found by pruning
/// `J = S` to a fixed point.
pub fn i_of(w: &GroupElement) -> Result<Vec<usize>> {
    if !is_coset_minimal(w) {
        return Err(AwgError::Precondition(format!("{w} is not minimal in its W-coset")));
    }
    Ok(stable_simple_set(w))
}

/// The pruning computation behind [`i_of`], without the coset-minimality
/// precondition.
pub(crate) fn stable_simple_set(w: &GroupElement) -> Vec<usize> {
    let (ty, n) = (w.weyl_type(), w.n());
    let refl: Vec<(usize, GroupElement)> = finite_simple_indices(ty, n)
        .into_iter()
        .map(|j| (j, simple_reflection(ty, n, j).unwrap()))
        .collect();
    let winv = w.inverse();
    let image: Vec<(usize, GroupElement)> = refl
        .iter()
        .map(|(j, s)| (*j, winv.mul(s).mul(w)))
        .collect();
    let mut current: Vec<usize> = refl.iter().map(|(j, _)| *j).collect();
    loop {
        let next: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&j| {
                let img = &image.iter().find(|(k, _)| *k == j).unwrap().1;
                current
                    .iter()
                    .any(|&k| &refl.iter().find(|(r, _)| *r == k).unwrap().1 == img)
            })
            .collect();
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Membership in `𝒲 = ⋃ W_{I(x)} x` (over coset-minimal `x`): for every
/// positive root `α`, the values `⟨χ, σ^{−k}α⟩`, `k ≥ 0`, are all zero or
/// the first nonzero one is positive.
pub fn is_in_w_set(w: &GroupElement) -> bool {
    let inv = w.perm().inverse();
    let order = w.perm().order() as usize;
    positive_roots(w.weyl_type(), w.n()).into_iter().all(|alpha| {
        let mut beta = alpha;
        for _ in 0..order {
            let v = pairing(w.trans2(), &beta);
            if v != 0 {
                return v > 0;
            }
            beta = inv.act(&beta);
        }
        true
    })
}

fn is_dominant(trans2: &[i64], roots: &[Vec<i64>]) -> bool {
    roots.iter().all(|a| pairing(trans2, a) >= 0)
}

/// Whether the dominant coweight `γ` (doubled) is minuscule for
/// `w = t^χ u` with `χ` dominant: for every positive root `α` with
/// `⟨γ, α⟩ ≥ 2`, `⟨χ − γ, α⟩ ≥ −1` when `u⁻¹α > 0` and `≥ 0` otherwise.
pub fn is_minuscule_for(gamma2: &[i64], w: &GroupElement) -> Result<bool> {
    let roots = positive_roots(w.weyl_type(), w.n());
    if gamma2.len() != w.n() {
        return Err(AwgError::InvalidArgument("γ has the wrong length".into()));
    }
    if !is_dominant(gamma2, &roots) {
        return Err(AwgError::Precondition("γ is not dominant".into()));
    }
    if !is_dominant(w.trans2(), &roots) {
        return Err(AwgError::Precondition("the translation part is not dominant".into()));
    }
    let diff: Vec<i64> = w.trans2().iter().zip(gamma2).map(|(a, b)| a - b).collect();
    let uinv = w.perm().inverse();
    Ok(roots.iter().all(|alpha| {
        if pairing(gamma2, alpha) < 2 {
            return true;
        }
        let bound = if is_positive(&uinv.act(alpha)) { -1 } else { 0 };
        pairing(&diff, alpha) >= bound
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{omega_generators, WeylType};

    #[test]
    fn i_of_identity_and_translations() {
        let e = GroupElement::identity(WeylType::B, 3).unwrap();
        assert_eq!(i_of(&e).unwrap(), vec![1, 2, 3]);
        // χ = (2,2,0): ⟨χ, α_1⟩ = 0, ⟨χ, α_2⟩ = 2, ⟨χ, α_3⟩ = 0
        let t = GroupElement::translation(WeylType::B, vec![4, 4, 0]).unwrap();
        assert_eq!(i_of(&t).unwrap(), vec![1, 3]);
    }

    #[test]
    fn i_of_omega_in_type_a3() {
        // Ω_1 rotates the affine Dynkin diagram, so pruning empties S.
        let gens = omega_generators(WeylType::A, 3).unwrap();
        let (_, tau) = gens.iter().find(|(n, _)| n == "tau_1").unwrap();
        assert_eq!(i_of(tau).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn w_set_contains_dominant_translations_and_w() {
        let t = GroupElement::translation(WeylType::C, vec![4, 2, 0]).unwrap();
        assert!(is_in_w_set(&t));
        let w = GroupElement::from_integral(WeylType::C, &[0, 0, 0], &[-3, 1, 2]).unwrap();
        assert!(is_in_w_set(&w));
        let anti = GroupElement::translation(WeylType::C, vec![0, 2, 4]).unwrap();
        assert!(!is_in_w_set(&anti));
    }

    #[test]
    fn minuscule_for_identity() {
        let e = GroupElement::identity(WeylType::C, 3).unwrap();
        assert!(is_minuscule_for(&[1, 1, 1], &e).unwrap());
        assert!(is_minuscule_for(&[0, 0, 0], &e).unwrap());
        assert!(!is_minuscule_for(&[2, 0, 0], &e).unwrap());
        assert!(is_minuscule_for(&[1, 1, 1], &GroupElement::translation(WeylType::C, vec![4, 2, 2]).unwrap()).unwrap());
    }
}
