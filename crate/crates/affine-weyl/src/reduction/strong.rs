//! Budgeted certificates for strong conjugacy.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{AwgError, Result};
use crate::exec::Exec;
use crate::weyl_core::{ball, length, GroupElement, OmegaScope};

/// Whether all of `ws` lie in one component of the graph of elementary
/// strong conjugations `w ↦ x w x⁻¹` with `ℓ(x) ≤ budget`, equal lengths,
/// and `ℓ(xw) = ℓ(x) + ℓ(w)` or `ℓ(wx⁻¹) = ℓ(x) + ℓ(w)`.
///
/// `true` is a certificate; `false` only means no chain was found with
/// witnesses in the ball of radius `budget`.
pub fn strong_conj_connected(ws: &[GroupElement], budget: u64, exec: Exec) -> Result<bool> {
    let Some(first) = ws.first() else {
        return Ok(true);
    };
    let l = length(first);
    if ws.iter().any(|w| length(w) != l || w.weyl_type() != first.weyl_type() || w.n() != first.n()) {
        return Err(AwgError::Precondition("elements must share group and length".into()));
    }
    let witnesses: Vec<(GroupElement, GroupElement, u64)> =
        ball(first.weyl_type(), first.n(), budget, OmegaScope::All, exec)?
            .into_iter()
            .map(|x| {
                let inv = x.inverse();
                let lx = length(&x);
                (x, inv, lx)
            })
            .collect();
    let mut missing: BTreeSet<&GroupElement> = ws.iter().collect();
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(first.clone());
    missing.remove(first);
    queue.push_back(first.clone());
    while let Some(w) = queue.pop_front() {
        if missing.is_empty() {
            return Ok(true);
        }
        let neighbours = exec.map(&witnesses, |(x, xi, lx)| {
            let xw = x.mul(&w);
            let wxi = w.mul(xi);
            if length(&xw) == lx + l || length(&wxi) == lx + l {
                let y = xw.mul(xi);
                (length(&y) == l).then_some(y)
            } else {
                None
            }
        });
        let found: BTreeSet<GroupElement> = neighbours.into_iter().flatten().collect();
        for y in found {
            if seen.insert(y.clone()) {
                missing.remove(&y);
                queue.push_back(y);
            }
        }
    }
    Ok(missing.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{simple_reflection, WeylType};

    #[test]
    fn s0_and_s1_in_affine_a1() {
        let s0 = simple_reflection(WeylType::A, 2, 0).unwrap();
        let s1 = simple_reflection(WeylType::A, 2, 1).unwrap();
        assert!(strong_conj_connected(std::slice::from_ref(&s0), 0, Exec::Sequential).unwrap());
        assert!(strong_conj_connected(&[s0, s1], 2, Exec::Sequential).unwrap());
    }
}
