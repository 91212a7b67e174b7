//! Length-zero elements.

use std::collections::BTreeSet;

use super::element::{GroupElement, WeylType};
use super::perm::SignedPerm;
use super::roots::{finite_simple_indices, length, pairing, simple_reflection, simple_root};
use crate::error::Result;

/// Longest element of the parabolic subgroup `W_J` of the finite Weyl group.
pub fn longest_element(ty: WeylType, n: usize, j: &[usize]) -> Result<GroupElement> {
    let gens: Vec<GroupElement> = j
        .iter()
        .map(|&i| simple_reflection(ty, n, i))
        .collect::<Result<_>>()?;
    let mut w = GroupElement::identity(ty, n)?;
    let mut len = 0;
    'ascend: loop {
        for s in &gens {
            let ws = w.mul(s);
            let l = length(&ws);
            if l > len {
                w = ws;
                len = l;
                continue 'ascend;
            }
        }
        return Ok(w);
    }
}

/// `t^γ w_J w_S` with `J = {j ∈ S : ⟨γ, α_j⟩ = 0}` for a dominant minuscule
/// coweight `γ` (given doubled).
pub fn minuscule_omega(ty: WeylType, n: usize, gamma2: Vec<i64>) -> Result<GroupElement> {
    let s = finite_simple_indices(ty, n);
    let j: Vec<usize> = s
        .iter()
        .copied()
        .filter(|&j| pairing(&gamma2, &simple_root(ty, n, j)) == 0)
        .collect();
    let wj = longest_element(ty, n, &j)?;
    let ws = longest_element(ty, n, &s)?;
    Ok(GroupElement::translation(ty, gamma2)?.mul(&wj).mul(&ws))
}

/// The length-zero generators together with their names.
///
/// Type A: the central translation `t^(1,…,1)` and `Ω_r` for
/// `r = 1, …, n−1`. Type B: `τ_1`. Type C: `τ_n`. Type D: `τ_1`, `τ_n`,
/// `τ_{n−1}` and `ι`.
pub fn omega_generators(ty: WeylType, n: usize) -> Result<Vec<(String, GroupElement)>> {
    ty.check_rank(n)?;
    let unit = |k: usize| -> Vec<i64> { (0..n).map(|i| if i < k { 2 } else { 0 }).collect() };
    let mut out = Vec::new();
    match ty {
        WeylType::A => {
            out.push(("center".to_string(), GroupElement::translation(ty, vec![2; n])?));
            for r in 1..n {
                out.push((format!("tau_{r}"), minuscule_omega(ty, n, unit(r))?));
            }
        }
        WeylType::B => out.push(("tau_1".into(), minuscule_omega(ty, n, unit(1))?)),
        WeylType::C => out.push((format!("tau_{n}"), minuscule_omega(ty, n, vec![1; n])?)),
        WeylType::D => {
            out.push(("tau_1".into(), minuscule_omega(ty, n, unit(1))?));
            out.push((format!("tau_{n}"), minuscule_omega(ty, n, vec![1; n])?));
            let mut w2 = vec![1; n];
            w2[n - 1] = -1;
            out.push((format!("tau_{}", n - 1), minuscule_omega(ty, n, w2)?));
            out.push((
                "iota".into(),
                GroupElement::finite(ty, SignedPerm::flips(n, &[n]))?,
            ));
        }
    }
    Ok(out)
}

/// The length-zero generators without names.
pub fn omega_elements(ty: WeylType, n: usize) -> Result<Vec<GroupElement>> {
    Ok(omega_generators(ty, n)?.into_iter().map(|(_, g)| g).collect())
}

/// Generators used for conjugation moves: all of them except the central
/// translation in type A, which acts trivially.
pub fn omega_conjugators(ty: WeylType, n: usize) -> Result<Vec<(String, GroupElement)>> {
    Ok(omega_generators(ty, n)?
        .into_iter()
        .filter(|(name, _)| name != "center")
        .collect())
}

/// Which cosets of the affine Weyl group a length ball should cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaScope {
    /// Only integral length-zero elements (the identity coset in types B, C
    /// and D up to the integral ones; the type A translation sum mod n).
    Integral,
    /// Every length-zero element (modulo the centre in type A).
    All,
}

/// Representatives of the length-zero elements in the given scope.
///
/// Type A returns `Ω_1^r` for `r = 0, …, n−1`, which represent the
/// length-zero elements modulo the centre.
pub fn omega_representatives(ty: WeylType, n: usize, scope: OmegaScope) -> Result<Vec<GroupElement>> {
    let id = GroupElement::identity(ty, n)?;
    if ty == WeylType::A {
        let tau = minuscule_omega(ty, n, (0..n).map(|i| if i == 0 { 2 } else { 0 }).collect())?;
        let mut out = Vec::with_capacity(n);
        let mut cur = id;
        for _ in 0..n {
            out.push(cur.clone());
            cur = cur.mul(&tau);
        }
        return Ok(out);
    }
    let gens = omega_elements(ty, n)?;
    let mut all: BTreeSet<GroupElement> = BTreeSet::new();
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        if all.insert(x.clone()) {
            for g in &gens {
                frontier.push(x.mul(g));
            }
        }
    }
    Ok(all
        .into_iter()
        .filter(|x| scope == OmegaScope::All || x.is_integral())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_have_length_zero() {
        for ty in WeylType::ALL {
            for n in ty.min_rank()..=6 {
                for (name, g) in omega_generators(ty, n).unwrap() {
                    assert_eq!(length(&g), 0, "{ty}{n} {name}: {g}");
                }
            }
        }
    }

    #[test]
    fn representative_counts() {
        use OmegaScope::*;
        let count = |ty, n, s| omega_representatives(ty, n, s).unwrap().len();
        assert_eq!(count(WeylType::A, 4, Integral), 4);
        assert_eq!(count(WeylType::B, 3, All), 2);
        assert_eq!(count(WeylType::C, 3, Integral), 1);
        assert_eq!(count(WeylType::C, 3, All), 2);
        assert_eq!(count(WeylType::D, 4, Integral), 4);
        assert_eq!(count(WeylType::D, 4, All), 8);
        assert_eq!(count(WeylType::D, 5, All), 8);
    }

    #[test]
    fn type_a_omega_power_is_central() {
        let reps = omega_representatives(WeylType::A, 3, OmegaScope::All).unwrap();
        let tau = &reps[1];
        let cube = tau.pow(3);
        assert_eq!(cube.trans2(), &[2, 2, 2]);
        assert!(cube.perm().is_identity());
        // Ω_1 = t^{e_1} · (cycle sending n ↦ 1)
        assert_eq!(tau.trans2().iter().sum::<i64>(), 2);
    }
}
