//! Reduced words and the Bruhat order.

use super::element::{GroupElement, WeylType};
use super::roots::{length, simple_indices, simple_reflection, simple_reflections};
use crate::error::{AwgError, Result};

/// Label of the coset `x·W_a` in the extended group.
///
/// Type A: the translation sum. Type B: the translation sum mod 2. Type C:
/// 0 for integral and 1 for half-integral translations. Type D: the class
/// of `χ` in `P∨/Q∨` (0, 1 for integral with even/odd sum, 2, 3 for
/// half-integral with `Σ(χ−ω)` even/odd) plus 4 for an odd number of sign
/// changes.
pub fn coset_tag(x: &GroupElement) -> i64 {
    let t = x.trans2();
    let sum2: i64 = t.iter().sum();
    match x.weyl_type() {
        WeylType::A => sum2 / 2,
        WeylType::B => (sum2 / 2).rem_euclid(2),
        WeylType::C => i64::from(!x.is_integral()),
        WeylType::D => {
            let class = if x.is_integral() {
                (sum2 / 2).rem_euclid(2)
            } else {
                // χ − ω has integral entries (t_i − 1)/2
                let s: i64 = t.iter().map(|v| (v - 1) / 2).sum();
                2 + s.rem_euclid(2)
            };
            class + 4 * (x.perm().sign_count() % 2) as i64
        }
    }
}

/// Smallest `i` with `ℓ(x s_i) < ℓ(x)`.
pub fn first_right_descent(x: &GroupElement) -> Option<usize> {
    let l = length(x);
    simple_indices(x.weyl_type(), x.n())
        .into_iter()
        .find(|&i| length(&x.mul(&simple_reflection(x.weyl_type(), x.n(), i).unwrap())) < l)
}

/// Right descents `{i : ℓ(x s_i) < ℓ(x)}`.
pub fn right_descents(x: &GroupElement) -> Vec<usize> {
    let l = length(x);
    let gens = simple_reflections(x.weyl_type(), x.n()).unwrap();
    simple_indices(x.weyl_type(), x.n())
        .into_iter()
        .filter(|&i| length(&x.mul(&gens[i])) < l)
        .collect()
}

/// Left descents `{i : ℓ(s_i x) < ℓ(x)}`.
pub fn left_descents(x: &GroupElement) -> Vec<usize> {
    let l = length(x);
    let gens = simple_reflections(x.weyl_type(), x.n()).unwrap();
    simple_indices(x.weyl_type(), x.n())
        .into_iter()
        .filter(|&i| length(&gens[i].mul(x)) < l)
        .collect()
}

/// Writes `x = τ · s_{i_1} ⋯ s_{i_k}` with `ℓ(τ) = 0` and `k = ℓ(x)`.
///
/// The word is produced by repeatedly removing the smallest right descent.
pub fn reduced_word(x: &GroupElement) -> (Vec<usize>, GroupElement) {
    let gens = simple_reflections(x.weyl_type(), x.n()).unwrap();
    let mut cur = x.clone();
    let mut len = length(&cur);
    let mut word = Vec::with_capacity(len as usize);
    while len > 0 {
        let (i, next) = gens
            .iter()
            .enumerate()
            .map(|(i, s)| (i, cur.mul(s)))
            .find(|(_, y)| length(y) < len)
            .expect("an element of positive length has a right descent");
        word.push(i);
        cur = next;
        len -= 1;
    }
    word.reverse();
    (word, cur)
}

/// Evaluates `τ · s_{i_1} ⋯ s_{i_k}`.
pub fn word_element(tau: &GroupElement, word: &[usize]) -> Result<GroupElement> {
    let mut x = tau.clone();
    for &i in word {
        x = x.mul(&simple_reflection(tau.weyl_type(), tau.n(), i)?);
    }
    Ok(x)
}

/// Bruhat order `x ≤ y`.
///
/// Elements in different cosets of the affine Weyl group are incomparable.
/// Uses the lifting property: for a right descent `s` of `y`, `x ≤ y` iff
/// `xs ≤ ys` when `xs < x`, and iff `x ≤ ys` otherwise.
pub fn bruhat_leq(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    if x.weyl_type() != y.weyl_type() || x.n() != y.n() {
        return Err(AwgError::TypeMismatch("bruhat_leq on different groups".into()));
    }
    if coset_tag(x) != coset_tag(y) {
        return Ok(false);
    }
    let gens = simple_reflections(x.weyl_type(), x.n())?;
    let (mut x, mut y) = (x.clone(), y.clone());
    let (mut lx, mut ly) = (length(&x), length(&y));
    loop {
        if lx > ly {
            return Ok(false);
        }
        if ly == 0 {
            return Ok(x == y);
        }
        let (s, ys) = gens
            .iter()
            .map(|s| (s, y.mul(s)))
            .find(|(_, ys)| length(ys) < ly)
            .expect("an element of positive length has a right descent");
        let xs = x.mul(s);
        let lxs = length(&xs);
        if lxs < lx {
            x = xs;
            lx = lxs;
        }
        y = ys;
        ly -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ty: WeylType, n: usize, i: usize) -> GroupElement {
        simple_reflection(ty, n, i).unwrap()
    }

    #[test]
    fn reduced_word_of_s0_s1() {
        let x = s(WeylType::A, 3, 0).mul(&s(WeylType::A, 3, 1));
        let (w, tau) = reduced_word(&x);
        assert_eq!(w, vec![0, 1]);
        assert!(tau.is_identity());
    }

    #[test]
    fn reduced_word_rebuilds_element() {
        let x = GroupElement::from_integral(WeylType::C, &[2, -1, 0], &[-3, 1, 2]).unwrap();
        let (w, tau) = reduced_word(&x);
        assert_eq!(w.len() as u64, length(&x));
        assert_eq!(word_element(&tau, &w).unwrap(), x);
    }

    #[test]
    fn bruhat_small_cases() {
        let ty = WeylType::A;
        let e = GroupElement::identity(ty, 3).unwrap();
        let s0 = s(ty, 3, 0);
        let s1 = s(ty, 3, 1);
        let s1s0s1 = s1.mul(&s0).mul(&s1);
        assert!(bruhat_leq(&e, &s1s0s1).unwrap());
        assert!(bruhat_leq(&s0, &s1s0s1).unwrap());
        assert!(bruhat_leq(&s1, &s1s0s1).unwrap());
        assert!(!bruhat_leq(&s1s0s1, &s0).unwrap());
        assert!(!bruhat_leq(&s0, &s1).unwrap());
        let s2 = s(ty, 3, 2);
        assert!(!bruhat_leq(&s2, &s1s0s1).unwrap());
    }

    #[test]
    fn coset_tags() {
        let z = GroupElement::translation(WeylType::A, vec![2, 2, 2]).unwrap();
        assert_eq!(coset_tag(&z), 3);
        let w = GroupElement::translation(WeylType::D, vec![1, 1, -1]).unwrap();
        // χ − ω = (0,0,-1): odd
        assert_eq!(coset_tag(&w), 3);
    }
}
