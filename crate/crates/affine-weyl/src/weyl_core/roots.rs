//! Root data, the Iwahori-Matsumoto length and simple reflections.

use super::element::{GroupElement, WeylType};
use super::perm::SignedPerm;
use crate::error::{AwgError, Result};

/// Positive roots as integer coefficient vectors.
///
/// In every type a root is positive when its first nonzero coordinate is
/// positive. Type B uses the short roots `e_i`, type C the long roots `2e_i`.
pub fn positive_roots(ty: WeylType, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 1;
            a[j] = -1;
            out.push(a);
            if ty != WeylType::A {
                let mut b = vec![0; n];
                b[i] = 1;
                b[j] = 1;
                out.push(b);
            }
        }
        match ty {
            WeylType::B | WeylType::C => {
                let mut c = vec![0; n];
                c[i] = if ty == WeylType::B { 1 } else { 2 };
                out.push(c);
            }
            _ => {}
        }
    }
    out
}

/// Simple root `α_j`, `j ∈ 1..=rank of the finite system`.
pub fn simple_root(ty: WeylType, n: usize, j: usize) -> Vec<i64> {
    let mut a = vec![0; n];
    if j < n {
        a[j - 1] = 1;
        a[j] = -1;
    } else {
        match ty {
            WeylType::B => a[n - 1] = 1,
            WeylType::C => a[n - 1] = 2,
            WeylType::D => {
                a[n - 2] = 1;
                a[n - 1] = 1;
            }
            WeylType::A => panic!("type A has no simple root α_n"),
        }
    }
    a
}

/// The sum `2ρ` of the positive roots.
pub fn two_rho(ty: WeylType, n: usize) -> Vec<i64> {
    let mut acc = vec![0; n];
    for r in positive_roots(ty, n) {
        for (a, b) in acc.iter_mut().zip(r) {
            *a += b;
        }
    }
    acc
}

/// Whether a root (or any vector) has positive first nonzero coordinate.
pub fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// The pairing `⟨χ, α⟩` for `χ = trans2/2`; the result must be an integer.
pub fn pairing(trans2: &[i64], alpha: &[i64]) -> i64 {
    let twice: i64 = trans2.iter().zip(alpha).map(|(a, b)| a * b).sum();
    assert!(twice % 2 == 0, "pairing of a coweight with a root is integral");
    twice / 2
}

#[inline]
fn root_term(pair: i64, positive: bool) -> u64 {
    if positive {
        pair.unsigned_abs()
    } else {
        (pair - 1).unsigned_abs()
    }
}

/// The Iwahori-Matsumoto length
/// `ℓ(t^χσ) = Σ_{α>0, σ⁻¹α>0} |⟨χ,α⟩| + Σ_{α>0, σ⁻¹α<0} |⟨χ,α⟩ − 1|`.
///
/// For type D elements with an odd number of sign changes the length is
/// computed on `x·ι`, where `ι` is the sign change at `n`.
pub fn length(x: &GroupElement) -> u64 {
    let ty = x.weyl_type();
    let n = x.n();
    let perm = if ty == WeylType::D && x.perm().sign_count() % 2 == 1 {
        x.perm().compose(&SignedPerm::flips(n, &[n]))
    } else {
        x.perm().clone()
    };
    let inv = perm.inverse();
    let t = x.trans2();
    // σ⁻¹ e_i = s_i e_{p_i}
    let p: Vec<usize> = inv.images().iter().map(|v| v.unsigned_abs() as usize).collect();
    let s: Vec<bool> = inv.images().iter().map(|&v| v > 0).collect();
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let diff = t[i] - t[j];
            assert!(diff % 2 == 0, "pairing of a coweight with a root is integral");
            // σ⁻¹(e_i - e_j) = s_i e_{p_i} - s_j e_{p_j}
            let pos = if p[i] < p[j] { s[i] } else { !s[j] };
            total += root_term(diff / 2, pos);
            if ty != WeylType::A {
                let sum = t[i] + t[j];
                assert!(sum % 2 == 0, "pairing of a coweight with a root is integral");
                let pos = if p[i] < p[j] { s[i] } else { s[j] };
                total += root_term(sum / 2, pos);
            }
        }
        match ty {
            WeylType::B => {
                assert!(t[i] % 2 == 0, "pairing of a coweight with a root is integral");
                total += root_term(t[i] / 2, s[i]);
            }
            WeylType::C => total += root_term(t[i], s[i]),
            _ => {}
        }
    }
    total
}

/// Indices of the affine simple reflections: `0..n` for type A,
/// `0..=n` otherwise.
pub fn simple_indices(ty: WeylType, n: usize) -> Vec<usize> {
    match ty {
        WeylType::A => (0..n).collect(),
        _ => (0..=n).collect(),
    }
}

/// Indices of the finite simple reflections (the set `S`).
pub fn finite_simple_indices(ty: WeylType, n: usize) -> Vec<usize> {
    match ty {
        WeylType::A => (1..n).collect(),
        _ => (1..=n).collect(),
    }
}

/// The coroot `θ∨` of the highest root, doubled.
fn theta_coroot2(ty: WeylType, n: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    match ty {
        WeylType::A => {
            v[0] = 2;
            v[n - 1] = -2;
        }
        WeylType::B | WeylType::D => {
            v[0] = 2;
            v[1] = 2;
        }
        WeylType::C => v[0] = 2,
    }
    v
}

/// The reflection `s_θ` in the highest root.
fn theta_reflection(ty: WeylType, n: usize) -> SignedPerm {
    match ty {
        WeylType::A => SignedPerm::transposition(n, 1, n),
        WeylType::B | WeylType::D => {
            let mut im: Vec<i32> = (1..=n as i32).collect();
            im[0] = -2;
            im[1] = -1;
            SignedPerm::from_images_unchecked(im)
        }
        WeylType::C => SignedPerm::flips(n, &[1]),
    }
}

/// The simple reflection `s_i`; `s_0 = t^{θ∨} s_θ`.
pub fn simple_reflection(ty: WeylType, n: usize, i: usize) -> Result<GroupElement> {
    ty.check_rank(n)?;
    let top = if ty == WeylType::A { n - 1 } else { n };
    if i > top {
        return Err(AwgError::InvalidArgument(format!(
            "no simple reflection s_{i} in type {ty}{n}"
        )));
    }
    let (trans2, perm) = if i == 0 {
        (theta_coroot2(ty, n), theta_reflection(ty, n))
    } else if i < n {
        (vec![0; n], SignedPerm::transposition(n, i, i + 1))
    } else if ty == WeylType::D {
        let mut im: Vec<i32> = (1..=n as i32).collect();
        im[n - 2] = -(n as i32);
        im[n - 1] = -(n as i32 - 1);
        (vec![0; n], SignedPerm::from_images_unchecked(im))
    } else {
        (vec![0; n], SignedPerm::flips(n, &[n]))
    };
    Ok(GroupElement::from_parts_unchecked(ty, trans2, perm))
}

/// All affine simple reflections in index order.
pub fn simple_reflections(ty: WeylType, n: usize) -> Result<Vec<GroupElement>> {
    simple_indices(ty, n)
        .into_iter()
        .map(|i| simple_reflection(ty, n, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(WeylType::A, 4).len(), 6);
        assert_eq!(positive_roots(WeylType::B, 3).len(), 9);
        assert_eq!(positive_roots(WeylType::C, 3).len(), 9);
        assert_eq!(positive_roots(WeylType::D, 4).len(), 12);
        for ty in WeylType::ALL {
            assert!(positive_roots(ty, 4).iter().all(|r| is_positive(r)));
        }
    }

    #[test]
    fn simple_reflections_have_length_one_and_square_to_one() {
        for ty in WeylType::ALL {
            for n in ty.min_rank()..=5 {
                for s in simple_reflections(ty, n).unwrap() {
                    assert_eq!(length(&s), 1, "{s}");
                    assert!(s.mul(&s).is_identity(), "{s}");
                }
            }
        }
    }

    #[test]
    fn translation_length_is_pairing_with_two_rho() {
        // ℓ(t^λ) = ⟨λ+, 2ρ⟩ for dominant λ
        let t = GroupElement::translation(WeylType::C, vec![4, 2, 0]).unwrap();
        let rho = two_rho(WeylType::C, 3);
        assert_eq!(rho, vec![6, 4, 2]);
        assert_eq!(length(&t) as i64, pairing(t.trans2(), &rho));
        let a = GroupElement::translation(WeylType::A, vec![2, 0, -2]).unwrap();
        assert_eq!(length(&a), 4);
    }

    #[test]
    fn central_translation_has_length_zero_in_type_a() {
        let z = GroupElement::translation(WeylType::A, vec![2, 2, 2]).unwrap();
        assert_eq!(length(&z), 0);
    }
}
