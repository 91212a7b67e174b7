//! The vectors `χ_{n,m}` and the block elements `w̃_{n,m}`, `w̃′_{n,m}`.

use crate::error::{AwgError, Result};
use crate::weyl_core::{GroupElement, SignedPerm, WeylType};

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `χ_{n,m} = (a_1, …, a_n)` with `a_i = ⌈im/n⌉ − ⌈(i−1)m/n⌉`.
pub fn chi_nm(n: usize, m: i64) -> Vec<i64> {
    let nn = n as i64;
    (1..=nn)
        .map(|i| ceil_div(i * m, nn) - ceil_div((i - 1) * m, nn))
        .collect()
}

/// The reversal `χ′_{n,m} = (a_n, …, a_1)`.
pub fn chi_nm_rev(n: usize, m: i64) -> Vec<i64> {
    let mut v = chi_nm(n, m);
    v.reverse();
    v
}

/// The rotation `χ[i] = (a_{i+1}, …, a_n, a_1, …, a_i)`.
pub fn rotate(chi: &[i64], i: usize) -> Vec<i64> {
    let mut v = chi.to_vec();
    if !v.is_empty() {
        v.rotate_left(i % chi.len());
    }
    v
}

/// `w̃_{n,m} = t^{χ′_{n,m}} (1 2 ⋯ n)`, tagged with type C.
pub fn block_w(n: usize, m: i64) -> Result<GroupElement> {
    GroupElement::from_integral(WeylType::C, &chi_nm_rev(n, m), SignedPerm::cycle(n).images())
}

/// `w̃′_{n,0} = (n, −n)(1 2 ⋯ n)` and, for `m | n`,
/// `w̃′_{n,m} = t^{χ′_{n,m}} (n/m, −n/m)(2n/m, −2n/m) ⋯ (n, −n)(1 2 ⋯ n)`,
/// tagged with type C.
pub fn block_w_prime(n: usize, m: i64) -> Result<GroupElement> {
    let flips: Vec<usize> = if m == 0 {
        vec![n]
    } else if m > 0 && (n as i64) % m == 0 {
        let step = n / m as usize;
        (1..=m as usize).map(|k| k * step).collect()
    } else {
        return Err(AwgError::InvalidArgument(format!(
            "w̃′_{{{n},{m}}} needs m = 0 or m dividing n"
        )));
    };
    let perm = SignedPerm::flips(n, &flips).compose(&SignedPerm::cycle(n));
    GroupElement::from_integral(WeylType::C, &chi_nm_rev(n, m), perm.images())
}

/// The pair `(w̃_{n,m}, w̃′_{n,m})`.
pub fn block_elements(n: usize, m: i64) -> Result<(GroupElement, GroupElement)> {
    Ok((block_w(n, m)?, block_w_prime(n, m)?))
}

/// `c^i x c^{−i}` for the cycle `c = (1 2 ⋯ n)`, `i ≥ 0`.
pub fn cycle_conjugate(x: &GroupElement, i: usize) -> GroupElement {
    let c = GroupElement::from_parts_unchecked(
        x.weyl_type(),
        vec![0; x.n()],
        SignedPerm::cycle(x.n()),
    )
    .pow(i as u64);
    x.conj_by(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_values() {
        assert_eq!(chi_nm(6, 2), vec![1, 0, 0, 1, 0, 0]);
        assert_eq!(chi_nm(3, 3), vec![1, 1, 1]);
        assert_eq!(chi_nm(5, 0), vec![0; 5]);
        assert_eq!(chi_nm_rev(2, 1), vec![0, 1]);
        assert_eq!(chi_nm(4, -3).iter().sum::<i64>(), -3);
    }

    #[test]
    fn block_element_shapes() {
        let (w, _) = block_elements(4, 0).unwrap();
        assert_eq!(w.perm().images(), &[2, 3, 4, 1]);
        assert!(w.trans2().iter().all(|&x| x == 0));
        let wp = block_w_prime(6, 2).unwrap();
        assert_eq!(wp.chi().unwrap(), vec![0, 0, 1, 0, 0, 1]);
        assert_eq!(wp.perm().images(), &[2, -3, 4, 5, -6, 1]);
        let wp33 = block_w_prime(3, 3).unwrap();
        assert_eq!(wp33.chi().unwrap(), vec![1, 1, 1]);
        assert_eq!(wp33.perm().images(), &[-2, -3, -1]);
        assert!(block_w_prime(6, 4).is_err());
    }
}
