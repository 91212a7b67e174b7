//! Signed permutations of `{±1, …, ±n}`.

use serde::{Deserialize, Serialize};

use crate::error::{AwgError, Result};

/// A signed permutation, stored by the images `σ(1), …, σ(n)`.
///
/// Composition is right to left: `(σ∘τ)(i) = σ(τ(i))`, and
/// `σ(-i) = -σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPerm {
    images: Vec<i32>,
}

impl SignedPerm {
    /// Builds a signed permutation, checking that `|σ|` is a bijection.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(AwgError::InvalidArgument(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        SignedPerm { images }
    }

    /// The identity of rank `n`.
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    /// The transposition exchanging `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// The sign change at the given 1-based positions.
    pub fn flips(n: usize, at: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in at {
            p.images[i - 1] = -p.images[i - 1];
        }
        p
    }

    /// The cycle `1 → 2 → ⋯ → n → 1`.
    pub fn cycle(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).map(|i| if i as usize == n { 1 } else { i + 1 }).collect(),
        }
    }

    /// Rank.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The images `σ(1), …, σ(n)`.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `σ(i)` for a signed index `i ≠ 0`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i > 0 {
            v
        } else {
            -v
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            let target = x.unsigned_abs() as usize - 1;
            out[target] = if x > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPerm { images: out }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        SignedPerm {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    /// Whether no image is negative.
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// Number of negative images.
    pub fn sign_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Order in the hyperoctahedral group.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    /// Orbits of `σ` on `{±1, …, ±n}`, each starting at its element of
    /// smallest absolute value (positive representative first) and listed in
    /// the order `i, σ(i), σ²(i), …`.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let n = self.n() as i32;
        let mut seen = vec![false; 2 * self.n() + 1];
        let idx = |i: i32| (i + n) as usize;
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[idx(start)] {
                continue;
            }
            for s in [start, -start] {
                if seen[idx(s)] {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut cur = s;
                while !seen[idx(cur)] {
                    seen[idx(cur)] = true;
                    cyc.push(cur);
                    cur = self.apply(cur);
                }
                out.push(cyc);
            }
        }
        out
    }

    /// Action on a coordinate vector: `(σa)_{|σ(i)|} = sign(σ(i)) · a_i`.
    pub fn act(&self, a: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let t = x.unsigned_abs() as usize - 1;
            out[t] = if x > 0 { a[i] } else { -a[i] };
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(SignedPerm::new(vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![1, 3]).is_err());
        assert!(SignedPerm::new(vec![0, 1]).is_err());
        assert!(SignedPerm::new(vec![-2, 1]).is_ok());
    }

    #[test]
    fn compose_is_right_to_left() {
        let a = SignedPerm::new(vec![2, 1, 3]).unwrap();
        let b = SignedPerm::new(vec![1, 3, 2]).unwrap();
        // (a∘b)(2) = a(3) = 3, (a∘b)(3) = a(2) = 1
        assert_eq!(a.compose(&b).images(), &[2, 3, 1]);
    }

    #[test]
    fn inverse_and_action() {
        let p = SignedPerm::new(vec![-2, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        // e_1 ↦ -e_2
        assert_eq!(p.act(&[1, 0, 0]), vec![0, -1, 0]);
        assert_eq!(p.apply(-1), 2);
    }

    #[test]
    fn order_of_signed_cycle() {
        // 1 → 2 → -1: a cycle of length 4 on ±{1,2}
        let p = SignedPerm::new(vec![2, -1]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(SignedPerm::cycle(3).order(), 3);
        assert_eq!(SignedPerm::flips(2, &[1]).order(), 2);
    }
}
