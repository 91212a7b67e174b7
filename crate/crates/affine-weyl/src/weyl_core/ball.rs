//! Enumeration of length balls.

use std::collections::BTreeSet;

use super::element::{GroupElement, WeylType};
use super::omega::{omega_representatives, OmegaScope};
use super::roots::{length, simple_reflections};
use crate::error::Result;
use crate::exec::Exec;

/// All elements of length at most `maxlen`, grouped by length.
///
/// `layers[k]` holds the elements of length `k`, sorted canonically. Each
/// layer is obtained from the previous one by right multiplication with the
/// simple reflections that raise the length. In type A elements are taken
/// modulo the centre (translation sums `0, …, n−1`).
pub fn ball_layers(
    ty: WeylType,
    n: usize,
    maxlen: u64,
    scope: OmegaScope,
    exec: Exec,
) -> Result<Vec<Vec<GroupElement>>> {
    let gens = simple_reflections(ty, n)?;
    let mut layers: Vec<Vec<GroupElement>> = vec![omega_representatives(ty, n, scope)?];
    for k in 1..=maxlen {
        let prev = layers.last().expect("at least the length-zero layer");
        let ups = exec.map(prev, |x| {
            gens.iter()
                .map(|s| x.mul(s))
                .filter(|y| length(y) == k)
                .collect::<Vec<_>>()
        });
        let layer: BTreeSet<GroupElement> = ups.into_iter().flatten().collect();
        layers.push(layer.into_iter().collect());
    }
    Ok(layers)
}

/// All elements of length at most `maxlen`, ordered by length then
/// canonically.
pub fn ball(
    ty: WeylType,
    n: usize,
    maxlen: u64,
    scope: OmegaScope,
    exec: Exec,
) -> Result<Vec<GroupElement>> {
    Ok(ball_layers(ty, n, maxlen, scope, exec)?
        .into_iter()
        .flatten()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a1_has_two_elements_per_length() {
        let layers = ball_layers(WeylType::A, 2, 5, OmegaScope::Integral, Exec::Sequential).unwrap();
        // two cosets (sum 0 and sum 1), each with 2 elements of every positive length
        assert_eq!(layers[0].len(), 2);
        for l in &layers[1..] {
            assert_eq!(l.len(), 4);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = ball(WeylType::C, 3, 5, OmegaScope::All, Exec::Sequential).unwrap();
        let b = ball(WeylType::C, 3, 5, OmegaScope::All, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn affine_c2_poincare_series() {
        // Bott's formula with degrees 2 and 4:
        // (1+q)(1+q+q²+q³) / ((1−q)(1−q³)) = 1 + 3q + 5q² + 8q³ + 11q⁴ + …
        let layers = ball_layers(WeylType::C, 2, 4, OmegaScope::Integral, Exec::Sequential).unwrap();
        let sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 5, 8, 11]);
    }
}
