//! Quasi-positive elements and the operators `P_θ`.

use std::collections::{BTreeSet, VecDeque};

use super::periodic::{a_orbit, a_seq, a_seqs, PeriodicSeq};
use crate::error::{AwgError, Result};
use crate::weyl_core::{GroupElement, SignedPerm, WeylType};

fn require_integral(w: &GroupElement) -> Result<Vec<i64>> {
    w.chi()
}

/// Whether `w` is quasi-positive.
///
/// (1) every `a_i(w)`, `i = 1, …, n`, is lexicographically `≥ (0, 0, …)`;
/// (2) on every orbit of `σ` whose a-sequences vanish, with `M` the largest
/// absolute value in the orbit, `σ⁻¹(j) > 0` for every `j < M` in the
/// orbit.
pub fn is_quasi_positive(w: &GroupElement) -> Result<bool> {
    let chi = require_integral(w)?;
    let zero = PeriodicSeq::constant(0);
    for s in a_seqs(w)? {
        if s < zero {
            return Ok(false);
        }
    }
    let inv = w.perm().inverse();
    for cycle in w.perm().cycles() {
        if cycle.iter().any(|&j| super::periodic::signed_entry(&chi, j) != 0) {
            continue;
        }
        let m = cycle.iter().map(|j| j.abs()).max().expect("orbits are nonempty");
        for &j in &cycle {
            if j > 0 && j < m && inv.apply(j) < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The quasi-positive element `ε w ε⁻¹` in the orbit of `w` under
/// conjugation by sign changes, together with the sign vector `ε`.
///
/// Orbits with nonzero a-sequences take `ε_j` = the sign of `a_j(w)`. An
/// orbit with vanishing a-sequences takes `ε_M = 1` at its largest index and
/// propagates signs along the cycle so that `σ'` maps each visited index to
/// a positive one.
pub fn quasi_positive_rep_with_signs(w: &GroupElement) -> Result<(GroupElement, Vec<i64>)> {
    let chi = require_integral(w)?;
    let n = w.n();
    let zero = PeriodicSeq::constant(0);
    let mut eps = vec![0i64; n];
    let perm = w.perm();
    for cycle in perm.cycles() {
        let first = cycle[0].unsigned_abs() as usize;
        if eps[first - 1] != 0 {
            continue;
        }
        let raw = a_orbit(w, &chi, cycle[0]);
        if raw.iter().any(|&x| x != 0) {
            for &j in &cycle {
                let idx = j.unsigned_abs() as usize;
                if eps[idx - 1] == 0 {
                    let s = PeriodicSeq::periodic(a_orbit(w, &chi, idx as i32))?;
                    eps[idx - 1] = if s >= zero { 1 } else { -1 };
                }
            }
        } else {
            let m = cycle.iter().map(|j| j.abs()).max().expect("orbits are nonempty");
            eps[m as usize - 1] = 1;
            let mut cur = m;
            loop {
                let img = perm.apply(cur);
                let j = img.abs();
                if j == m {
                    break;
                }
                eps[j as usize - 1] = eps[cur as usize - 1] * i64::from(img.signum());
                cur = j;
            }
        }
    }
    let flips: Vec<usize> = (1..=n).filter(|&j| eps[j - 1] < 0).collect();
    if w.weyl_type() == WeylType::A && !flips.is_empty() {
        return Err(AwgError::Unsupported(
            "sign normalisation leaves the type A group".into(),
        ));
    }
    let e = GroupElement::from_parts_unchecked(w.weyl_type(), vec![0; n], SignedPerm::flips(n, &flips));
    Ok((w.conj_by(&e), eps))
}

/// The quasi-positive representative of the sign-change orbit of `w`.
pub fn quasi_positive_rep(w: &GroupElement) -> Result<GroupElement> {
    Ok(quasi_positive_rep_with_signs(w)?.0)
}

fn check_theta(theta: &PeriodicSeq) -> Result<()> {
    if theta.leading() <= 0 {
        return Err(AwgError::Precondition("θ needs a positive leading entry".into()));
    }
    Ok(())
}

/// The 0/1 vector `e_θ(w)` with `c_i = 1` iff `a_i(w) ≥ θ`.
pub fn e_theta(w: &GroupElement, theta: &PeriodicSeq) -> Result<Vec<i64>> {
    check_theta(theta)?;
    if !is_quasi_positive(w)? {
        return Err(AwgError::Precondition("element is not quasi-positive".into()));
    }
    Ok(a_seqs(w)?
        .iter()
        .map(|s| i64::from(s >= theta))
        .collect())
}

/// `P_θ(w)`: the quasi-positive representative of `t^{−e} w t^{e}` with
/// `e = e_θ(w)`.
pub fn p_operator(w: &GroupElement, theta: &PeriodicSeq) -> Result<GroupElement> {
    let e = e_theta(w, theta)?;
    let t = GroupElement::from_parts_unchecked(
        w.weyl_type(),
        e.iter().map(|x| 2 * x).collect(),
        SignedPerm::identity(w.n()),
    );
    quasi_positive_rep(&w.conj_by(&t.inverse()))
}

/// The extreme thresholds: the a-sequences `a_i(w)` whose leading entry is
/// `M = max(a_1, …, a_n, 1)`, and `(M, −M−1, −M−1, …)`; sorted and
/// deduplicated.
pub fn extreme_thetas(w: &GroupElement) -> Result<Vec<PeriodicSeq>> {
    let chi = w.chi()?;
    let m = chi.iter().copied().max().unwrap_or(0).max(1);
    let mut out: BTreeSet<PeriodicSeq> = BTreeSet::new();
    for i in 1..=w.n() as i32 {
        let s = a_seq(w, i)?;
        if s.leading() == m {
            out.insert(s);
        }
    }
    out.insert(PeriodicSeq::new(vec![m], vec![-m - 1])?);
    Ok(out.into_iter().collect())
}

/// All elements reachable from the quasi-positive representative of `w` by
/// repeatedly applying `P_θ` with extreme thresholds, in canonical order.
///
/// The search stops with [`AwgError::BudgetExceeded`] after `budget`
/// elements.
pub fn p_closure(w: &GroupElement, budget: usize) -> Result<BTreeSet<GroupElement>> {
    let start = quasi_positive_rep(w)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for theta in extreme_thetas(&cur)? {
            let next = p_operator(&cur, &theta)?;
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(AwgError::BudgetExceeded { budget });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// `ev₀(w) = Σ a_i`.
pub fn ev0(w: &GroupElement) -> Result<i64> {
    Ok(w.chi()?.iter().sum())
}

/// `ev₁(w) = (max a_i, number of indices attaining it)`.
pub fn ev1(w: &GroupElement) -> Result<(i64, usize)> {
    let chi = w.chi()?;
    let m = *chi.iter().max().expect("rank is positive");
    Ok((m, chi.iter().filter(|&&x| x == m).count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c_elem(chi: &[i64], perm: &[i32]) -> GroupElement {
        GroupElement::from_integral(WeylType::C, chi, perm).unwrap()
    }

    #[test]
    fn worked_quasi_positive_examples() {
        // (1, −2, −1, 2): σ(1) = −2, σ(2) = 1
        assert!(is_quasi_positive(&c_elem(&[0, 0], &[-2, 1])).unwrap());
        // (1, 2, −1, −2): σ(1) = 2, σ(2) = −1
        assert!(!is_quasi_positive(&c_elem(&[0, 0], &[2, -1])).unwrap());
        assert!(is_quasi_positive(&c_elem(&[0, 0, 0], &[1, 2, 3])).unwrap());
    }

    #[test]
    fn rep_is_quasi_positive_and_fixes_quasi_positive_input() {
        let w = c_elem(&[0, 0], &[2, -1]);
        let r = quasi_positive_rep(&w).unwrap();
        assert!(is_quasi_positive(&r).unwrap());
        let q = c_elem(&[1, 0, 2], &[2, 3, 1]);
        assert!(is_quasi_positive(&q).unwrap());
        assert_eq!(quasi_positive_rep(&q).unwrap(), q);
        let neg = c_elem(&[-1, 2, 0], &[-1, 3, 2]);
        assert!(is_quasi_positive(&quasi_positive_rep(&neg).unwrap()).unwrap());
    }

    #[test]
    fn large_threshold_gives_zero_vector() {
        let w = c_elem(&[1, 0, 2], &[2, 3, 1]);
        let theta = PeriodicSeq::constant(5);
        assert_eq!(e_theta(&w, &theta).unwrap(), vec![0, 0, 0]);
        assert_eq!(p_operator(&w, &theta).unwrap(), w);
    }

    #[test]
    fn ev_statistics() {
        let e = GroupElement::identity(WeylType::C, 4).unwrap();
        assert_eq!(ev0(&e).unwrap(), 0);
        assert_eq!(ev1(&e).unwrap(), (0, 4));
    }
}
