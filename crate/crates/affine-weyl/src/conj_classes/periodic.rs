//! Eventually periodic integer sequences and the a-sequences of elements.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{AwgError, Result};
use crate::weyl_core::GroupElement;

/// An eventually periodic sequence `prefix, period, period, …`.
///
/// The representation is canonical: the period is primitive and the prefix
/// is as short as possible, so derived equality is sequence equality. The
/// a-sequences of elements are purely periodic; a prefix only appears in
/// comparison thresholds such as `(M, −M−1, −M−1, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicSeq {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    prefix: Vec<i64>,
    period: Vec<i64>,
}

fn primitive_period(p: &[i64]) -> Vec<i64> {
    let n = p.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (0..n).all(|k| p[k] == p[k % d]) {
            return p[..d].to_vec();
        }
    }
    p.to_vec()
}

impl PeriodicSeq {
    /// Builds `prefix, period, period, …` in canonical form.
    pub fn new(prefix: Vec<i64>, period: Vec<i64>) -> Result<Self> {
        if period.is_empty() {
            return Err(AwgError::InvalidArgument("empty period".into()));
        }
        let mut prefix = prefix;
        let mut period = primitive_period(&period);
        while let (Some(&a), Some(&b)) = (prefix.last(), period.last()) {
            if a != b {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        Ok(PeriodicSeq { prefix, period })
    }

    /// The purely periodic sequence with the given period.
    pub fn periodic(period: Vec<i64>) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    /// The constant sequence `(c, c, …)`.
    pub fn constant(c: i64) -> Self {
        PeriodicSeq {
            prefix: Vec::new(),
            period: vec![c],
        }
    }

    /// The preperiod (empty for purely periodic sequences).
    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// The primitive period.
    pub fn period(&self) -> &[i64] {
        &self.period
    }

    /// The `k`-th term, counting from 0.
    pub fn term(&self, k: usize) -> i64 {
        if k < self.prefix.len() {
            self.prefix[k]
        } else {
            self.period[(k - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first term.
    pub fn leading(&self) -> i64 {
        self.term(0)
    }

    /// The termwise sum with a constant sequence.
    pub fn shift(&self, a: i64) -> Self {
        PeriodicSeq {
            prefix: self.prefix.iter().map(|x| x + a).collect(),
            period: self.period.iter().map(|x| x + a).collect(),
        }
    }

    /// The first `k` terms.
    pub fn head(&self, k: usize) -> Vec<i64> {
        (0..k).map(|i| self.term(i)).collect()
    }
}

impl Ord for PeriodicSeq {
    /// Lexicographic order. Beyond both prefixes the difference is periodic
    /// with period `lcm` of the two periods, so comparing
    /// `max prefix + lcm` terms decides the order.
    fn cmp(&self, other: &Self) -> Ordering {
        let horizon = self.prefix.len().max(other.prefix.len())
            + num_integer::lcm(self.period.len(), other.period.len());
        for k in 0..horizon {
            match self.term(k).cmp(&other.term(k)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for PeriodicSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Signed translation entry `a_j = sign(j) χ_{|j|}` of an integral element.
pub(crate) fn signed_entry(chi: &[i64], j: i32) -> i64 {
    let v = chi[j.unsigned_abs() as usize - 1];
    if j > 0 {
        v
    } else {
        -v
    }
}

/// The raw (unreduced) list `a_i, a_{σ⁻¹(i)}, …` over one orbit of `σ⁻¹`.
pub(crate) fn a_orbit(w: &GroupElement, chi: &[i64], i: i32) -> Vec<i64> {
    let inv = w.perm().inverse();
    let mut out = Vec::new();
    let mut j = i;
    loop {
        out.push(signed_entry(chi, j));
        j = inv.apply(j);
        if j == i {
            return out;
        }
    }
}

/// The a-sequence `(a_i, a_{σ⁻¹(i)}, a_{σ⁻²(i)}, …)` for a signed index `i`.
pub fn a_seq(w: &GroupElement, i: i32) -> Result<PeriodicSeq> {
    let chi = w.chi()?;
    if i == 0 || i.unsigned_abs() as usize > w.n() {
        return Err(AwgError::InvalidArgument(format!("index {i} out of range")));
    }
    PeriodicSeq::periodic(a_orbit(w, &chi, i))
}

/// All a-sequences `a_1, …, a_n`.
pub fn a_seqs(w: &GroupElement) -> Result<Vec<PeriodicSeq>> {
    (1..=w.n() as i32).map(|i| a_seq(w, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::WeylType;

    #[test]
    fn canonical_form() {
        let s = PeriodicSeq::new(vec![1, 0], vec![2, 1, 0, 2, 1, 0]).unwrap();
        // 1,0,2,1,0,2,... = period (1,0,2)
        assert_eq!(s.prefix(), &[] as &[i64]);
        assert_eq!(s.period(), &[1, 0, 2]);
        let t = PeriodicSeq::new(vec![3], vec![-4]).unwrap();
        assert_eq!(t.prefix(), &[3]);
        assert_eq!(t.head(4), vec![3, -4, -4, -4]);
    }

    #[test]
    fn lexicographic_order() {
        let a = PeriodicSeq::periodic(vec![1, 0, 0]).unwrap();
        let b = PeriodicSeq::periodic(vec![1, 0]).unwrap();
        // 1,0,0,... vs 1,0,1,...
        assert!(a < b);
        assert!(PeriodicSeq::constant(0) < a);
        let c = PeriodicSeq::new(vec![1], vec![-2]).unwrap();
        assert!(c < a);
    }

    #[test]
    fn identity_has_zero_sequences() {
        let e = GroupElement::identity(WeylType::C, 4).unwrap();
        for s in a_seqs(&e).unwrap() {
            assert_eq!(s, PeriodicSeq::constant(0));
        }
    }

    #[test]
    fn a6_of_w_prime_6_2() {
        // σ: 1→2, 2→−3, 3→4, 4→5, 5→−6, 6→1 and χ = (0,0,1,0,0,1).
        // σ⁻¹ walks 6 → −5 → −4 → −3 → 2 → 1 → 6, giving 1,0,0,−1,0,0,1,...
        let w = GroupElement::from_integral(WeylType::C, &[0, 0, 1, 0, 0, 1], &[2, -3, 4, 5, -6, 1])
            .unwrap();
        let s = a_seq(&w, 6).unwrap();
        assert_eq!(s.head(7), vec![1, 0, 0, -1, 0, 0, 1]);
    }
}
