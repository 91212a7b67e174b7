//! Class labels `(λ̃, μ̃)` for integral conjugacy classes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::blocks::chi_nm_rev;
use super::periodic::{a_seqs, signed_entry};
use crate::error::{AwgError, Result};
use crate::weyl_core::{GroupElement, SignedPerm, WeylType};

/// A double partition: two weakly decreasing lists of pairs `(b, c)` with
/// `b ≥ 1`. Entries of `μ̃` are special (`c ∈ {0, 1}`).
///
/// The type is not stored; operations that depend on it take it as an
/// argument, and the JSON form is `{"lambda":[[b,c],…],"mu":[[b,c],…]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DPPair {
    pub lambda: Vec<(i64, i64)>,
    pub mu: Vec<(i64, i64)>,
}

fn sort_desc(v: &mut [(i64, i64)]) {
    v.sort_by(|a, b| b.cmp(a));
}

impl DPPair {
    /// Builds a pair, sorting both lists into weakly decreasing order.
    pub fn new(mut lambda: Vec<(i64, i64)>, mut mu: Vec<(i64, i64)>) -> Self {
        sort_desc(&mut lambda);
        sort_desc(&mut mu);
        DPPair { lambda, mu }
    }

    /// `|λ̃| + |μ̃|`, the sum of the `b` entries.
    pub fn size(&self) -> i64 {
        self.lambda.iter().chain(&self.mu).map(|e| e.0).sum()
    }

    /// Checks the constraints of the type and rank.
    pub fn validate(&self, ty: WeylType, n: usize) -> Result<()> {
        let bad = |msg: &str| Err(AwgError::InvalidArgument(format!("{msg}: {self:?}")));
        if self.lambda.iter().chain(&self.mu).any(|e| e.0 < 1) {
            return bad("entries need b ≥ 1");
        }
        if self.size() != n as i64 {
            return bad(&format!("sizes must add up to {n}"));
        }
        if self.mu.iter().any(|e| e.1 != 0 && e.1 != 1) {
            return bad("μ̃ entries need c ∈ {0, 1}");
        }
        if ty == WeylType::A && !self.mu.is_empty() {
            return bad("type A pairs have empty μ̃");
        }
        if ty != WeylType::A && self.lambda.iter().any(|e| e.1 < 0) {
            return bad("λ̃ entries need c ≥ 0 outside type A");
        }
        let mut sorted = self.clone();
        sort_desc(&mut sorted.lambda);
        sort_desc(&mut sorted.mu);
        if sorted != *self {
            return bad("entries must be weakly decreasing");
        }
        Ok(())
    }

    /// `μ̲̃`: every `c` in `μ̃` replaced by `1 − c`.
    pub fn mu_flipped(&self) -> DPPair {
        DPPair::new(
            self.lambda.clone(),
            self.mu.iter().map(|&(b, c)| (b, 1 - c)).collect(),
        )
    }

    /// The canonical representative: for types C and D the larger of
    /// `(λ̃, μ̃)` and `(λ̃, μ̲̃)`, otherwise the pair itself.
    pub fn canonical(&self, ty: WeylType) -> DPPair {
        let base = DPPair::new(self.lambda.clone(), self.mu.clone());
        match ty {
            WeylType::C | WeylType::D => {
                let f = base.mu_flipped();
                if f.mu > base.mu {
                    f
                } else {
                    base
                }
            }
            _ => base,
        }
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair serializes")
    }

    /// Parses the JSON form (entries are re-sorted).
    pub fn from_json(s: &str) -> Result<Self> {
        let p: DPPair = serde_json::from_str(s)?;
        Ok(DPPair::new(p.lambda, p.mu))
    }
}

impl std::fmt::Display for DPPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: &[(i64, i64)]| {
            if v.is_empty() {
                "Ø".to_string()
            } else {
                let parts: Vec<String> = v.iter().map(|(b, c)| format!("({b},{c})")).collect();
                format!("[{}]", parts.join(","))
            }
        };
        write!(f, "{} {}", show(&self.lambda), show(&self.mu))
    }
}

/// The class label of an integral element.
///
/// A pair of orbits `{O, −O}` of `σ` gives a `λ̃` entry `(|O|, Σ_{j∈O} a_j)`
/// (with `|c|` outside type A). A self-negating orbit of size `2b` gives a
/// `μ̃` entry `(b, c mod 2)` with `c` summed over half of the orbit. Types C
/// and D return the canonical representative.
pub fn classify(w: &GroupElement) -> Result<DPPair> {
    let chi = w.chi()?;
    let ty = w.weyl_type();
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    for cycle in w.perm().cycles() {
        let start = cycle[0];
        if start < 0 {
            continue;
        }
        if cycle.contains(&-start) {
            let b = cycle.len() / 2;
            let c: i64 = cycle[..b].iter().map(|&j| signed_entry(&chi, j)).sum();
            mu.push((b as i64, c.rem_euclid(2)));
        } else {
            let c: i64 = cycle.iter().map(|&j| signed_entry(&chi, j)).sum();
            let c = if ty == WeylType::A { c } else { c.abs() };
            lambda.push((cycle.len() as i64, c));
        }
    }
    Ok(DPPair::new(lambda, mu).canonical(ty))
}

/// The standard element `t^{[χ′_{b_1,c_1}, …, χ′_{b_l,c_l}]} w_{(λ,μ)}`.
///
/// `w_{(λ,μ)}` cycles each block of consecutive indices (first the `λ̃`
/// blocks, then the `μ̃` blocks) and changes the sign at the last index of
/// every `μ̃` block after cycling.
pub fn standard_element(ty: WeylType, p: &DPPair) -> Result<GroupElement> {
    let n = p.size() as usize;
    ty.check_rank(n)?;
    p.validate(ty, n)?;
    let mut chi = Vec::with_capacity(n);
    let mut images = vec![0i32; n];
    let mut offset = 0usize;
    let blocks = p.lambda.iter().map(|e| (e, false)).chain(p.mu.iter().map(|e| (e, true)));
    for (&(b, c), flip) in blocks {
        let b = b as usize;
        chi.extend(chi_nm_rev(b, c));
        for k in 1..=b {
            let next = if k == b { 1 } else { k + 1 };
            let img = (offset + next) as i32;
            images[offset + k - 1] = if flip && next == b { -img } else { img };
        }
        offset += b;
    }
    GroupElement::from_integral(ty, &chi, &images)
}

/// Whether `gcd(b, c) = 1` on every `λ̃` entry and `c = 1` on every `μ̃`
/// entry. With `gcd(b, 0) = b`, an entry `(b, 0)` is distinguished only for
/// `b = 1`.
pub fn is_distinguished(p: &DPPair) -> bool {
    p.lambda
        .iter()
        .all(|&(b, c)| num_integer::gcd(b, c.abs()) == 1)
        && p.mu.iter().all(|&(_, c)| c == 1)
}

/// Whether the conjugacy class labelled by `p` is distinguished. For types C
/// and D both `(λ̃, μ̃)` and `(λ̃, μ̲̃)` label the class, so this requires
/// `μ̃ = Ø`.
pub fn is_distinguished_class(ty: WeylType, p: &DPPair) -> bool {
    match ty {
        WeylType::C | WeylType::D => is_distinguished(p) && is_distinguished(&p.mu_flipped()),
        _ => is_distinguished(p),
    }
}

/// The fundamental element `τ w̃^st τ⁻¹`, where `τ ∈ S_n` sorts the
/// a-sequences of the standard element decreasingly (ties by index).
pub fn fundamental_element(ty: WeylType, p: &DPPair) -> Result<GroupElement> {
    if !is_distinguished(p) {
        return Err(AwgError::Precondition(format!("{p} is not distinguished")));
    }
    let st = standard_element(ty, p)?;
    let seqs = a_seqs(&st)?;
    let mut order: Vec<usize> = (0..st.n()).collect();
    order.sort_by(|&i, &j| seqs[j].cmp(&seqs[i]).then(i.cmp(&j)));
    let mut images = vec![0i32; st.n()];
    for (k, &i) in order.iter().enumerate() {
        images[i] = k as i32 + 1;
    }
    let tau = GroupElement::finite(ty, SignedPerm::new(images)?)?;
    Ok(st.conj_by(&tau))
}

/// `d(λ̃, μ̃) = (λ̃′, μ̃′)`: each `λ̃` entry `(b, c)` becomes `g = gcd(b, c)`
/// copies of `(b/g, c/g)`, each `μ̃` entry `(b, 0)` becomes `b` copies of
/// `(1, 0)`, and the `μ̃` entries with `c = 1` are kept.
pub fn d_map(p: &DPPair) -> DPPair {
    let mut lambda = Vec::new();
    for &(b, c) in &p.lambda {
        let g = num_integer::gcd(b, c.abs());
        for _ in 0..g {
            lambda.push((b / g, c / g));
        }
    }
    let mut mu = Vec::new();
    for &(b, c) in &p.mu {
        if c == 0 {
            lambda.extend(std::iter::repeat_n((1, 0), b as usize));
        } else {
            mu.push((b, c));
        }
    }
    DPPair::new(lambda, mu)
}

/// `d′(λ̃, μ̃) = d(λ̃′, μ̲̃′)` with `(λ̃′, μ̃′) = d(λ̃, μ̃)`; always of the form
/// `(∗, Ø)`.
pub fn d_prime_map(p: &DPPair) -> DPPair {
    let d = d_map(p);
    d_map(&DPPair::new(d.lambda.clone(), d.mu.iter().map(|&(b, c)| (b, 1 - c)).collect()))
}

fn multisets(cands: &[(i64, i64)], total: i64, from: usize, acc: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
    if total == 0 {
        out.push(acc.clone());
        return;
    }
    for (k, &e) in cands.iter().enumerate().skip(from) {
        if e.0 <= total {
            acc.push(e);
            multisets(cands, total - e.0, k, acc, out);
            acc.pop();
        }
    }
}

/// Weakly decreasing lists of entries drawn from `cands` (sorted
/// decreasingly) whose `b` entries add up to `total`.
pub(crate) fn entry_multisets(cands: &[(i64, i64)], total: i64) -> Vec<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    multisets(cands, total, 0, &mut Vec::new(), &mut out);
    out
}

/// All class labels of rank `n` with `|c| ≤ cmax` on `λ̃`, canonical and
/// sorted.
pub fn enumerate_dppairs(ty: WeylType, n: usize, cmax: i64) -> Result<Vec<DPPair>> {
    ty.check_rank(n)?;
    let nn = n as i64;
    let cmin = if ty == WeylType::A { -cmax } else { 0 };
    let mut lam_cands: Vec<(i64, i64)> = (1..=nn)
        .flat_map(|b| (cmin..=cmax).map(move |c| (b, c)))
        .collect();
    sort_desc(&mut lam_cands);
    let mut mu_cands: Vec<(i64, i64)> = (1..=nn).flat_map(|b| [(b, 0), (b, 1)]).collect();
    sort_desc(&mut mu_cands);
    let mut out = BTreeSet::new();
    for lam_size in 0..=nn {
        let mu_size = nn - lam_size;
        if ty == WeylType::A && mu_size > 0 {
            continue;
        }
        let lams = entry_multisets(&lam_cands, lam_size);
        let mus = entry_multisets(&mu_cands, mu_size);
        for l in &lams {
            for m in &mus {
                out.insert(DPPair::new(l.clone(), m.clone()).canonical(ty));
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let t = GroupElement::from_integral(WeylType::A, &[1, -1], &[1, 2]).unwrap();
        assert_eq!(classify(&t).unwrap(), DPPair::new(vec![(1, 1), (1, -1)], vec![]));
        let s0 = crate::weyl_core::simple_reflection(WeylType::A, 2, 0).unwrap();
        assert_eq!(classify(&s0).unwrap(), DPPair::new(vec![(2, 0)], vec![]));
    }

    #[test]
    fn standard_element_examples() {
        let p = DPPair::new(vec![(2, 1)], vec![]);
        let w = standard_element(WeylType::A, &p).unwrap();
        assert_eq!(w.chi().unwrap(), vec![0, 1]);
        assert_eq!(w.perm().images(), &[2, 1]);
        let q = DPPair::new(vec![(4, 0)], vec![]);
        let c = standard_element(WeylType::C, &q).unwrap();
        assert_eq!(c.perm().images(), &[2, 3, 4, 1]);
    }

    #[test]
    fn classify_inverts_standard_element() {
        for ty in WeylType::ALL {
            for n in ty.min_rank()..=4 {
                for p in enumerate_dppairs(ty, n, 3).unwrap() {
                    let w = standard_element(ty, &p).unwrap();
                    assert_eq!(classify(&w).unwrap(), p, "{ty}{n} {p}");
                }
            }
        }
    }

    #[test]
    fn distinguished_examples() {
        assert!(is_distinguished(&DPPair::new(vec![(1, 5), (1, 0)], vec![])));
        assert!(!is_distinguished(&DPPair::new(vec![(2, 0)], vec![])));
        assert!(is_distinguished(&DPPair::new(vec![(3, 2)], vec![(2, 1)])));
    }

    #[test]
    fn d_map_examples() {
        let d = d_map(&DPPair::new(vec![(2, 0)], vec![]));
        assert_eq!(d, DPPair::new(vec![(1, 0), (1, 0)], vec![]));
        let d = d_map(&DPPair::new(vec![(4, 2)], vec![]));
        assert_eq!(d, DPPair::new(vec![(2, 1), (2, 1)], vec![]));
        let p = DPPair::new(vec![(3, 2)], vec![(2, 1)]);
        assert_eq!(d_map(&p), p);
        let q = d_prime_map(&DPPair::new(vec![(2, 2)], vec![(2, 1), (1, 0)]));
        assert_eq!(q, DPPair::new(vec![(1, 1), (1, 1), (1, 0), (1, 0), (1, 0)], vec![]));
    }

    #[test]
    fn json_form() {
        let p = DPPair::new(vec![(3, 2), (1, 0)], vec![(2, 1)]);
        assert_eq!(p.to_json(), r#"{"lambda":[[3,2],[1,0]],"mu":[[2,1]]}"#);
        assert_eq!(DPPair::from_json(&p.to_json()).unwrap(), p);
    }
}
