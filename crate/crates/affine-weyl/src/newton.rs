//! Newton points, the invariant map `f = (v, η)`, good elements, fibers of
//! `f` over class labels, and the partial order `⪯` on its image.
//!
//! All arithmetic is exact: Newton points are vectors of `Ratio<i64>`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::conj_classes::{d_map, d_prime_map, standard_element, DPPair};
use crate::error::{AwgError, Result};
use crate::exec::Exec;
use crate::reduction::{reduce_to_minimal, same_length_component, ClassLengthCache};
use crate::weyl_core::{bruhat_leq, coset_tag, length, two_rho, GroupElement, WeylType};

/// Exact rational number used for Newton points.
pub type Rational = Ratio<i64>;

/// The value `f(w) = (v_w, η(w))` of the Newton map: a dominant rational
/// vector and a tag for the image of `w` in `W̃/W_a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NewtonInv {
    pub point: Vec<Rational>,
    pub eta: i64,
}

#[derive(Serialize, Deserialize)]
struct NewtonRepr {
    point: Vec<[String; 2]>,
    eta: i64,
}

impl Serialize for NewtonInv {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        NewtonRepr {
            point: self
                .point
                .iter()
                .map(|r| [r.numer().to_string(), r.denom().to_string()])
                .collect(),
            eta: self.eta,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for NewtonInv {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = NewtonRepr::deserialize(de)?;
        let mut point = Vec::with_capacity(repr.point.len());
        for [a, b] in repr.point {
            let num: i64 = a.parse().map_err(D::Error::custom)?;
            let den: i64 = b.parse().map_err(D::Error::custom)?;
            if den == 0 {
                return Err(D::Error::custom("zero denominator"));
            }
            point.push(Rational::new(num, den));
        }
        Ok(NewtonInv { point, eta: repr.eta })
    }
}

impl NewtonInv {
    /// Compact JSON, e.g. `{"point":[["1","2"],["1","2"]],"eta":1}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("invariant serializes")
    }

    /// Parses the JSON form.
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Display for NewtonInv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.point.iter().map(|r| r.to_string()).collect();
        write!(f, "(({}), {})", parts.join(","), self.eta)
    }
}

/// Dominant representative of `v` under the finite Weyl group, up to the
/// length-zero automorphisms of the extended group.
///
/// Type A sorts decreasingly. Types B, C and D take absolute values and
/// sort decreasingly; in type D the sign of the last entry is not an
/// invariant of the extended group, since conjugation by `ι` flips it.
pub fn dominant(ty: WeylType, mut v: Vec<Rational>) -> Vec<Rational> {
    if ty != WeylType::A {
        for x in v.iter_mut() {
            if *x.numer() < 0 {
                *x = -*x;
            }
        }
    }
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Newton point computed from a given exponent `k` with `w^k` a
/// translation.
pub fn newton_point_with(w: &GroupElement, k: u64) -> Result<Vec<Rational>> {
    if k == 0 {
        return Err(AwgError::InvalidArgument("exponent must be positive".into()));
    }
    let p = w.pow(k);
    if !p.perm().is_identity() {
        return Err(AwgError::Precondition(format!("w^{k} is not a translation")));
    }
    let den = 2 * k as i64;
    let v = p.trans2().iter().map(|&t| Rational::new(t, den)).collect();
    Ok(dominant(w.weyl_type(), v))
}

/// Newton point `v_w`: the dominant representative of `χ/k` where `k` is
/// the order of the finite part and `w^k = t^χ`.
pub fn newton_point(w: &GroupElement) -> Vec<Rational> {
    newton_point_with(w, w.perm().order()).expect("order of the finite part kills it")
}

/// Conjugation-invariant tag of the image of `w` in `W̃/W_a`.
///
/// Type A: translation sum mod `n`. Type B: translation sum mod 2. Type C:
/// 0 for integral and 1 for half-integral elements. Type D: 0 and 1 for
/// integral elements with an even number of sign changes (translation sum
/// mod 2), 2 for half-integral ones, 4 and 6 for integral and
/// half-integral elements with an odd number of sign changes. The length-zero
/// group of type D is not abelian, so the finer coset label is not a class
/// invariant and the classes merged here are exactly the conjugation orbits
/// of cosets.
pub fn eta(w: &GroupElement) -> i64 {
    let tag = coset_tag(w);
    match w.weyl_type() {
        WeylType::A => tag.rem_euclid(w.n() as i64),
        WeylType::B | WeylType::C => tag,
        WeylType::D => match tag {
            0 | 1 => tag,
            2 | 3 => 2,
            4 | 5 => 4,
            _ => 6,
        },
    }
}

/// The invariant `f(w) = (v_w, η(w))`.
pub fn f_invariant(w: &GroupElement) -> NewtonInv {
    NewtonInv {
        point: newton_point(w),
        eta: eta(w),
    }
}

/// `⟨v, 2ρ⟩` for a dominant vector `v`.
pub fn pairing_two_rho(ty: WeylType, v: &[Rational]) -> Rational {
    let rho2 = two_rho(ty, v.len());
    v.iter()
        .zip(rho2)
        .map(|(x, r)| x * Rational::from_integer(r))
        .sum()
}

/// Whether `w` is good, i.e. `ℓ(w) = ⟨v_w, 2ρ⟩`.
pub fn is_good(w: &GroupElement) -> bool {
    let v = newton_point(w);
    pairing_two_rho(w.weyl_type(), &v) == Rational::from_integer(length(w) as i64)
}

/// Whether `ℓ(w^k) = k·ℓ(w)` for `k = 1, …, kmax`.
pub fn is_good_by_powers(w: &GroupElement, kmax: u64) -> bool {
    let l = length(w);
    let mut p = w.clone();
    for k in 1..=kmax {
        if length(&p) != k * l {
            return false;
        }
        p = p.mul(w);
    }
    true
}

fn check_ac(ty: WeylType) -> Result<()> {
    match ty {
        WeylType::A | WeylType::C => Ok(()),
        _ => Err(AwgError::Unsupported(format!("fibers are only defined for types A and C, not {ty}"))),
    }
}

/// The distinguished label `(λ̃, Ø)` whose classes make up the fiber over
/// `inv`: each value `c/b` (in lowest terms) of multiplicity `m` in the
/// point gives `m/b` entries `(b, c)`.
fn fiber_target(inv: &NewtonInv, ty: WeylType, n: usize) -> Result<DPPair> {
    check_ac(ty)?;
    ty.check_rank(n)?;
    if inv.point.len() != n {
        return Err(AwgError::InvalidArgument(format!(
            "Newton point has {} entries, expected {n}",
            inv.point.len()
        )));
    }
    if dominant(ty, inv.point.clone()) != inv.point {
        return Err(AwgError::InvalidArgument(format!("Newton point {inv} is not dominant")));
    }
    let mut lambda = Vec::new();
    let mut i = 0;
    while i < n {
        let r = inv.point[i];
        let m = inv.point[i..].iter().take_while(|&&x| x == r).count();
        let (c, b) = (*r.numer(), *r.denom());
        if m as i64 % b != 0 {
            return Err(AwgError::Precondition(format!("empty fiber: {inv} is not in the image")));
        }
        lambda.extend(std::iter::repeat_n((b, c), m / b as usize));
        i += m;
    }
    let target = DPPair::new(lambda, vec![]);
    let expect_eta = match ty {
        WeylType::A => target.lambda.iter().map(|e| e.1).sum::<i64>().rem_euclid(n as i64),
        _ => 0,
    };
    if inv.eta != expect_eta {
        return Err(AwgError::Precondition(format!("empty fiber: {inv} is not in the image")));
    }
    Ok(target)
}

#[derive(Clone, Copy)]
struct Cand {
    mu: bool,
    b: i64,
    c: i64,
}

fn tagged_multisets(cands: &[Cand], rest: i64, from: usize, cur: &mut Vec<Cand>, out: &mut Vec<DPPair>) {
    if rest == 0 {
        let lambda = cur.iter().filter(|e| !e.mu).map(|e| (e.b, e.c)).collect();
        let mu = cur.iter().filter(|e| e.mu).map(|e| (e.b, e.c)).collect();
        out.push(DPPair::new(lambda, mu));
        return;
    }
    for k in from..cands.len() {
        if cands[k].b <= rest {
            cur.push(cands[k]);
            tagged_multisets(cands, rest - cands[k].b, k, cur, out);
            cur.pop();
        }
    }
}

/// The class labels of integral elements in the fiber `f⁻¹(inv)`, types A
/// and C, sorted.
///
/// These are the pairs `p` with `d(p)` (type A) or `d′(p)` (type C) equal to
/// the distinguished pair read off from `inv`. Candidates are built only
/// from entries whose ratio `c/b` occurs in the point, which keeps the
/// enumeration finite.
pub fn fiber_classes(inv: &NewtonInv, ty: WeylType, n: usize) -> Result<Vec<DPPair>> {
    let target = fiber_target(inv, ty, n)?;
    let ratios: BTreeSet<(i64, i64)> = target.lambda.iter().copied().collect();
    let mut cands = Vec::new();
    for &(b0, c0) in &ratios {
        let mut g = 1;
        while g * b0 <= n as i64 {
            cands.push(Cand { mu: false, b: g * b0, c: g * c0 });
            g += 1;
        }
    }
    if ty == WeylType::C && ratios.contains(&(1, 0)) {
        for b in 1..=n as i64 {
            for c in 0..=1 {
                cands.push(Cand { mu: true, b, c });
            }
        }
    }
    let mut raw = Vec::new();
    tagged_multisets(&cands, n as i64, 0, &mut Vec::new(), &mut raw);
    let reduce = |p: &DPPair| if ty == WeylType::A { d_map(p) } else { d_prime_map(p) };
    let out: BTreeSet<DPPair> = raw
        .into_iter()
        .map(|p| p.canonical(ty))
        .filter(|p| p.validate(ty, n).is_ok() && reduce(p) == target)
        .collect();
    if out.is_empty() {
        return Err(AwgError::Precondition(format!("empty fiber over {inv}")));
    }
    Ok(out.into_iter().collect())
}

/// Minimal length `ℓ(f⁻¹(inv))` over the fiber, with the labels of the
/// classes attaining it.
pub fn fiber_min_length(
    inv: &NewtonInv,
    ty: WeylType,
    n: usize,
    lengths: &ClassLengthCache,
) -> Result<(u64, Vec<DPPair>)> {
    let classes = fiber_classes(inv, ty, n)?;
    let mut ls = Vec::with_capacity(classes.len());
    for p in &classes {
        ls.push(lengths.get(ty, p)?);
    }
    let lmin = *ls.iter().min().expect("fiber is nonempty");
    let attaining = classes
        .into_iter()
        .zip(ls)
        .filter(|&(_, l)| l == lmin)
        .map(|(p, _)| p)
        .collect();
    Ok((lmin, attaining))
}

/// The minimal length elements of the fiber `f⁻¹(inv)`.
///
/// Each class attaining the minimal length is reduced from its standard
/// element and closed under length-preserving simple and length-zero
/// conjugations.
pub fn fiber_min_elements(
    inv: &NewtonInv,
    ty: WeylType,
    n: usize,
    lengths: &ClassLengthCache,
    exec: Exec,
) -> Result<Vec<GroupElement>> {
    let (_, classes) = fiber_min_length(inv, ty, n, lengths)?;
    let mut out = BTreeSet::new();
    for p in &classes {
        let (x, _) = reduce_to_minimal(&standard_element(ty, p)?)?;
        out.extend(same_length_component(&x, true, exec)?.nodes);
    }
    Ok(out.into_iter().collect())
}

/// Bruhat comparison in which type A elements are compared modulo central
/// translations `t^{(c,…,c)}`.
fn leq_mod_center(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    if x.weyl_type() != WeylType::A {
        return bruhat_leq(x, y);
    }
    let n = x.n() as i64;
    let sx: i64 = x.trans2().iter().sum::<i64>() / 2;
    let sy: i64 = y.trans2().iter().sum::<i64>() / 2;
    if (sy - sx) % n != 0 {
        return Ok(false);
    }
    let c = (sy - sx) / n;
    let shift = GroupElement::translation(WeylType::A, vec![2 * c; x.n()])?;
    bruhat_leq(&shift.mul(x), y)
}

/// `a ⪯ b`: some minimal length element of `f⁻¹(b)` lies above some minimal
/// length element of `f⁻¹(a)` in the Bruhat order (types A and C).
pub fn preceq(
    a: &NewtonInv,
    b: &NewtonInv,
    ty: WeylType,
    n: usize,
    lengths: &ClassLengthCache,
) -> Result<bool> {
    check_ac(ty)?;
    let lower = fiber_min_elements(a, ty, n, lengths, Exec::Sequential)?;
    let upper = fiber_min_elements(b, ty, n, lengths, Exec::Sequential)?;
    for y in &upper {
        for x in &lower {
            if length(x) <= length(y) && leq_mod_center(x, y)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conj_classes::classify;
    use crate::weyl_core::{minuscule_omega, simple_reflection, SignedPerm};

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn newton_point_examples() {
        let t = GroupElement::from_integral(WeylType::A, &[-1, 3], &[1, 2]).unwrap();
        assert_eq!(newton_point(&t), vec![r(3, 1), r(-1, 1)]);
        let w = GroupElement::from_integral(WeylType::A, &[1, 0], &[2, 1]).unwrap();
        assert_eq!(newton_point(&w), vec![r(1, 2), r(1, 2)]);
        assert_eq!(newton_point_with(&w, 4).unwrap(), newton_point(&w));
        let id = GroupElement::identity(WeylType::C, 3).unwrap();
        assert_eq!(f_invariant(&id), NewtonInv { point: vec![r(0, 1); 3], eta: 0 });
    }

    #[test]
    fn superbasic_invariant() {
        for (n, rr) in [(3usize, 1i64), (3, 2), (4, 1), (5, 3)] {
            let gamma2 = (0..n).map(|i| if (i as i64) < rr { 2 } else { 0 }).collect();
            let tau = minuscule_omega(WeylType::A, n, gamma2).unwrap();
            let inv = f_invariant(&tau);
            assert_eq!(inv.point, vec![r(rr, n as i64); n]);
            assert_eq!(inv.eta, rr);
            assert_eq!(fiber_classes(&inv, WeylType::A, n).unwrap().len(), 1);
        }
    }

    #[test]
    fn good_examples() {
        let s = |i| simple_reflection(WeylType::A, 2, i).unwrap();
        let w = s(1).mul(&s(0)).mul(&s(1));
        assert!(!is_good(&w));
        assert!(!is_good_by_powers(&w, 12));
        let t = GroupElement::from_integral(WeylType::C, &[3, 1], &[1, 2]).unwrap();
        assert!(is_good(&t));
        let cox = s(0).mul(&s(1));
        assert!(is_good(&cox));
    }

    #[test]
    fn basic_fiber_type_a() {
        let inv = NewtonInv { point: vec![r(0, 1); 2], eta: 0 };
        let f = fiber_classes(&inv, WeylType::A, 2).unwrap();
        assert_eq!(
            f,
            vec![DPPair::new(vec![(1, 0), (1, 0)], vec![]), DPPair::new(vec![(2, 0)], vec![])]
        );
        let bad = NewtonInv { point: vec![r(1, 2), r(0, 1)], eta: 0 };
        assert!(fiber_classes(&bad, WeylType::A, 2).is_err());
        let wrong_eta = NewtonInv { point: vec![r(0, 1); 2], eta: 1 };
        assert!(fiber_classes(&wrong_eta, WeylType::A, 2).is_err());
    }

    #[test]
    fn fiber_members_have_the_invariant() {
        for ty in [WeylType::A, WeylType::C] {
            for p in crate::conj_classes::enumerate_dppairs(ty, 3, 2).unwrap() {
                let x = standard_element(ty, &p).unwrap();
                let inv = f_invariant(&x);
                let fiber = fiber_classes(&inv, ty, 3).unwrap();
                assert!(fiber.contains(&classify(&x).unwrap()), "{p} in fiber of {inv}");
                for q in fiber {
                    assert_eq!(f_invariant(&standard_element(ty, &q).unwrap()), inv);
                }
            }
        }
    }

    #[test]
    fn eta_type_d_is_class_invariant() {
        let w = GroupElement::new(WeylType::D, vec![1, 1, 1], SignedPerm::new(vec![2, 1, -3]).unwrap()).unwrap();
        for (_, g) in crate::weyl_core::omega_generators(WeylType::D, 3).unwrap() {
            assert_eq!(eta(&w.conj_by(&g)), eta(&w));
        }
    }

    #[test]
    fn preceq_basic_below() {
        let lengths = ClassLengthCache::default();
        let basic = NewtonInv { point: vec![r(0, 1); 2], eta: 0 };
        let t = NewtonInv { point: vec![r(1, 1), r(-1, 1)], eta: 0 };
        assert!(preceq(&basic, &basic, WeylType::A, 2, &lengths).unwrap());
        assert!(preceq(&basic, &t, WeylType::A, 2, &lengths).unwrap());
        assert!(!preceq(&t, &basic, WeylType::A, 2, &lengths).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let inv = NewtonInv { point: vec![r(1, 2), r(1, 2)], eta: 1 };
        let s = inv.to_json();
        assert_eq!(s, r#"{"point":[["1","2"],["1","2"]],"eta":1}"#);
        assert_eq!(NewtonInv::from_json(&s).unwrap(), inv);
    }
}
