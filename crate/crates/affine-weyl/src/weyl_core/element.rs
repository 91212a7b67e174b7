//! Elements `t^χ σ` of the extended affine Weyl group.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::SignedPerm;
use crate::error::{AwgError, Result};

/// Classical type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WeylType {
    A,
    B,
    C,
    D,
}

impl WeylType {
    /// All four types.
    pub const ALL: [WeylType; 4] = [WeylType::A, WeylType::B, WeylType::C, WeylType::D];

    /// The letter of the type.
    pub fn letter(self) -> char {
        match self {
            WeylType::A => 'A',
            WeylType::B => 'B',
            WeylType::C => 'C',
            WeylType::D => 'D',
        }
    }

    /// Smallest supported rank.
    pub fn min_rank(self) -> usize {
        match self {
            WeylType::D => 3,
            _ => 2,
        }
    }

    /// Checks that `n` is a supported rank.
    pub fn check_rank(self, n: usize) -> Result<()> {
        if n < self.min_rank() || n > 64 {
            Err(AwgError::InvalidRank { ty: self.letter(), n })
        } else {
            Ok(())
        }
    }

    /// Whether the finite Weyl group uses sign changes.
    pub fn is_signed(self) -> bool {
        self != WeylType::A
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for WeylType {
    type Err = AwgError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(WeylType::A),
            "B" | "b" => Ok(WeylType::B),
            "C" | "c" => Ok(WeylType::C),
            "D" | "d" => Ok(WeylType::D),
            other => Err(AwgError::InvalidArgument(format!("unknown type {other:?}"))),
        }
    }
}

/// An element `t^χ σ` with `χ` stored doubled (`trans2 = 2χ`).
///
/// The derived order compares `(type, n, trans2, perm)` lexicographically and
/// is the canonical order used to break ties everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub struct GroupElement {
    ty: WeylType,
    n: usize,
    trans2: Vec<i64>,
    perm: SignedPerm,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    #[serde(rename = "type")]
    ty: WeylType,
    n: usize,
    trans2: Vec<i64>,
    perm: Vec<i32>,
}

impl TryFrom<ElementRepr> for GroupElement {
    type Error = AwgError;

    fn try_from(r: ElementRepr) -> Result<Self> {
        if r.trans2.len() != r.n || r.perm.len() != r.n {
            return Err(AwgError::InvalidArgument(format!(
                "trans2 and perm must have length n = {}",
                r.n
            )));
        }
        GroupElement::new(r.ty, r.trans2, SignedPerm::new(r.perm)?)
    }
}

impl From<GroupElement> for ElementRepr {
    fn from(g: GroupElement) -> Self {
        ElementRepr {
            ty: g.ty,
            n: g.n,
            trans2: g.trans2,
            perm: g.perm.images().to_vec(),
        }
    }
}

impl GroupElement {
    /// Builds `t^{trans2/2} σ`, validating rank, permutation and lattice.
    ///
    /// Lattices: type A and B need even `trans2`; types C and D need all
    /// entries of the same parity. Type A forbids sign changes.
    pub fn new(ty: WeylType, trans2: Vec<i64>, perm: SignedPerm) -> Result<Self> {
        let n = trans2.len();
        ty.check_rank(n)?;
        if perm.n() != n {
            return Err(AwgError::InvalidArgument("perm and trans2 lengths differ".into()));
        }
        if ty == WeylType::A && !perm.is_unsigned() {
            return Err(AwgError::InvalidArgument(
                "type A permutations carry no signs".into(),
            ));
        }
        let lattice_ok = match ty {
            WeylType::A | WeylType::B => trans2.iter().all(|x| x % 2 == 0),
            WeylType::C | WeylType::D => {
                let p = trans2[0].rem_euclid(2);
                trans2.iter().all(|x| x.rem_euclid(2) == p)
            }
        };
        if !lattice_ok {
            return Err(AwgError::InvalidArgument(format!(
                "translation {trans2:?} (doubled) is not in the coweight lattice of type {ty}"
            )));
        }
        Ok(GroupElement { ty, n, trans2, perm })
    }

    pub(crate) fn from_parts_unchecked(ty: WeylType, trans2: Vec<i64>, perm: SignedPerm) -> Self {
        GroupElement {
            ty,
            n: trans2.len(),
            trans2,
            perm,
        }
    }

    /// Builds an element from an integral translation `χ` and images of `σ`.
    pub fn from_integral(ty: WeylType, chi: &[i64], images: &[i32]) -> Result<Self> {
        Self::new(
            ty,
            chi.iter().map(|x| 2 * x).collect(),
            SignedPerm::new(images.to_vec())?,
        )
    }

    /// The identity.
    pub fn identity(ty: WeylType, n: usize) -> Result<Self> {
        ty.check_rank(n)?;
        Ok(Self::from_parts_unchecked(ty, vec![0; n], SignedPerm::identity(n)))
    }

    /// The pure translation `t^{trans2/2}`.
    pub fn translation(ty: WeylType, trans2: Vec<i64>) -> Result<Self> {
        let n = trans2.len();
        Self::new(ty, trans2, SignedPerm::identity(n))
    }

    /// The finite Weyl group element `σ` (no translation).
    pub fn finite(ty: WeylType, perm: SignedPerm) -> Result<Self> {
        Self::new(ty, vec![0; perm.n()], perm)
    }

    /// Type.
    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    /// Rank.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The doubled translation `2χ`.
    pub fn trans2(&self) -> &[i64] {
        &self.trans2
    }

    /// The finite part `σ`.
    pub fn perm(&self) -> &SignedPerm {
        &self.perm
    }

    /// Whether `χ` lies in `ℤⁿ`.
    pub fn is_integral(&self) -> bool {
        self.trans2.iter().all(|x| x % 2 == 0)
    }

    /// The integral translation `χ`, if any.
    pub fn chi(&self) -> Result<Vec<i64>> {
        if self.is_integral() {
            Ok(self.trans2.iter().map(|x| x / 2).collect())
        } else {
            Err(AwgError::NonIntegral)
        }
    }

    /// Same element with a different type tag, validated for that type.
    pub fn retag(&self, ty: WeylType) -> Result<Self> {
        Self::new(ty, self.trans2.clone(), self.perm.clone())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ty != other.ty || self.n != other.n {
            return Err(AwgError::TypeMismatch(format!(
                "{}{} vs {}{}",
                self.ty, self.n, other.ty, other.n
            )));
        }
        Ok(())
    }

    /// The product `self · other`, checking types.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// The product `t^χσ · t^χ'σ' = t^{χ+σχ'} σσ'`.
    ///
    /// Panics in debug builds when types differ; use [`Self::try_mul`] for
    /// untrusted input.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.ty == other.ty && self.n == other.n);
        let moved = self.perm.act(&other.trans2);
        GroupElement {
            ty: self.ty,
            n: self.n,
            trans2: self.trans2.iter().zip(moved).map(|(a, b)| a + b).collect(),
            perm: self.perm.compose(&other.perm),
        }
    }

    /// The inverse `t^{-σ⁻¹χ} σ⁻¹`.
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let t = inv.act(&self.trans2);
        GroupElement {
            ty: self.ty,
            n: self.n,
            trans2: t.into_iter().map(|x| -x).collect(),
            perm: inv,
        }
    }

    /// `x · self · x⁻¹`.
    pub fn conj_by(&self, x: &Self) -> Self {
        x.mul(self).mul(&x.inverse())
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_parts_unchecked(self.ty, vec![0; self.n], SignedPerm::identity(self.n));
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.trans2.iter().all(|&x| x == 0) && self.perm.is_identity()
    }

    /// Compact JSON encoding.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serializes")
    }

    /// Parses the JSON encoding.
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chi: Vec<String> = self
            .trans2
            .iter()
            .map(|&x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") })
            .collect();
        write!(
            f,
            "{}{}: t^({}) {:?}",
            self.ty,
            self.n,
            chi.join(","),
            self.perm.images()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_validation() {
        let p = SignedPerm::identity(2);
        assert!(GroupElement::new(WeylType::A, vec![1, 1], p.clone()).is_err());
        assert!(GroupElement::new(WeylType::B, vec![1, 1], p.clone()).is_err());
        assert!(GroupElement::new(WeylType::C, vec![1, 1], p.clone()).is_ok());
        assert!(GroupElement::new(WeylType::C, vec![1, 2], p.clone()).is_err());
        assert!(GroupElement::new(WeylType::D, vec![1, 1, 1], SignedPerm::identity(3)).is_ok());
        assert!(GroupElement::new(WeylType::D, vec![0, 0], p).is_err());
        let signed = SignedPerm::new(vec![-1, 2]).unwrap();
        assert!(GroupElement::new(WeylType::A, vec![0, 0], signed).is_err());
    }

    #[test]
    fn product_and_inverse() {
        let x = GroupElement::from_integral(WeylType::C, &[1, 0], &[2, -1]).unwrap();
        let y = GroupElement::from_integral(WeylType::C, &[0, 3], &[-1, 2]).unwrap();
        let xy = x.mul(&y);
        // χ + σχ' with σ e_2 = -e_1: (1,0) + (-3,0)
        assert_eq!(xy.trans2(), &[-4, 0]);
        assert!(x.mul(&x.inverse()).is_identity());
        assert_eq!(xy.inverse(), y.inverse().mul(&x.inverse()));
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let x = GroupElement::from_integral(WeylType::C, &[1, 0, -1], &[2, -3, 1]).unwrap();
        let s = x.to_json();
        assert_eq!(s, r#"{"type":"C","n":3,"trans2":[2,0,-2],"perm":[2,-3,1]}"#);
        assert_eq!(GroupElement::from_json(&s).unwrap(), x);
        assert!(GroupElement::from_json(r#"{"type":"B","n":2,"trans2":[1,1],"perm":[1,2]}"#).is_err());
        assert!(GroupElement::from_json(r#"{"type":"D","n":2,"trans2":[0,0],"perm":[1,2]}"#).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = GroupElement::from_integral(WeylType::B, &[1, -2], &[-2, 1]).unwrap();
        let mut acc = GroupElement::identity(WeylType::B, 2).unwrap();
        for k in 0..7 {
            assert_eq!(x.pow(k), acc);
            acc = acc.mul(&x);
        }
    }
}
