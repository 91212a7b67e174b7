//! A window of the Iwahori-Hecke algebra on the basis `T_w`.

use std::collections::BTreeMap;

use super::poly::LaurentPoly;
use crate::error::Result;
use crate::weyl_core::{length, reduced_word, simple_reflection, GroupElement};

/// A finite linear combination `Σ h_w T_w` with coefficients in `ℤ[v, v⁻¹]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<GroupElement, LaurentPoly>,
}

fn xi() -> LaurentPoly {
    LaurentPoly::monomial(1, 1).sub(&LaurentPoly::monomial(-1, 1))
}

impl HeckeElement {
    /// `T_w`.
    pub fn basis(w: &GroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentPoly::monomial(0, 1));
        HeckeElement { terms }
    }

    /// Zero.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Whether all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_zero)
    }

    fn add_term(&mut self, w: GroupElement, c: LaurentPoly) {
        let e = self.terms.entry(w).or_insert_with(LaurentPoly::zero);
        *e = e.add(&c);
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// Sum.
    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.mul(c));
        }
        out
    }

    /// `T_{s_i} · self`, using `T_s T_w = T_{sw}` when `ℓ(sw) > ℓ(w)` and
    /// `T_s T_w = ξ T_w + T_{sw}` otherwise.
    pub fn left_mul_simple(&self, i: usize) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let s = simple_reflection(w.weyl_type(), w.n(), i)?;
            let sw = s.mul(w);
            if length(&sw) > length(w) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.clone());
                out.add_term(w.clone(), c.mul(&xi()));
            }
        }
        Ok(out)
    }

    /// `T_τ · self` for a length-zero `τ`.
    pub fn left_mul_length_zero(&self, tau: &GroupElement) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(tau.mul(w), c.clone());
        }
        out
    }

    /// `T_x · self`, expanding `T_x = T_τ T_{s_{i_1}} ⋯ T_{s_{i_k}}`.
    pub fn left_mul_basis(&self, x: &GroupElement) -> Result<Self> {
        let (word, tau) = reduced_word(x);
        let mut out = self.clone();
        for &i in word.iter().rev() {
            out = out.left_mul_simple(i)?;
        }
        Ok(out.left_mul_length_zero(&tau))
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out = out.add(&other.left_mul_basis(x)?.scale(c));
        }
        Ok(out)
    }

    /// The coefficient of `T_w`.
    pub fn coeff(&self, w: &GroupElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }
}

/// Checks `(T_s − v)(T_s + v⁻¹) T_w = 0`, `T_s T_s T_w = T_w + ξ T_s T_w`
/// and `(T_s − ξ) T_s T_w = T_w` for `s = s_i` and every sample `w`.
pub fn hecke_check_quadratic(i: usize, samples: &[GroupElement]) -> Result<bool> {
    for w in samples {
        let h = HeckeElement::basis(w);
        let sh = h.left_mul_simple(i)?;
        let ssh = sh.left_mul_simple(i)?;
        // (T_s − v)(T_s + v⁻¹) = T_s² − ξ T_s − 1
        let quad = ssh
            .add(&sh.scale(&xi().scale(-1)))
            .add(&h.scale(&LaurentPoly::monomial(0, -1)));
        if !quad.is_zero() {
            return Ok(false);
        }
        let inv = ssh.add(&sh.scale(&xi().scale(-1)));
        if inv != h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `T_x T_y = T_{xy}` whenever `ℓ(xy) = ℓ(x) + ℓ(y)` on the given
/// pairs; pairs without additive length are skipped.
pub fn hecke_check_products(pairs: &[(GroupElement, GroupElement)]) -> Result<bool> {
    for (x, y) in pairs {
        let xy = x.mul(y);
        if length(&xy) != length(x) + length(y) {
            continue;
        }
        let prod = HeckeElement::basis(x).mul(&HeckeElement::basis(y))?;
        if prod != HeckeElement::basis(&xy) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{simple_reflection, WeylType};

    #[test]
    fn ts_squared() {
        let e = GroupElement::identity(WeylType::A, 3).unwrap();
        let s1 = simple_reflection(WeylType::A, 3, 1).unwrap();
        let h = HeckeElement::basis(&e).left_mul_simple(1).unwrap().left_mul_simple(1).unwrap();
        assert_eq!(h.coeff(&e), LaurentPoly::monomial(0, 1));
        assert_eq!(h.coeff(&s1), xi());
        assert!(hecke_check_quadratic(0, &[e.clone(), s1.clone()]).unwrap());
    }

    #[test]
    fn associativity_on_small_elements() {
        let s = |i| simple_reflection(WeylType::C, 2, i).unwrap();
        let a = HeckeElement::basis(&s(0).mul(&s(1)));
        let b = HeckeElement::basis(&s(1).mul(&s(2)));
        let c = HeckeElement::basis(&s(1));
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
