//! Dimension formulas for affine Deligne–Lusztig varieties, evaluated
//! combinatorially from class polynomials and minimal class lengths.
//!
//! A dimension is `Option<i64>` with `None` standing for `−∞` (empty
//! variety). Nothing geometric is computed here: the base dimensions of the
//! general formula are inputs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conj_classes::{classify, DPPair};
use crate::error::{AwgError, Result};
use crate::hecke::{ClassPolyEngine, ClassPolyTable, SearchOrder};
use crate::newton::{f_invariant, fiber_classes, fiber_min_length, NewtonInv};
use crate::reduction::ClassLengthCache;
use crate::weyl_core::{length, GroupElement, WeylType};

/// Dimension, with `None` meaning `−∞`.
pub type Dim = Option<i64>;

/// Base dimensions `dim X_{w_𝒪}(b)` per class; classes not listed count as
/// `−∞`.
pub type BaseMap = BTreeMap<DPPair, Dim>;

/// One term of a maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimTerm {
    pub class: DPPair,
    pub value: Dim,
}

/// A dimension together with the terms it maximises over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub max: Dim,
    pub argmax: Option<DPPair>,
    pub terms: Vec<DimTerm>,
}

impl DimReport {
    fn from_terms(terms: Vec<DimTerm>) -> Self {
        let mut best: Option<&DimTerm> = None;
        for t in &terms {
            if t.value.is_some() && best.is_none_or(|b| t.value > b.value) {
                best = Some(t);
            }
        }
        DimReport {
            max: best.and_then(|b| b.value),
            argmax: best.map(|b| b.class.clone()),
            terms,
        }
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Parses a base map given as `[{"class":{…},"dim":k|null},…]`.
pub fn base_map_from_json(s: &str) -> Result<BaseMap> {
    #[derive(Deserialize)]
    struct Entry {
        class: DPPair,
        dim: Dim,
    }
    let entries: Vec<Entry> = serde_json::from_str(s)?;
    Ok(entries.into_iter().map(|e| (e.class, e.dim)).collect())
}

fn halve(twice: i64, what: &str) -> Result<i64> {
    if twice % 2 != 0 {
        return Err(AwgError::Precondition(format!("{what} is a half-integer")));
    }
    Ok(twice / 2)
}

/// Caches shared by the dimension formulas: class polynomial tables and
/// minimal class lengths.
pub struct DimContext {
    pub polys: ClassPolyEngine,
    pub lengths: ClassLengthCache,
}

impl Default for DimContext {
    fn default() -> Self {
        DimContext {
            polys: ClassPolyEngine::new(SearchOrder::Canonical),
            lengths: ClassLengthCache::default(),
        }
    }
}

impl DimContext {
    fn table(&self, w: &GroupElement) -> Result<ClassPolyTable> {
        if !w.is_integral() {
            return Err(AwgError::NonIntegral);
        }
        self.polys.table(w)
    }

    /// `max_𝒪 ½(ℓ(w) − ℓ(𝒪) + deg f_{w,𝒪}) + base(𝒪)` over the classes with
    /// `f_{w,𝒪} ≠ 0`.
    pub fn dim_general(&self, w: &GroupElement, base: &BaseMap) -> Result<DimReport> {
        let table = self.table(w)?;
        let lw = length(w) as i64;
        let mut terms = Vec::new();
        for (p, f) in &table.entries {
            let lo = self.lengths.get(w.weyl_type(), p)? as i64;
            let deg = f.degree().expect("stored polynomials are nonzero") as i64;
            let value = match base.get(p).copied().flatten() {
                Some(b) => Some(halve(lw - lo + deg, "dimension term")? + b),
                None => None,
            };
            terms.push(DimTerm { class: p.clone(), value });
        }
        Ok(DimReport::from_terms(terms))
    }

    /// Types A and C: `max_{𝒪 ⊂ f⁻¹(inv)} ½(ℓ(w) + ℓ(𝒪) + deg f_{w,𝒪}) −
    /// ℓ(f⁻¹(inv))`, over the classes of the fiber with `f_{w,𝒪} ≠ 0`.
    pub fn dim_type_ac(&self, w: &GroupElement, inv: &NewtonInv) -> Result<DimReport> {
        let ty = w.weyl_type();
        if !matches!(ty, WeylType::A | WeylType::C) {
            return Err(AwgError::Unsupported(format!("dim_type_ac needs type A or C, not {ty}")));
        }
        let table = self.table(w)?;
        let (lf, _) = fiber_min_length(inv, ty, w.n(), &self.lengths)?;
        let lw = length(w) as i64;
        let mut terms = Vec::new();
        for p in fiber_classes(inv, ty, w.n())? {
            let f = table.get(&p);
            let value = match f.degree() {
                None => None,
                Some(deg) => {
                    let lo = self.lengths.get(ty, &p)? as i64;
                    Some(halve(lw + lo + deg as i64, "dimension term")? - lf as i64)
                }
            };
            terms.push(DimTerm { class: p, value });
        }
        Ok(DimReport::from_terms(terms))
    }

    /// The base map `𝒪 ↦ ℓ(𝒪) − ℓ(f⁻¹(inv))` on the fiber of `inv`, under
    /// which [`dim_general`](Self::dim_general) reduces to
    /// [`dim_type_ac`](Self::dim_type_ac).
    pub fn fiber_base_map(&self, inv: &NewtonInv, ty: WeylType, n: usize) -> Result<BaseMap> {
        let (lf, _) = fiber_min_length(inv, ty, n, &self.lengths)?;
        let mut out = BaseMap::new();
        for p in fiber_classes(inv, ty, n)? {
            let lo = self.lengths.get(ty, &p)?;
            out.insert(p, Some(lo as i64 - lf as i64));
        }
        Ok(out)
    }

    /// `½(ℓ(w) + deg f_{w,𝒪} − ℓ(t^μ))` with `𝒪` the class of `t^μ`, for a
    /// regular coweight `μ` (type A) or a regular element of the coroot
    /// lattice (type C).
    pub fn dim_regular_coweight(&self, w: &GroupElement, mu: &[i64]) -> Result<Dim> {
        let ty = w.weyl_type();
        let t = regular_translation(ty, w.n(), mu)?;
        let class = classify(&t)?;
        let f = self.table(w)?.get(&class);
        match f.degree() {
            None => Ok(None),
            Some(deg) => {
                let v = length(w) as i64 + deg as i64 - length(&t) as i64;
                Ok(Some(halve(v, "dimension")?))
            }
        }
    }
}

/// `t^μ` after checking that `μ` is regular (and in the coroot lattice for
/// type C).
pub fn regular_translation(ty: WeylType, n: usize, mu: &[i64]) -> Result<GroupElement> {
    if mu.len() != n {
        return Err(AwgError::InvalidArgument(format!("μ has {} entries, expected {n}", mu.len())));
    }
    let regular = match ty {
        WeylType::A => (0..n).all(|i| (i + 1..n).all(|j| mu[i] != mu[j])),
        WeylType::C => {
            mu.iter().all(|&x| x != 0)
                && (0..n).all(|i| (i + 1..n).all(|j| mu[i].abs() != mu[j].abs()))
        }
        _ => {
            return Err(AwgError::Unsupported(format!(
                "regular coweight formula needs type A or C, not {ty}"
            )))
        }
    };
    if !regular {
        return Err(AwgError::InvalidArgument(format!("{mu:?} is not regular")));
    }
    GroupElement::translation(ty, mu.iter().map(|x| 2 * x).collect())
}

/// [`DimContext::dim_general`] with fresh caches.
pub fn dim_general(w: &GroupElement, base: &BaseMap) -> Result<DimReport> {
    DimContext::default().dim_general(w, base)
}

/// [`DimContext::dim_type_ac`] with fresh caches.
pub fn dim_type_ac(w: &GroupElement, inv: &NewtonInv) -> Result<DimReport> {
    DimContext::default().dim_type_ac(w, inv)
}

/// [`DimContext::dim_regular_coweight`] with fresh caches.
pub fn dim_regular_coweight(w: &GroupElement, mu: &[i64]) -> Result<Dim> {
    DimContext::default().dim_regular_coweight(w, mu)
}

/// `dim_type_ac(t^μ, f(t^μ))` for a regular coweight.
pub fn dim_at_regular_translation(ty: WeylType, n: usize, mu: &[i64]) -> Result<Dim> {
    let t = regular_translation(ty, n, mu)?;
    Ok(dim_type_ac(&t, &f_invariant(&t))?.max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::Rational;
    use crate::weyl_core::simple_reflection;

    fn s1s0s1() -> GroupElement {
        let s = |i| simple_reflection(WeylType::A, 2, i).unwrap();
        s(1).mul(&s(0)).mul(&s(1))
    }

    #[test]
    fn general_formula_examples() {
        let w = s1s0s1();
        let split = DPPair::new(vec![(1, 1), (1, -1)], vec![]);
        let base: BaseMap = [(split.clone(), Some(0))].into_iter().collect();
        let r = dim_general(&w, &base).unwrap();
        assert_eq!(r.max, Some(1));
        assert_eq!(r.argmax, Some(split));
        assert_eq!(dim_general(&w, &BaseMap::new()).unwrap().max, None);

        let s0 = simple_reflection(WeylType::C, 2, 0).unwrap();
        let base: BaseMap = [(classify(&s0).unwrap(), Some(0))].into_iter().collect();
        assert_eq!(dim_general(&s0, &base).unwrap().max, Some(0));
    }

    #[test]
    fn type_a_examples() {
        let w = s1s0s1();
        let basic = NewtonInv { point: vec![Rational::from_integer(0); 2], eta: 0 };
        assert_eq!(dim_type_ac(&w, &basic).unwrap().max, Some(2));
        let t = GroupElement::from_integral(WeylType::A, &[1, -1], &[1, 2]).unwrap();
        assert_eq!(dim_type_ac(&w, &f_invariant(&t)).unwrap().max, Some(1));
    }

    #[test]
    fn regular_translations_have_dimension_zero() {
        assert_eq!(dim_at_regular_translation(WeylType::A, 2, &[2, -1]).unwrap(), Some(0));
        assert_eq!(dim_at_regular_translation(WeylType::C, 2, &[2, 1]).unwrap(), Some(0));
        assert_eq!(dim_regular_coweight(&s1s0s1(), &[1, -1]).unwrap(), Some(1));
        assert!(regular_translation(WeylType::A, 2, &[1, 1]).is_err());
        assert!(regular_translation(WeylType::C, 2, &[1, -1]).is_err());
    }

    #[test]
    fn general_matches_type_ac_under_fiber_base_map() {
        let ctx = DimContext::default();
        let w = s1s0s1();
        let basic = NewtonInv { point: vec![Rational::from_integer(0); 2], eta: 0 };
        let base = ctx.fiber_base_map(&basic, WeylType::A, 2).unwrap();
        assert_eq!(ctx.dim_general(&w, &base).unwrap().max, ctx.dim_type_ac(&w, &basic).unwrap().max);
    }
}
