//! Moves, conjugator tables and reduction paths.

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{AwgError, Result};
use crate::weyl_core::{length, omega_conjugators, simple_reflections, GroupElement, WeylType};

/// A conjugation move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// `w ↦ s_i w s_i`.
    Simple(usize),
    /// `w ↦ τ w τ⁻¹` for the `k`-th length-zero conjugator.
    Omega(usize),
}

/// The simple reflections and length-zero conjugators of a group, in
/// canonical move order.
#[derive(Clone, Debug)]
pub struct Conjugators {
    pub ty: WeylType,
    pub n: usize,
    simple: Vec<GroupElement>,
    omega: Vec<(String, GroupElement, GroupElement)>,
}

impl Conjugators {
    /// Builds the table for a type and rank.
    pub fn new(ty: WeylType, n: usize) -> Result<Self> {
        let simple = simple_reflections(ty, n)?;
        let omega = omega_conjugators(ty, n)?
            .into_iter()
            .map(|(name, t)| {
                let inv = t.inverse();
                (name, t, inv)
            })
            .collect();
        Ok(Conjugators { ty, n, simple, omega })
    }

    /// Builds the table for the group of `w`.
    pub fn for_element(w: &GroupElement) -> Self {
        Self::new(w.weyl_type(), w.n()).expect("element has a valid rank")
    }

    /// The simple reflections.
    pub fn simple(&self) -> &[GroupElement] {
        &self.simple
    }

    /// Moves in canonical order, with or without length-zero conjugations.
    pub fn moves(&self, with_omega: bool) -> Vec<Move> {
        let mut v: Vec<Move> = (0..self.simple.len()).map(Move::Simple).collect();
        if with_omega {
            v.extend((0..self.omega.len()).map(Move::Omega));
        }
        v
    }

    /// Applies a move.
    pub fn apply(&self, mv: Move, w: &GroupElement) -> GroupElement {
        match mv {
            Move::Simple(i) => {
                let s = &self.simple[i];
                s.mul(w).mul(s)
            }
            Move::Omega(k) => {
                let (_, t, ti) = &self.omega[k];
                t.mul(w).mul(ti)
            }
        }
    }

    /// Name of the `k`-th length-zero conjugator.
    pub fn omega_name(&self, k: usize) -> &str {
        &self.omega[k].0
    }

    /// Index of a length-zero conjugator by name.
    pub fn omega_index(&self, name: &str) -> Result<usize> {
        self.omega
            .iter()
            .position(|(n, _, _)| n == name)
            .ok_or_else(|| AwgError::InvalidArgument(format!("unknown length-zero element {name}")))
    }
}

/// One step of a reduction path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub mv: Move,
    /// Name of the length-zero conjugator for [`Move::Omega`].
    pub omega_name: Option<String>,
    pub len_before: u64,
    pub len_after: u64,
}

impl Step {
    /// `len_after − len_before`.
    pub fn delta(&self) -> i64 {
        self.len_after as i64 - self.len_before as i64
    }
}

impl Serialize for Step {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(Some(2))?;
        match self.mv {
            Move::Simple(i) => m.serialize_entry("s", &i)?,
            Move::Omega(_) => m.serialize_entry("omega", self.omega_name.as_deref().unwrap_or(""))?,
        }
        m.serialize_entry("dl", &self.delta())?;
        m.end()
    }
}

#[derive(Deserialize)]
struct StepRepr {
    s: Option<usize>,
    omega: Option<String>,
    dl: i64,
}

/// A sequence of conjugation moves from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionPath {
    pub start: GroupElement,
    pub steps: Vec<Step>,
    pub end: GroupElement,
}

impl ReductionPath {
    /// The empty path at `w`.
    pub fn trivial(w: &GroupElement) -> Self {
        ReductionPath {
            start: w.clone(),
            steps: Vec::new(),
            end: w.clone(),
        }
    }

    /// Applies the steps to `start` and checks the recorded lengths and the
    /// end point.
    pub fn replay(&self) -> Result<GroupElement> {
        let conj = Conjugators::for_element(&self.start);
        let mut cur = self.start.clone();
        for st in &self.steps {
            let before = length(&cur);
            cur = conj.apply(st.mv, &cur);
            let after = length(&cur);
            if before != st.len_before || after != st.len_after {
                return Err(AwgError::Precondition("recorded lengths do not match".into()));
            }
        }
        if cur != self.end {
            return Err(AwgError::Precondition("replay does not reach the end point".into()));
        }
        Ok(cur)
    }

    /// Whether lengths never increase along the path.
    pub fn is_nonincreasing(&self) -> bool {
        self.steps.iter().all(|s| s.len_after <= s.len_before)
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path serializes")
    }

    /// Parses the JSON form, recomputing the lengths by replaying.
    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            start: GroupElement,
            steps: Vec<StepRepr>,
            end: GroupElement,
        }
        let r: Repr = serde_json::from_str(s)?;
        let conj = Conjugators::for_element(&r.start);
        let mut cur = r.start.clone();
        let mut steps = Vec::new();
        for st in r.steps {
            let (mv, name) = match (st.s, st.omega) {
                (Some(i), None) if i < conj.simple().len() => (Move::Simple(i), None),
                (None, Some(name)) => (Move::Omega(conj.omega_index(&name)?), Some(name)),
                _ => return Err(AwgError::Parse("step needs exactly one of s / omega".into())),
            };
            let before = length(&cur);
            cur = conj.apply(mv, &cur);
            let after = length(&cur);
            if after as i64 - before as i64 != st.dl {
                return Err(AwgError::Parse("step length delta does not match".into()));
            }
            steps.push(Step {
                mv,
                omega_name: name,
                len_before: before,
                len_after: after,
            });
        }
        if cur != r.end {
            return Err(AwgError::Parse("steps do not reach the end point".into()));
        }
        Ok(ReductionPath {
            start: r.start,
            steps,
            end: r.end,
        })
    }
}
