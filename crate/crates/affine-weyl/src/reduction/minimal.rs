//! Reduction to minimal length and the brute-force oracle.

use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

use super::path::{Conjugators, Move, ReductionPath, Step};
use crate::error::{AwgError, Result};
use crate::exec::Exec;
use crate::conj_classes::{standard_element, DPPair};
use crate::weyl_core::{length, simple_reflection, GroupElement, WeylType};

/// Result of a breadth-first conjugation search: nodes in visiting order
/// with their lengths and the move that first reached them.
#[derive(Clone, Debug)]
pub struct Component {
    pub nodes: Vec<GroupElement>,
    pub lengths: Vec<u64>,
    pub parent: Vec<Option<(usize, Move)>>,
}

impl Component {
    /// The moves leading from the start to node `idx`, with their source
    /// node indices.
    pub fn path_to(&self, idx: usize) -> Vec<(usize, Move)> {
        let mut out = Vec::new();
        let mut cur = idx;
        while let Some((from, mv)) = self.parent[cur] {
            out.push((from, mv));
            cur = from;
        }
        out.reverse();
        out
    }

    /// Whether the search reached `x`.
    pub fn contains(&self, x: &GroupElement) -> bool {
        self.nodes.contains(x)
    }
}

/// Breadth-first search over conjugation moves. A neighbour `y` of a node of
/// length `l` is kept when `accept(l, ℓ(y))`. Frontiers are expanded with
/// `exec` and merged in node order, so the visiting order is canonical.
pub(crate) fn conj_bfs<F>(
    start: &GroupElement,
    conj: &Conjugators,
    moves: &[Move],
    accept: F,
    budget: Option<usize>,
    exec: Exec,
) -> Result<Component>
where
    F: Fn(u64, u64) -> bool + Sync + Send,
{
    let mut comp = Component {
        nodes: vec![start.clone()],
        lengths: vec![length(start)],
        parent: vec![None],
    };
    let mut index: HashMap<GroupElement, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut frontier = 0..1;
    while !frontier.is_empty() {
        let lo = frontier.start;
        let nodes = &comp.nodes;
        let lengths = &comp.lengths;
        let expansions = exec.map_range(frontier.len(), |k| {
            let idx = lo + k;
            moves
                .iter()
                .filter_map(|&mv| {
                    let y = conj.apply(mv, &nodes[idx]);
                    let ly = length(&y);
                    accept(lengths[idx], ly).then_some((mv, y, ly))
                })
                .collect::<Vec<_>>()
        });
        let next_lo = comp.nodes.len();
        for (k, exp) in expansions.into_iter().enumerate() {
            for (mv, y, ly) in exp {
                if index.contains_key(&y) {
                    continue;
                }
                index.insert(y.clone(), comp.nodes.len());
                comp.nodes.push(y);
                comp.lengths.push(ly);
                comp.parent.push(Some((lo + k, mv)));
                if let Some(b) = budget {
                    if comp.nodes.len() > b {
                        return Err(AwgError::BudgetExceeded { budget: b });
                    }
                }
            }
        }
        frontier = next_lo..comp.nodes.len();
    }
    Ok(comp)
}

/// `(s_i w s_i, ℓ(s_i w s_i) − ℓ(w))`; the difference is −2, 0 or 2.
pub fn conj_step(w: &GroupElement, i: usize) -> Result<(GroupElement, i64)> {
    let s = simple_reflection(w.weyl_type(), w.n(), i)?;
    let y = s.mul(w).mul(&s);
    let d = length(&y) as i64 - length(w) as i64;
    Ok((y, d))
}

/// The elements reachable from `w` by length-preserving moves (with or
/// without length-zero conjugations), in canonical BFS order.
pub fn same_length_component(
    w: &GroupElement,
    with_omega: bool,
    exec: Exec,
) -> Result<Component> {
    let conj = Conjugators::for_element(w);
    conj_bfs(w, &conj, &conj.moves(with_omega), |a, b| a == b, None, exec)
}

/// The elements reachable from `w` by moves that never raise the length,
/// in canonical BFS order.
pub fn reachable_nonincreasing(
    w: &GroupElement,
    with_omega: bool,
    budget: Option<usize>,
    exec: Exec,
) -> Result<Component> {
    let conj = Conjugators::for_element(w);
    conj_bfs(w, &conj, &conj.moves(with_omega), |a, b| b <= a, budget, exec)
}

/// First node (in component order) with a length-decreasing simple
/// conjugation, together with the smallest such index.
pub(crate) fn first_descent(comp: &Component, conj: &Conjugators, exec: Exec) -> Option<(usize, usize)> {
    exec.find_first(&comp.nodes, |x| {
        let l = length(x);
        (0..conj.simple().len()).find(|&i| length(&conj.apply(Move::Simple(i), x)) < l)
    })
}

/// Reduces `w` to an element of minimal length in its conjugacy class.
///
/// Repeatedly explores the length-preserving component of the current
/// element and jumps along the first length-decreasing simple conjugation
/// found. Stops when no component element admits one.
pub fn reduce_to_minimal(w: &GroupElement) -> Result<(GroupElement, ReductionPath)> {
    reduce_to_minimal_with(w, Exec::default())
}

/// [`reduce_to_minimal`] with an explicit execution strategy.
pub fn reduce_to_minimal_with(w: &GroupElement, exec: Exec) -> Result<(GroupElement, ReductionPath)> {
    let conj = Conjugators::for_element(w);
    let moves = conj.moves(true);
    let mut cur = w.clone();
    let mut steps = Vec::new();
    loop {
        let comp = conj_bfs(&cur, &conj, &moves, |a, b| a == b, None, exec)?;
        let Some((idx, i)) = first_descent(&comp, &conj, exec) else {
            break;
        };
        for (from, mv) in comp.path_to(idx) {
            let l = comp.lengths[from];
            steps.push(Step {
                mv,
                omega_name: match mv {
                    Move::Omega(k) => Some(conj.omega_name(k).to_string()),
                    Move::Simple(_) => None,
                },
                len_before: l,
                len_after: l,
            });
        }
        let x = &comp.nodes[idx];
        let y = conj.apply(Move::Simple(i), x);
        let ly = length(&y);
        steps.push(Step {
            mv: Move::Simple(i),
            omega_name: None,
            len_before: comp.lengths[idx],
            len_after: ly,
        });
        cur = y;
    }
    let path = ReductionPath {
        start: w.clone(),
        steps,
        end: cur.clone(),
    };
    Ok((cur, path))
}

/// Whether every `w′` with `w → w′` satisfies `w′ ≈ w`: no element of the
/// simple-move length-preserving component has a length-decreasing simple
/// conjugation.
pub fn is_terminal(w: &GroupElement) -> Result<bool> {
    let conj = Conjugators::for_element(w);
    let comp = conj_bfs(w, &conj, &conj.moves(false), |a, b| a == b, None, Exec::default())?;
    Ok(first_descent(&comp, &conj, Exec::default()).is_none())
}

/// Exhaustive search over all conjugates reachable by simple and
/// length-zero conjugations without exceeding `ℓ(w)`. Returns the minimal
/// length seen and all elements attaining it.
pub fn brute_force_min(w: &GroupElement, budget: usize) -> Result<(u64, BTreeSet<GroupElement>)> {
    let conj = Conjugators::for_element(w);
    let top = length(w);
    let comp = conj_bfs(
        w,
        &conj,
        &conj.moves(true),
        move |_, b| b <= top,
        Some(budget),
        Exec::default(),
    )?;
    let min = *comp.lengths.iter().min().expect("start is visited");
    let set = comp
        .nodes
        .iter()
        .zip(&comp.lengths)
        .filter(|(_, &l)| l == min)
        .map(|(x, _)| x.clone())
        .collect();
    Ok((min, set))
}

/// Minimal length in the class labelled by `p`, i.e. the length of the
/// reduction of its standard representative.
pub fn class_min_length(ty: WeylType, p: &DPPair) -> Result<u64> {
    let x = standard_element(ty, p)?;
    Ok(length(&reduce_to_minimal(&x)?.0))
}

/// Thread-safe memo for [`class_min_length`].
#[derive(Debug, Default)]
pub struct ClassLengthCache {
    memo: RwLock<HashMap<(WeylType, DPPair), u64>>,
}

impl ClassLengthCache {
    /// Cached [`class_min_length`].
    pub fn get(&self, ty: WeylType, p: &DPPair) -> Result<u64> {
        let key = (ty, p.clone());
        if let Some(&l) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(l);
        }
        let l = class_min_length(ty, p)?;
        self.memo.write().expect("memo lock").insert(key, l);
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{simple_reflection, WeylType};

    fn s(i: usize) -> GroupElement {
        simple_reflection(WeylType::A, 2, i).unwrap()
    }

    #[test]
    fn conj_step_examples() {
        let w = s(1).mul(&s(0)).mul(&s(1));
        let (y, d) = conj_step(&w, 1).unwrap();
        assert_eq!((y, d), (s(0), -2));
        let z = GroupElement::translation(WeylType::A, vec![2, 2]).unwrap();
        assert_eq!(conj_step(&z, 0).unwrap(), (z.clone(), 0));
    }

    #[test]
    fn reduce_s1s0s1() {
        let w = s(1).mul(&s(0)).mul(&s(1));
        let (end, path) = reduce_to_minimal(&w).unwrap();
        assert_eq!(end, s(0));
        assert_eq!(path.steps.len(), 1);
        assert_eq!(path.replay().unwrap(), end);
        assert!(!is_terminal(&w).unwrap());
        assert!(is_terminal(&s(0)).unwrap());
    }

    #[test]
    fn brute_force_small_cases() {
        let e = GroupElement::identity(WeylType::C, 2).unwrap();
        let (m, set) = brute_force_min(&e, 10).unwrap();
        assert_eq!(m, 0);
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![e]);
        let (m, set) = brute_force_min(&s(0), 100).unwrap();
        assert_eq!(m, 1);
        assert!(set.contains(&s(0)) && set.contains(&s(1)));
    }

    #[test]
    fn budget_is_enforced() {
        let w = GroupElement::from_integral(WeylType::C, &[3, -2, 1], &[2, 3, 1]).unwrap();
        assert_eq!(brute_force_min(&w, 3), Err(AwgError::BudgetExceeded { budget: 3 }));
    }

    #[test]
    fn path_json_roundtrip() {
        let w = GroupElement::from_integral(WeylType::C, &[2, -1], &[-2, 1]).unwrap();
        let (_, path) = reduce_to_minimal(&w).unwrap();
        let back = ReductionPath::from_json(&path.to_json()).unwrap();
        assert_eq!(back, path);
    }
}
