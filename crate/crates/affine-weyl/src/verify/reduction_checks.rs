//! Checks of the reduction engine against brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};

use super::{Tally, VerifyContext};
use crate::conj_classes::{classify, fundamental_element, is_distinguished_class, DPPair};
use crate::error::Result;
use crate::reduction::{
    brute_force_min, is_terminal, reaches_by_simple_moves, reduce_to_fundamental, reduce_to_minimal,
    strong_conj_connected,
};
use crate::weyl_core::{
    bruhat_leq, finite_simple_indices, length, reduced_word, simple_reflection, GroupElement, WeylType,
};

const BRUTE_FORCE_BUDGET: usize = 5_000_000;
const STRONG_WITNESS_LENGTH: u64 = 6;

pub(crate) fn paths_valid(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for w in ctx.integral_ball(ty, n)?.iter() {
            let (m, path) = reduce_to_minimal(w)?;
            let ok = path.start == *w
                && path.end == m
                && path.replay()? == m
                && path.is_nonincreasing()
                && classify(w)? == classify(&m)?;
            t.case(ok, || format!("invalid reduction path from {w}"));
        }
    }
    Ok(())
}

pub(crate) fn reduces_to_min(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        let ball = ctx.integral_ball(ty, n)?;
        let results = ctx.exec.map(&ball, |w| -> Result<(u64, u64)> {
            let (m, _) = reduce_to_minimal(w)?;
            let (bf, _) = brute_force_min(w, BRUTE_FORCE_BUDGET)?;
            Ok((length(&m), bf))
        });
        for (w, r) in ball.iter().zip(results) {
            let (got, bf) = r?;
            t.case(got == bf, || format!("{w} reduces to length {got}, brute force finds {bf}"));
        }
    }
    Ok(())
}

pub(crate) fn terminal_iff_minimal(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for w in ctx.integral_ball(ty, n)?.iter() {
            let (bf, _) = brute_force_min(w, BRUTE_FORCE_BUDGET)?;
            let term = is_terminal(w)?;
            t.case(term == (length(w) == bf), || format!("{w}: terminal = {term}, minimal length {bf}"));
        }
    }
    Ok(())
}

/// For each class met in the ball, the union of the brute-force minimal
/// sets of its elements.
fn minimal_sets(ctx: &VerifyContext, ty: WeylType, n: usize) -> Result<BTreeMap<DPPair, BTreeSet<GroupElement>>> {
    let ball = ctx.integral_ball(ty, n)?;
    let found = ctx.exec.map(&ball, |w| -> Result<(DPPair, BTreeSet<GroupElement>)> {
        Ok((classify(w)?, brute_force_min(w, BRUTE_FORCE_BUDGET)?.1))
    });
    let mut out: BTreeMap<DPPair, BTreeSet<GroupElement>> = BTreeMap::new();
    for r in found {
        let (p, set) = r?;
        out.entry(p).or_default().extend(set);
    }
    Ok(out)
}

pub(crate) fn strong_conjugacy(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for (p, set) in minimal_sets(ctx, ty, n)? {
            let ws: Vec<GroupElement> = set.into_iter().collect();
            let lens: BTreeSet<u64> = ws.iter().map(length).collect();
            if lens.len() != 1 {
                t.case(false, || format!("{ty}{n} class {p}: minimal elements of lengths {lens:?}"));
                continue;
            }
            if strong_conj_connected(&ws, STRONG_WITNESS_LENGTH, ctx.exec)? {
                t.case(true, String::new);
            } else {
                t.unverified(|| format!("{ty}{n} class {p}: {} minimal elements not joined", ws.len()));
            }
        }
    }
    Ok(())
}

pub(crate) fn min_equals_bruhat_min(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        let mut classes: BTreeMap<DPPair, Vec<GroupElement>> = BTreeMap::new();
        for w in ctx.integral_ball(ty, n)?.iter() {
            classes.entry(classify(w)?).or_default().push(w.clone());
        }
        for (p, members) in classes {
            let lmin = members.iter().map(length).min().expect("nonempty");
            for x in &members {
                let mut bruhat_min = true;
                for y in &members {
                    if y != x && length(y) < length(x) && bruhat_leq(y, x)? {
                        bruhat_min = false;
                        break;
                    }
                }
                let is_min = length(x) == lmin;
                t.case(bruhat_min == is_min, || {
                    format!("{ty}{n} class {p}: {x} minimal length {is_min}, Bruhat-minimal {bruhat_min}")
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn fundamental_reachable(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        if ty == WeylType::D {
            continue;
        }
        for w in ctx.integral_ball(ty, n)?.iter() {
            let p = classify(w)?;
            if !is_distinguished_class(ty, &p) {
                continue;
            }
            let f = fundamental_element(ty, &p)?;
            t.case(reaches_by_simple_moves(w, &f)?, || format!("{w} does not reach {f} by simple moves"));
        }
    }
    Ok(())
}

pub(crate) fn fundamental_decomposition(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for w in ctx.integral_ball(ty, n)?.iter() {
            let r = reduce_to_fundamental(w)?;
            let xf = r.x.mul(&r.f);
            t.case(length(&xf) == length(&r.x) + length(&r.f), || {
                format!("{w}: l(x f) != l(x) + l(f) for x = {}, f = {}", r.x, r.f)
            });
        }
    }
    Ok(())
}

/// Products of the finite simple reflections in every order.
pub(crate) fn finite_coxeter_elements(ty: WeylType, n: usize) -> Result<Vec<GroupElement>> {
    orderings(&finite_simple_indices(ty, n))
        .into_iter()
        .map(|order| {
            let mut c = GroupElement::identity(ty, n)?;
            for i in order {
                c = c.mul(&simple_reflection(ty, n, i)?);
            }
            Ok(c)
        })
        .collect::<Result<BTreeSet<_>>>()
        .map(|s| s.into_iter().collect())
}

/// All orderings of a list of indices.
pub(crate) fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in orderings(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

pub(crate) fn coxeter_reduction(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        let coxeters = finite_coxeter_elements(ty, n)?;
        for code in 0..5usize.pow(n as u32) {
            let mut c = code;
            let chi: Vec<i64> = (0..n)
                .map(|_| {
                    let d = (c % 5) as i64 - 2;
                    c /= 5;
                    d
                })
                .collect();
            let tr = GroupElement::translation(ty, chi.iter().map(|x| 2 * x).collect())?;
            for cox in &coxeters {
                let w = tr.mul(cox);
                if !reduced_word(&w).1.is_identity() {
                    continue;
                }
                let (m, _) = reduce_to_minimal(&w)?;
                t.case(length(&m) == length(cox), || format!("{w} reduces to length {}", length(&m)));
            }
        }
    }
    Ok(())
}
