//! Checks of Newton points, good elements and fibers.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::IndexedRandom;

use super::reduction_checks::orderings;
use super::{Tally, VerifyContext};
use crate::conj_classes::{classify, enumerate_dppairs, is_distinguished_class, standard_element};
use crate::error::Result;
use crate::exec::Exec;
use crate::newton::{
    f_invariant, fiber_classes, fiber_min_length, is_good, is_good_by_powers, newton_point_with, preceq,
    NewtonInv,
};
use crate::reduction::{same_length_component, ClassLengthCache};
use crate::weyl_core::{bruhat_leq, length, simple_indices, simple_reflection, GroupElement, OmegaScope, WeylType};

pub(crate) fn exponent_independence(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("exponent_independence");
    for w in ctx.sample_integral(&mut rng, 100)? {
        let k = w.perm().order();
        let a = newton_point_with(&w, k)?;
        let b = newton_point_with(&w, 2 * k)?;
        t.case(a == b, || format!("{w}: exponents {k} and {} disagree", 2 * k));
    }
    Ok(())
}

pub(crate) fn invariant_constant(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("invariant_constant");
    for (ty, n) in ctx.groups() {
        let xs = ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?;
        for _ in 0..200 {
            let x = xs.choose(&mut rng).expect("nonempty");
            let y = xs.choose(&mut rng).expect("nonempty");
            t.case(f_invariant(&x.conj_by(y)) == f_invariant(x), || format!("f differs on {x} and its conjugate by {y}"));
        }
    }
    Ok(())
}

pub(crate) fn good_vs_powers(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("good_vs_powers");
    let groups = ctx.groups();
    for _ in 0..300 {
        let &(ty, n) = groups.choose(&mut rng).expect("nonempty");
        let b = ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?;
        let w = b.choose(&mut rng).expect("nonempty");
        let (g, p) = (is_good(w), is_good_by_powers(w, 12));
        t.case(g == p, || format!("{w}: is_good = {g}, power test = {p}"));
    }
    Ok(())
}

pub(crate) fn coxeter_elements_good(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for order in orderings(&simple_indices(ty, n)) {
            let mut c = GroupElement::identity(ty, n)?;
            for i in order {
                c = c.mul(&simple_reflection(ty, n, i)?);
            }
            t.case(is_good(&c), || format!("Coxeter element {c} is not good"));
        }
    }
    Ok(())
}

/// Ball elements of types A and C grouped by their invariant.
fn fibers_in_ball(ctx: &VerifyContext, ty: WeylType, n: usize) -> Result<BTreeMap<NewtonInv, Vec<GroupElement>>> {
    let mut out: BTreeMap<NewtonInv, Vec<GroupElement>> = BTreeMap::new();
    for w in ctx.integral_ball(ty, n)?.iter() {
        out.entry(f_invariant(w)).or_default().push(w.clone());
    }
    Ok(out)
}

pub(crate) fn good_iff_fiber_minimal(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let lengths = ClassLengthCache::default();
    for (ty, n) in ctx.groups_ac() {
        for (inv, members) in fibers_in_ball(ctx, ty, n)? {
            let (lf, _) = fiber_min_length(&inv, ty, n, &lengths)?;
            let ball_min = members.iter().map(length).min().expect("nonempty");
            t.case(ball_min >= lf, || format!("fiber {inv} has an element of length {ball_min} < {lf}"));
            for w in &members {
                let good = is_good(w);
                t.case(good == (length(w) == lf), || {
                    format!("{w}: good = {good}, length {} vs fiber minimum {lf}", length(w))
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn good_iff_distinguished_minimal(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let lengths = ClassLengthCache::default();
    for (ty, n) in ctx.groups_ac() {
        for (inv, members) in fibers_in_ball(ctx, ty, n)? {
            let distinguished: Vec<_> = fiber_classes(&inv, ty, n)?
                .into_iter()
                .filter(|p| is_distinguished_class(ty, p))
                .collect();
            t.case(distinguished.len() == 1, || format!("fiber {inv} has distinguished classes {distinguished:?}"));
            for w in &members {
                let good = is_good(w);
                let p = classify(w)?;
                let dmin = is_distinguished_class(ty, &p) && length(w) == lengths.get(ty, &p)?;
                let mut bmin = true;
                for y in &members {
                    if length(y) < length(w) && bruhat_leq(y, w)? {
                        bmin = false;
                        break;
                    }
                }
                t.case(good == dmin && good == bmin, || {
                    format!("{w}: good = {good}, distinguished-minimal = {dmin}, Bruhat-minimal = {bmin}")
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn good_elements_connected(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups_ac() {
        for (inv, members) in fibers_in_ball(ctx, ty, n)? {
            let good: Vec<&GroupElement> = members.iter().filter(|w| is_good(w)).collect();
            let Some(first) = good.first() else { continue };
            let comp = same_length_component(first, true, Exec::Sequential)?;
            let nodes: BTreeSet<&GroupElement> = comp.nodes.iter().collect();
            for w in &good {
                t.case(nodes.contains(w), || format!("fiber {inv}: {w} not joined to {first}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn fiber_consistency(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups_ac() {
        for p in enumerate_dppairs(ty, n, 2)? {
            let x = standard_element(ty, &p)?;
            let inv = f_invariant(&x);
            let fiber = fiber_classes(&inv, ty, n)?;
            t.case(fiber.contains(&p), || format!("{ty}{n}: {p} missing from the fiber over {inv}"));
            for q in fiber {
                let got = f_invariant(&standard_element(ty, &q)?);
                t.case(got == inv, || format!("{ty}{n}: {q} lies over {got}, not {inv}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn preceq_partial_order(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let lengths = ClassLengthCache::default();
    for ty in [WeylType::A, WeylType::C] {
        let n = 2;
        let maxlen = ctx.cfg.maxlen.min(6);
        let invs: BTreeSet<NewtonInv> = ctx
            .ball(ty, n, maxlen, OmegaScope::Integral)?
            .iter()
            .map(f_invariant)
            .collect();
        let invs: Vec<NewtonInv> = invs.into_iter().collect();
        let k = invs.len();
        let mut rel = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                rel[i][j] = preceq(&invs[i], &invs[j], ty, n, &lengths)?;
            }
        }
        for i in 0..k {
            t.case(rel[i][i], || format!("{ty}{n}: {} not below itself", invs[i]));
            for j in 0..k {
                if i != j {
                    t.case(!(rel[i][j] && rel[j][i]), || format!("{ty}{n}: {} and {} below each other", invs[i], invs[j]));
                }
                for l in 0..k {
                    if rel[i][j] && rel[j][l] {
                        t.case(rel[i][l], || format!("{ty}{n}: transitivity fails at {}, {}, {}", invs[i], invs[j], invs[l]));
                    }
                }
            }
        }
    }
    Ok(())
}
