//! Checks of the dimension formulas.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{Tally, VerifyContext};
use crate::adlv::{regular_translation, DimContext};
use crate::conj_classes::classify;
use crate::error::Result;
use crate::newton::{f_invariant, fiber_min_length, NewtonInv, Rational};
use crate::weyl_core::{length, simple_reflection, GroupElement, WeylType};

pub(crate) fn regular_translation_zero(_ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let dims = DimContext::default();
    let mus: [&[i64]; 8] = [&[1, 0], &[2, -1], &[3, 1], &[2, 1], &[2, 1, 0], &[3, 1, -2], &[3, 2, 1], &[1, 0, -1]];
    for ty in [WeylType::A, WeylType::C] {
        for mu in mus {
            let Ok(tm) = regular_translation(ty, mu.len(), mu) else { continue };
            let d = dims.dim_type_ac(&tm, &f_invariant(&tm))?.max;
            t.case(d == Some(0), || format!("{ty}: dim for t^{mu:?} is {d:?}"));
        }
    }
    Ok(())
}

pub(crate) fn worked_dimensions(_ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let dims = DimContext::default();
    let s = |i| simple_reflection(WeylType::A, 2, i);
    let w = s(1)?.mul(&s(0)?).mul(&s(1)?);
    let basic = NewtonInv { point: vec![Rational::from_integer(0); 2], eta: 0 };
    let d = dims.dim_type_ac(&w, &basic)?.max;
    t.case(d == Some(2), || format!("basic b: {d:?}"));
    let tm = GroupElement::from_integral(WeylType::A, &[1, -1], &[1, 2])?;
    let d = dims.dim_type_ac(&w, &f_invariant(&tm))?.max;
    t.case(d == Some(1), || format!("b in the fiber of t^(1,-1): {d:?}"));
    Ok(())
}

/// Invariants of the integral balls of rank 2 in types A and C.
fn rank_two_invariants(ctx: &VerifyContext, ty: WeylType) -> Result<Vec<NewtonInv>> {
    let set: BTreeSet<NewtonInv> = ctx.integral_ball(ty, 2)?.iter().map(f_invariant).collect();
    Ok(set.into_iter().collect())
}

pub(crate) fn general_matches_type_ac(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let dims = DimContext::default();
    for ty in [WeylType::A, WeylType::C] {
        let invs = rank_two_invariants(ctx, ty)?;
        let bases = invs
            .iter()
            .map(|inv| dims.fiber_base_map(inv, ty, 2))
            .collect::<Result<Vec<_>>>()?;
        for w in ctx.integral_ball(ty, 2)?.iter() {
            for (inv, base) in invs.iter().zip(&bases) {
                let a = dims.dim_type_ac(w, inv)?.max;
                let g = dims.dim_general(w, base)?.max;
                t.case(a == g, || format!("{w} over {inv}: type A/C formula {a:?}, general {g:?}"));
                t.case(a.is_none_or(|d| d >= 0), || format!("{w} over {inv}: negative dimension {a:?}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn minimal_elements_degenerate(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let dims = DimContext::default();
    for (ty, n) in ctx.groups_ac() {
        for w in ctx.integral_ball(ty, n)?.iter() {
            let p = classify(w)?;
            let lo = dims.lengths.get(ty, &p)?;
            if length(w) != lo {
                continue;
            }
            let inv = f_invariant(w);
            let (lf, _) = fiber_min_length(&inv, ty, n, &dims.lengths)?;
            let d = dims.dim_type_ac(w, &inv)?.max;
            let expect = Some(lo as i64 - lf as i64);
            t.case(d == expect, || format!("{w}: {d:?} != {expect:?}"));
        }
    }
    Ok(())
}

pub(crate) fn regular_coweight_consistency(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let dims = DimContext::default();
    let mut rng = ctx.rng("regular_coweight_consistency");
    let mut done = 0;
    while done < 50 {
        let ty = if rng.random_bool(0.5) { WeylType::A } else { WeylType::C };
        let mu = [rng.random_range(-3..=3), rng.random_range(-3..=3)];
        let Ok(tm) = regular_translation(ty, 2, &mu) else { continue };
        let ball = ctx.integral_ball(ty, 2)?;
        let w = ball.choose(&mut rng).expect("nonempty");
        done += 1;
        let r = dims.dim_regular_coweight(w, &mu)?;
        let a = dims.dim_type_ac(w, &f_invariant(&tm))?.max;
        t.case(r == a, || format!("{w}, mu = {mu:?}: regular formula {r:?}, type A/C formula {a:?}"));
    }
    Ok(())
}
