//! Checks of the group law, the length function and the Bruhat order.

use std::collections::{BTreeSet, HashSet};

use rand::seq::IndexedRandom;

use super::{Tally, VerifyContext};
use crate::error::Result;
use crate::weyl_core::{
    bruhat_leq, length, omega_elements, reduced_word, simple_reflections, word_element, GroupElement,
    OmegaScope, WeylType,
};

/// Elements of `W_a` by Cayley graph distance from the identity (right
/// multiplication by simple reflections), up to distance `maxd`.
pub(crate) fn cayley_layers(ty: WeylType, n: usize, maxd: u64) -> Result<Vec<Vec<GroupElement>>> {
    let gens = simple_reflections(ty, n)?;
    let id = GroupElement::identity(ty, n)?;
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut layers = vec![vec![id]];
    for _ in 0..maxd {
        let mut next = Vec::new();
        for x in layers.last().expect("nonempty") {
            for s in &gens {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        next.sort();
        layers.push(next);
    }
    Ok(layers)
}

pub(crate) fn length_vs_cayley(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let maxd = ctx.cfg.maxlen.min(6);
    for (ty, n) in ctx.groups() {
        for (d, layer) in cayley_layers(ty, n, maxd)?.iter().enumerate() {
            for x in layer {
                t.case(length(x) == d as u64, || {
                    format!("{}: length {} but distance {d}", x.to_json(), length(x))
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn group_axioms(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("group_axioms");
    for (ty, n) in ctx.groups() {
        let b = ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?;
        let id = GroupElement::identity(ty, n)?;
        for _ in 0..100 {
            let x = b.choose(&mut rng).expect("nonempty");
            let y = b.choose(&mut rng).expect("nonempty");
            let z = b.choose(&mut rng).expect("nonempty");
            t.case(x.mul(y).mul(z) == x.mul(&y.mul(z)), || format!("associativity fails for {x}, {y}, {z}"));
            t.case(id.mul(x) == *x && x.mul(&id) == *x, || format!("identity fails for {x}"));
            t.case(x.mul(&x.inverse()) == id && x.inverse().inverse() == *x, || format!("inverse fails for {x}"));
        }
    }
    Ok(())
}

pub(crate) fn length_simple_step(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        let gens = simple_reflections(ty, n)?;
        for x in ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?.iter() {
            let l = length(x) as i64;
            for (i, s) in gens.iter().enumerate() {
                let dl = length(&s.mul(x)) as i64 - l;
                let dr = length(&x.mul(s)) as i64 - l;
                t.case(dl.abs() == 1 && dr.abs() == 1, || format!("s_{i} on {x}: deltas {dl}, {dr}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn length_symmetries(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("length_symmetries");
    for (ty, n) in ctx.groups() {
        let omegas = omega_elements(ty, n)?;
        let b = ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?;
        for x in b.iter() {
            let l = length(x);
            t.case(length(&x.inverse()) == l, || format!("l(x^-1) != l(x) for {x}"));
            for tau in &omegas {
                t.case(length(&x.conj_by(tau)) == l, || format!("conjugation by {tau} changes l({x})"));
            }
        }
        for _ in 0..200 {
            let x = b.choose(&mut rng).expect("nonempty");
            let y = b.choose(&mut rng).expect("nonempty");
            t.case(length(&x.mul(y)) <= length(x) + length(y), || format!("l(xy) > l(x) + l(y) for {x}, {y}"));
        }
    }
    Ok(())
}

pub(crate) fn omega_length_zero(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for tau in omega_elements(ty, n)? {
            t.case(length(&tau) == 0, || format!("{tau} has length {}", length(&tau)));
        }
    }
    Ok(())
}

pub(crate) fn reduced_word_round_trip(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        for x in ctx.ball(ty, n, ctx.cfg.maxlen, OmegaScope::All)?.iter() {
            let (word, tau) = reduced_word(x);
            let ok = length(&tau) == 0
                && word.len() as u64 == length(x)
                && word_element(&tau, &word)? == *x;
            t.case(ok, || format!("reduced word {word:?} with {tau} does not give {x}"));
        }
    }
    Ok(())
}

fn w_a_ball(ctx: &VerifyContext, ty: WeylType, n: usize, maxlen: u64) -> Result<Vec<GroupElement>> {
    Ok(ctx
        .ball(ty, n, maxlen, OmegaScope::Integral)?
        .iter()
        .filter(|x| reduced_word(x).1.is_identity())
        .cloned()
        .collect())
}

pub(crate) fn bruhat_partial_order(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("bruhat_partial_order");
    let maxlen = ctx.cfg.maxlen.min(5);
    for (ty, n) in ctx.groups() {
        let b = ctx.ball(ty, n, maxlen, OmegaScope::Integral)?;
        for x in b.iter() {
            t.case(bruhat_leq(x, x)?, || format!("{x} is not below itself"));
        }
        for _ in 0..2000 {
            let x = b.choose(&mut rng).expect("nonempty");
            let y = b.choose(&mut rng).expect("nonempty");
            let z = b.choose(&mut rng).expect("nonempty");
            let xy = bruhat_leq(x, y)?;
            let yx = bruhat_leq(y, x)?;
            if xy {
                t.case(length(x) <= length(y), || format!("{x} <= {y} with larger length"));
            }
            if xy && yx {
                t.case(x == y, || format!("antisymmetry fails for {x}, {y}"));
            }
            if xy && bruhat_leq(y, z)? {
                t.case(bruhat_leq(x, z)?, || format!("transitivity fails for {x}, {y}, {z}"));
            }
        }
    }
    Ok(())
}

/// Products of all subwords of a word: the Bruhat interval below the
/// element when the word is reduced.
fn subword_products(ty: WeylType, n: usize, word: &[usize]) -> Result<BTreeSet<GroupElement>> {
    let gens = simple_reflections(ty, n)?;
    let mut acc = BTreeSet::from([GroupElement::identity(ty, n)?]);
    for &i in word {
        let next: Vec<GroupElement> = acc.iter().map(|x| x.mul(&gens[i])).collect();
        acc.extend(next);
    }
    Ok(acc)
}

pub(crate) fn bruhat_subword(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let maxlen = ctx.cfg.maxlen.min(5);
    let (ty, n) = (WeylType::A, 3);
    let b = w_a_ball(ctx, ty, n, maxlen)?;
    for y in &b {
        let (word, _) = reduced_word(y);
        let below = subword_products(ty, n, &word)?;
        for x in &b {
            let expect = below.contains(x);
            t.case(bruhat_leq(x, y)? == expect, || format!("bruhat_leq({x}, {y}) != {expect}"));
        }
    }
    Ok(())
}
