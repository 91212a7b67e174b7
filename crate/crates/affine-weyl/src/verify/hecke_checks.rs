//! Checks of the Hecke algebra relations and of class polynomials.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{Tally, VerifyContext};
use crate::conj_classes::DPPair;
use crate::error::Result;
use crate::hecke::{
    class_polynomials, hecke_check_products, hecke_check_quadratic, path_independence_probe, XiPoly,
};
use crate::reduction::ClassLengthCache;
use crate::weyl_core::{simple_indices, simple_reflection, OmegaScope, WeylType};

pub(crate) fn quadratic_relation(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    for (ty, n) in ctx.groups() {
        let samples = ctx.ball(ty, n, ctx.cfg.maxlen.min(4), OmegaScope::All)?;
        for i in simple_indices(ty, n) {
            t.case(hecke_check_quadratic(i, &samples)?, || format!("quadratic relation fails for s_{i} in {ty}{n}"));
        }
    }
    Ok(())
}

pub(crate) fn products(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("products");
    for (ty, n) in ctx.groups() {
        let b = ctx.ball(ty, n, ctx.cfg.maxlen.min(4), OmegaScope::All)?;
        for _ in 0..100 {
            let x = b.choose(&mut rng).expect("nonempty").clone();
            let y = b.choose(&mut rng).expect("nonempty").clone();
            let pair = [(x.clone(), y.clone())];
            t.case(hecke_check_products(&pair)?, || format!("T_x T_y != T_xy for {x}, {y}"));
        }
    }
    Ok(())
}

fn random_xi(rng: &mut impl Rng) -> XiPoly {
    let len = rng.random_range(0..5);
    XiPoly::new((0..len).map(|_| rng.random_range(-3..=3)).collect())
}

pub(crate) fn xi_ring_axioms(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("xi_ring_axioms");
    for _ in 0..300 {
        let (a, b, c) = (random_xi(&mut rng), random_xi(&mut rng), random_xi(&mut rng));
        t.case(&a + &b == &b + &a, || format!("addition not commutative: {a}, {b}"));
        t.case(&a * &b == &b * &a, || format!("multiplication not commutative: {a}, {b}"));
        t.case(&(&a + &b) + &c == &a + &(&b + &c), || format!("addition not associative: {a}, {b}, {c}"));
        t.case(&(&a * &b) * &c == &a * &(&b * &c), || format!("multiplication not associative: {a}, {b}, {c}"));
        t.case(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("not distributive: {a}, {b}, {c}"));
        let x = rng.random_range(-3..=3);
        t.case((&a * &b).eval(x) == a.eval(x) * b.eval(x), || format!("evaluation not multiplicative: {a}, {b}"));
    }
    Ok(())
}

pub(crate) fn worked_table(_ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let s = |i| simple_reflection(WeylType::A, 2, i);
    let w = s(1)?.mul(&s(0)?).mul(&s(1)?);
    let table = class_polynomials(&w)?;
    let expect = [
        (DPPair::new(vec![(2, 0)], vec![]), XiPoly::one()),
        (DPPair::new(vec![(1, 1), (1, -1)], vec![]), XiPoly::xi()),
    ];
    t.case(table.entries.len() == 2, || format!("table has {} entries", table.entries.len()));
    for (p, f) in expect {
        let got = table.get(&p);
        t.case(got == f, || format!("f_(s1 s0 s1, {p}) = {got}, expected {f}"));
    }
    Ok(())
}

pub(crate) fn table_invariants(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("table_invariants");
    let sample = ctx.sample_integral(&mut rng, 200)?;
    let lengths = ClassLengthCache::default();
    for w in &sample {
        let table = class_polynomials(w)?;
        match table.check_invariants(&lengths)? {
            None => t.case(true, String::new),
            Some(msg) => t.fail(format!("{w}: {msg}")),
        }
    }
    Ok(())
}

pub(crate) fn path_independence(ctx: &VerifyContext, t: &mut Tally) -> Result<()> {
    let mut rng = ctx.rng("path_independence");
    let sample = ctx.sample_integral(&mut rng, 100)?;
    let results = ctx.exec.map(&sample, |w| path_independence_probe(w, 5, ctx.cfg.seed));
    for (w, r) in sample.iter().zip(results) {
        t.case(r?, || format!("class polynomials of {w} depend on the search order"));
    }
    Ok(())
}
