use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{order_gap, orthogonal_effects, profile};
use crate::element::Element;
use crate::error::Result;
use crate::lattice::{
    atomic_decomposition_with, covering_check, join, meet, orthogonal, rank_of, CoveringCase, SharpEffect,
};
use crate::random::{combine, random_effect, random_frame, Profile};
use crate::seqprod::{seq_prod, sharp_prod};
use crate::spectral::{self, ceiling};
use crate::tolerance::Tier;
use crate::verify::{Ctx, Probe};

fn sharp(ctx: &Ctx, e: Element) -> Result<SharpEffect> {
    SharpEffect::new(e, &ctx.tol)
}

fn random_sharp(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<SharpEffect> {
    sharp(ctx, random_effect(&ctx.desc, rng, Profile::Sharp))
}

fn random_atom(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<SharpEffect> {
    sharp(ctx, random_effect(&ctx.desc, rng, Profile::Atomic))
}

pub(super) fn lattice(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let eps = ctx.eps(Tier::Base, 1.0);
    let eps2 = ctx.eps(Tier::Chained, 1.0);
    let p = random_sharp(ctx, rng)?;
    let q = if k.is_multiple_of(2) { random_atom(ctx, rng)? } else { random_sharp(ctx, rng)? };
    let (pv, qv) = (p.value(), q.value());

    let j = join(&p, &q, tol)?;
    let upper = order_gap(pv, j.value())?.min(order_gap(qv, j.value())?);
    pr.nonnegative("join-upper", upper, eps, &[pv, qv]);
    let swapped = join(&q, &p, tol)?;
    pr.close(ctx, "join-commutative", (j.value() - swapped.value()).ref_norm(), Tier::Base, 1.0, &[pv, qv]);
    let s = random_sharp(ctx, rng)?;
    let bound = join(&join(&p, &s, tol)?, &q, tol)?;
    pr.nonnegative("join-minimal", order_gap(j.value(), bound.value())?, eps2, &[pv, qv, s.value()]);

    let m = meet(&p, &q, tol)?;
    let lower = order_gap(m.value(), pv)?.min(order_gap(m.value(), qv)?);
    pr.nonnegative("meet-lower", lower, eps2, &[pv, qv]);
    let de_morgan = meet(&p.complement(tol)?, &q.complement(tol)?, tol)?;
    let jc = j.value().complement();
    pr.close(ctx, "de-morgan", (&jc - de_morgan.value()).ref_norm(), Tier::Chained, 1.0, &[pv, qv]);

    let frame = random_frame(d, rng);
    let side: Vec<bool> = frame.iter().map(|_| rand::Rng::random_bool(rng, 0.5)).collect();
    let pick = |want: bool| {
        let spec: Vec<f64> = side.iter().map(|&s| if s == want { 1.0 } else { 0.0 }).collect();
        combine(&frame, &spec)
    };
    let (o1, o2) = (sharp(ctx, pick(true))?, sharp(ctx, pick(false))?);
    pr.holds("orthogonal-symmetric", orthogonal(&o1, &o2, tol)? && orthogonal(&o2, &o1, tol)?, &[o1.value(), o2.value()]);
    let sum = o1.value() + o2.value();
    pr.nonnegative("orthogonal-sum-below-unit", order_gap(&sum, &sum.unit_like())?, eps, &[o1.value(), o2.value()]);
    let oj = join(&o1, &o2, tol)?;
    pr.close(ctx, "orthogonal-join-is-sum", (oj.value() - &sum).ref_norm(), Tier::Base, 1.0, &[o1.value(), o2.value()]);

    let (x, y) = orthogonal_effects(d, rng);
    if seq_prod(&y, &x, tol)?.ref_norm() <= eps {
        let residual = seq_prod(&y, &ceiling(&x, tol)?, tol)?.ref_norm();
        pr.close(ctx, "ceiling-annihilation", residual, Tier::Chained, 1.0, &[&x, &y]);
    }

    let a = random_effect(d, rng, profile(k));
    let lhs = ceiling(&sharp_prod(pv, &a)?, tol)?;
    let rhs = ceiling(&sharp_prod(pv, &ceiling(&a, tol)?)?, tol)?;
    pr.close(ctx, "ceiling-of-compression", (&lhs - &rhs).ref_norm(), Tier::Chained, 1.0, &[pv, &a]);

    let under = sharp_prod(pv, &a)?;
    let fixed = (&sharp_prod(pv, &under)? - &under).ref_norm();
    let killed = sharp_prod(&pv.complement(), &under)?.ref_norm();
    pr.close(ctx, "below-sharp", fixed.max(killed), Tier::Chained, 1.0, &[pv, &under]);

    let shared: Vec<f64> = side.iter().map(|_| if rand::Rng::random_bool(rng, 0.5) { 1.0 } else { 0.0 }).collect();
    let r = sharp(ctx, combine(&frame, &shared))?;
    let pr_prod = sharp_prod(o1.value(), r.value())?;
    let pm = meet(&o1, &r, tol)?;
    pr.holds("compatible-sharp-meet", spectral::is_sharp(&pr_prod, tol)?, &[o1.value(), r.value()]);
    pr.close(ctx, "compatible-sharp-meet", (&pr_prod - pm.value()).ref_norm(), Tier::Chained, 1.0, &[o1.value(), r.value()]);

    let t = random_atom(ctx, rng)?;
    let sub = sharp(ctx, ceiling(&sharp_prod(pv, t.value())?, tol)?)?;
    let diff = pv - sub.value();
    let wedge = meet(&p, &sub.complement(tol)?, tol)?;
    pr.close(ctx, "difference-is-meet", (&diff - wedge.value()).ref_norm(), Tier::Chained, 1.0, &[pv, sub.value()]);

    let compressed = seq_prod(&a, t.value(), tol)?;
    let form = spectral::spectral_decompose(&compressed, tol)?;
    let rank_one = form.terms().iter().map(|t| t.multiplicity).sum::<usize>() <= 1;
    pr.holds("compression-of-atom", rank_one, &[&a, t.value()]);

    let cover = covering_check(&p, &t, tol)?;
    pr.holds("covering", cover.case != CoveringCase::Neither, &[pv, t.value()]);
    pr.close(ctx, "covering-ceiling", cover.ceiling_residual, Tier::Chained, 1.0, &[pv, t.value()]);

    if d.rank() >= 2 {
        let u = random_atom(ctx, rng)?;
        if (t.value() - u.value()).ref_norm() > 1e-6 {
            let j = join(&t, &u, tol)?;
            let inside = sharp_prod(j.value(), &random_effect(d, rng, profile(k + 1)))?;
            let ceil = SharpEffect::new(ceiling(&inside, tol)?, tol)?;
            let split = match SharpEffect::new(j.value() - ceil.value(), tol) {
                Ok(rest) => rank_of(&ceil, tol)? + rank_of(&rest, tol)? == 2,
                Err(_) => false,
            };
            pr.holds("rank-two-ideal", split, &[t.value(), u.value(), &inside]);
        }
    }
    Ok(())
}

pub(super) fn rank(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let one = sharp(ctx, Element::unit(d))?;
    pr.holds("unit-rank", rank_of(&one, tol)? == d.rank(), &[]);

    let p = random_sharp(ctx, rng)?;
    let r = rank_of(&p, tol)?;
    let mut agree = true;
    for i in 0..3u64 {
        let mut frame_rng = ChaCha8Rng::seed_from_u64(rand::Rng::random(rng));
        frame_rng.set_stream(i);
        let dec = atomic_decomposition_with(&p, tol, &mut frame_rng)?;
        agree &= dec.len() == r;
        pr.close(ctx, "decomposition-sum", dec.sum_residual(), Tier::Base, 1.0, &[p.value()]);
        pr.close(ctx, "decomposition-orthogonal", dec.max_overlap()?, Tier::Base, 1.0, &[p.value()]);
    }
    pr.holds("frame-independence", agree, &[p.value()]);
    pr.close(ctx, "rank-is-trace", (p.value().trace() - r as f64).abs(), Tier::Base, 1.0, &[p.value()]);

    let y = random_effect(d, rng, profile(k));
    let q = sharp(ctx, ceiling(&sharp_prod(p.value(), &y)?, tol)?)?;
    let rq = rank_of(&q, tol)?;
    pr.holds("rank-monotone", rq <= r, &[p.value(), q.value()]);
    if rq == r {
        pr.close(ctx, "rank-equality-forces-equal", (p.value() - q.value()).ref_norm(), Tier::Chained, 1.0, &[p.value(), q.value()]);
    }

    if d.rank() >= 2 {
        let a = random_atom(ctx, rng)?;
        let b = random_atom(ctx, rng)?;
        if (a.value() - b.value()).ref_norm() > 1e-6 {
            pr.holds("join-of-atoms-rank-two", rank_of(&join(&a, &b, tol)?, tol)? == 2, &[a.value(), b.value()]);
        }
    }
    Ok(())
}
