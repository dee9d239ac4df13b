use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::profile;
use crate::duality::{build_self_dual_inner, pure_state_by_inner, pure_state_of, transition_probability, FrameChoice};
use crate::error::Result;
use crate::lattice::{orthogonal, SharpEffect};
use crate::random::{random_effect, random_element, random_frame, Profile};
use crate::seqprod::sharp_prod;
use crate::spectral;
use crate::tolerance::Tier;
use crate::verify::{Ctx, Probe};

pub(super) fn duality(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let eps = ctx.eps(Tier::Base, 1.0);
    let atom = |rng: &mut ChaCha8Rng| SharpEffect::new(random_effect(d, rng, Profile::Atomic), tol);
    let p = atom(rng)?;
    let q = atom(rng)?;
    let (pv, qv) = (p.value(), q.value());

    let wpq = transition_probability(&p, &q)?;
    let wqp = transition_probability(&q, &p)?;
    pr.close(ctx, "transition-symmetry", (wpq - wqp).abs(), Tier::Base, 1.0, &[pv, qv]);
    pr.within("transition-range", (-wpq).max(wpq - 1.0).max(0.0), eps, &[pv, qv]);
    let law = (&sharp_prod(pv, qv)? - &pv.scale(wpq)).ref_norm();
    pr.close(ctx, "product-law", law, Tier::Chained, 1.0, &[pv, qv]);
    pr.holds("zero-iff-orthogonal", (wpq <= eps) == orthogonal(&p, &q, tol)?, &[pv, qv]);

    let frame = random_frame(d, rng);
    if frame.len() >= 2 {
        let i = rng.random_range(0..frame.len());
        let j = (i + rng.random_range(1..frame.len())) % frame.len();
        let a = SharpEffect::new(frame[i].clone(), tol)?;
        let b = SharpEffect::new(frame[j].clone(), tol)?;
        let w = transition_probability(&a, &b)?;
        pr.close(ctx, "orthogonal-atoms-zero", w.abs(), Tier::Base, 1.0, &[a.value(), b.value()]);
    }

    let state = pure_state_of(&p)?;
    let alt = pure_state_by_inner(&p)?;
    let x = random_element(d, rng);
    pr.close(ctx, "pure-state-unique", (state.eval(&x)? - alt.eval(&x)?).abs(), Tier::Base, x.ref_norm(), &[pv, &x]);
    let norm = (state.eval(pv)? - 1.0).abs() + state.normalization_defect() + state.eval(&pv.complement())?.abs();
    pr.close(ctx, "pure-state-normalized", norm, Tier::Base, 1.0, &[pv]);
    pr.nonnegative("pure-state-positive", state.min_on_effects()?, eps, &[pv]);

    let form = build_self_dual_inner(d, FrameChoice::Seeded(rng.random()), tol);
    let other = build_self_dual_inner(d, FrameChoice::Seeded(rng.random()), tol);
    let a = random_element(d, rng);
    let b = random_element(d, rng);
    let ab = form.inner(&a, &b)?;
    let s = a.ref_norm() * b.ref_norm();
    pr.close(ctx, "form-matches-reference", (ab - a.inner(&b)?).abs(), Tier::Base, s, &[&a, &b]);
    pr.close(ctx, "form-frame-independent", (ab - other.inner(&a, &b)?).abs(), Tier::Base, s, &[&a, &b]);
    pr.close(ctx, "form-symmetric", (ab - form.inner(&b, &a)?).abs(), Tier::Base, s, &[&a, &b]);
    let squares: f64 = a.spectrum()?.iter().map(|l| l * l).sum();
    pr.close(ctx, "norm-is-eigen-sum", (form.inner(&a, &a)? - squares).abs(), Tier::Base, squares, &[&a]);

    let e = random_effect(d, rng, profile(k));
    let f = random_effect(d, rng, profile(k + 1));
    pr.nonnegative("self-dual-forward", form.inner(&e, &f)?, eps, &[&e, &f]);
    for z in [&a, &e] {
        let pairing = form.min_frame_pairing(z)?;
        let positive = z.min_eigenvalue()? >= -eps;
        pr.holds("self-dual-backward", (pairing >= -eps) == positive, &[z]);
    }

    let diff = &a - &b;
    let mut best = 0.0f64;
    let mut candidates: Vec<_> = (0..4).map(|_| random_effect(d, rng, Profile::Atomic)).collect();
    candidates.extend(spectral::atomic_spectral::<ChaCha8Rng>(&diff, tol, None)?.into_iter().map(|(_, p)| p));
    for c in candidates {
        let w = pure_state_of(&SharpEffect::new(c, tol)?)?;
        best = best.max((w.eval(&a)? - w.eval(&b)?).abs());
    }
    pr.holds("state-separation", best > diff.ref_norm() / ctx.dim() as f64 * (1.0 - 1e-9), &[&a, &b]);
    Ok(())
}

pub(super) fn gram(ctx: &Ctx, rng: &mut ChaCha8Rng, _samples: usize, pr: &mut Probe) -> Result<()> {
    let form = build_self_dual_inner(&ctx.desc, FrameChoice::Seeded(rng.random()), &ctx.tol);
    let min = form.gram_min_eigenvalue()?;
    pr.metric("gram-positive-definite/min-eigenvalue", min);
    pr.holds("gram-positive-definite", min > 1e-8, &[]);
    Ok(())
}
