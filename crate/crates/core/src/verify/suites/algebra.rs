use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{order_gap, profile, scale, shared_frame_effects};
use crate::element::Element;
use crate::error::Result;
use crate::random::{combine, random_effect, random_element, random_frame, random_strictly_positive, Profile};
use crate::seqprod::{compatibility_defect, homogeneity_iso, left_mult_map, seq_prod, LinearMap};
use crate::spectral::{self, ceiling, floor, inverse, is_sharp, power, sqrt_effect};
use crate::tolerance::Tier;
use crate::verify::{Ctx, Probe};

pub(super) fn basic_laws(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let a = random_effect(d, rng, profile(k));
    let b = random_effect(d, rng, profile(k + 1));
    let c = random_effect(d, rng, Profile::Generic);
    let (zero, one) = (a.zero_like(), a.unit_like());
    let eps = ctx.eps(Tier::Base, 1.0);

    let z = seq_prod(&a, &zero, tol)?.ref_norm() + seq_prod(&zero, &a, tol)?.ref_norm();
    pr.close(ctx, "zero-law", z, Tier::Base, 1.0, &[&a]);
    let u = (&seq_prod(&a, &one, tol)? - &a).ref_norm() + (&seq_prod(&one, &a, tol)? - &a).ref_norm();
    pr.close(ctx, "unit-law", u, Tier::Base, 1.0, &[&a]);

    let ab = seq_prod(&a, &b, tol)?;
    pr.nonnegative("decreasing", order_gap(&ab, &a)?, eps, &[&a, &b]);
    pr.nonnegative("effect-closure", ab.min_eigenvalue()?.min(1.0 - ab.order_unit_norm()?), eps, &[&a, &b]);

    let below = seq_prod(&b, &c, tol)?;
    let gap = order_gap(&seq_prod(&a, &below, tol)?, &ab)?;
    pr.nonnegative("order-preserving", gap, ctx.eps(Tier::Chained, 1.0), &[&a, &below, &b]);

    let lambda: f64 = rng.random();
    let left = seq_prod(&a.scale(lambda), &b, tol)?;
    let right = seq_prod(&a, &b.scale(lambda), tol)?;
    let scaled = ab.scale(lambda);
    pr.close(ctx, "scalar-left", (&left - &scaled).ref_norm(), Tier::Base, 1.0, &[&a, &b]);
    pr.close(ctx, "scalar-right", (&right - &scaled).ref_norm(), Tier::Base, 1.0, &[&a, &b]);

    let pair = shared_frame_effects(d, rng, 2);
    let defect = compatibility_defect(&pair[0], &pair[1].scale(lambda), tol)?;
    pr.close(ctx, "scalar-compatible", defect, Tier::Chained, 1.0, &[&pair[0], &pair[1]]);

    let lm = left_mult_map(&a, tol)?;
    let x = random_element(d, rng);
    let direct = seq_prod(&a, &x, tol)?;
    pr.close(ctx, "left-mult-linear", (&lm.apply(&x)? - &direct).ref_norm(), Tier::Chained, scale(&[&x]), &[&a, &x]);
    pr.nonnegative("left-mult-positive", lm.apply(&c)?.min_eigenvalue()?, eps, &[&a, &c]);

    let s = random_strictly_positive(d, rng, 0.1);
    let s_inv = inverse(&s, tol)?;
    let composed = left_mult_map(&s_inv, tol)?.as_linear_map().compose(left_mult_map(&s, tol)?.as_linear_map());
    let cond = s.order_unit_norm()? * s_inv.order_unit_norm()?;
    pr.close(ctx, "left-mult-inverse", composed.distance_to(&LinearMap::identity(d)), Tier::Chained, cond, &[&s]);
    Ok(())
}

pub(super) fn jordan_algebra(ctx: &Ctx, rng: &mut ChaCha8Rng, _k: usize, pr: &mut Probe) -> Result<()> {
    let d = &ctx.desc;
    let a = random_element(d, rng);
    let b = random_element(d, rng);
    let c = random_element(d, rng);
    let s = scale(&[&a, &b, &c]);
    let (al, be): (f64, f64) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));

    let ab = a.jordan_mul(&b)?;
    pr.close(ctx, "commutative", (&ab - &b.jordan_mul(&a)?).ref_norm(), Tier::Base, s * s, &[&a, &b]);

    let lhs = (&a.scale(al) + &b.scale(be)).jordan_mul(&c)?;
    let rhs = &a.jordan_mul(&c)?.scale(al) + &b.jordan_mul(&c)?.scale(be);
    pr.close(ctx, "bilinear", (&lhs - &rhs).ref_norm(), Tier::Base, 4.0 * s * s, &[&a, &b, &c]);

    let aa = a.square();
    let lhs = a.jordan_mul(&b.jordan_mul(&aa)?)?;
    let rhs = ab.jordan_mul(&aa)?;
    pr.close(ctx, "jordan-identity", (&lhs - &rhs).ref_norm(), Tier::Base, s.powi(4), &[&a, &b]);

    let left = ab.inner(&c)?;
    let right = b.inner(&a.jordan_mul(&c)?)?;
    pr.close(ctx, "trace-associative", (left - right).abs(), Tier::Base, s.powi(3), &[&a, &b, &c]);

    pr.nonnegative("formal-reality", aa.min_eigenvalue()?, ctx.eps(Tier::Base, s * s), &[&a]);
    pr.holds("formal-reality", a.ref_norm() == 0.0 || aa.trace() > 0.0, &[&a]);

    // Bisection on −r·1 ≼ a ≼ r·1.
    let one = a.unit_like();
    let inside = |r: f64| -> Result<bool> {
        Ok((&one.scale(r) - &a).min_eigenvalue()? >= 0.0 && (&a + &one.scale(r)).min_eigenvalue()? >= 0.0)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    while !inside(hi)? {
        hi *= 2.0;
    }
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if inside(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    pr.within("order-unit-norm", (a.order_unit_norm()? - hi).abs(), 1e-6, &[&a]);
    Ok(())
}

pub(super) fn sharpness(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let a = random_effect(d, rng, profile(k));
    let idem = (&seq_prod(&a, &a, tol)? - &a).ref_norm();
    let annihilate = seq_prod(&a, &a.complement(), tol)?.ref_norm();
    pr.close(ctx, "sharp-equivalence", (idem - annihilate).abs(), Tier::Base, 1.0, &[&a]);

    let p = random_effect(d, rng, Profile::Sharp);
    pr.holds("sharp-certified", is_sharp(&p, tol)?, &[&p]);
    if p.ref_norm() > 0.5 {
        pr.holds("half-not-sharp", !is_sharp(&p.scale(0.5), tol)?, &[&p]);
    }

    let frame = random_frame(d, rng);
    let spec: Vec<f64> = (0..frame.len()).map(|_| rng.random_range(0.1..0.9)).collect();
    let g = combine(&frame, &spec);
    pr.holds("interior-not-sharp", !is_sharp(&g, tol)?, &[&g]);

    let side: Vec<f64> = (0..frame.len()).map(|_| if rng.random_bool(0.5) { 1.0 } else { 0.0 }).collect();
    let p = combine(&frame, &side);
    let q = p.complement();
    let pq = seq_prod(&p, &q, tol)?.ref_norm();
    let qp = seq_prod(&q, &p, tol)?.ref_norm();
    pr.close(ctx, "orthogonal-symmetric", pq.max(qp), Tier::Base, 1.0, &[&p, &q]);
    Ok(())
}

pub(super) fn classical_algebra(ctx: &Ctx, rng: &mut ChaCha8Rng, _k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    // Well separated spectra keep the power basis well conditioned.
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let frame = random_frame(d, rng);
    let spec: Vec<f64> = (0..frame.len()).map(|_| grid[rng.random_range(0..grid.len())]).collect();
    let a = combine(&frame, &spec);
    let report = spectral::classical_algebra_check(&a, None, 4, tol, rng)?;
    pr.close(ctx, "classical-commutative", report.max_commutator, Tier::Chained, 1.0, &[&a]);
    pr.close(ctx, "classical-associative", report.max_associator, Tier::Chained, 1.0, &[&a]);
    pr.holds("classical-dimension", report.dimension_matches(), &[&a]);

    let mut repeated = a.unit_like();
    for _ in 0..3 {
        repeated = seq_prod(&a, &repeated, tol)?;
    }
    pr.close(ctx, "power-recursion", (&power(&a, 3, tol)? - &repeated).ref_norm(), Tier::Chained, 1.0, &[&a]);
    Ok(())
}

pub(super) fn homogeneity(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let a = random_strictly_positive(d, rng, 0.1);
    let b = random_strictly_positive(d, rng, 0.1);
    let iso = homogeneity_iso(&a, &b, tol)?;
    let cond = |x: &Element| -> Result<f64> { Ok(x.order_unit_norm()? * inverse(x, tol)?.order_unit_norm()?) };
    let s = cond(&a)? * cond(&b)?;
    pr.close(ctx, "maps-a-to-b", (&iso.apply(&a)? - &b).ref_norm(), Tier::Chained, s, &[&a, &b]);
    pr.close(ctx, "inverse-maps-b-to-a", (&iso.apply_inverse(&b)? - &a).ref_norm(), Tier::Chained, s, &[&a, &b]);
    let round = iso.inverse.compose(&iso.forward);
    pr.close(ctx, "inverse-composition", round.distance_to(&LinearMap::identity(d)), Tier::Chained, s, &[&a, &b]);

    let slack = ctx.eps(Tier::Chained, s);
    let (mut forward, mut backward) = (f64::INFINITY, f64::INFINITY);
    for i in 0..50 {
        let x = random_effect(d, rng, profile(k + i));
        forward = forward.min(iso.apply(&x)?.min_eigenvalue()?);
        backward = backward.min(iso.apply_inverse(&x)?.min_eigenvalue()?);
    }
    pr.nonnegative("preserves-positivity", forward, slack, &[&a, &b]);
    pr.nonnegative("reflects-positivity", backward, slack, &[&a, &b]);
    Ok(())
}

pub(super) fn spectral(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let eps = ctx.eps(Tier::Base, 1.0);
    let a = random_effect(d, rng, profile(k));
    let x = random_element(d, rng);

    for e in [&a, &x] {
        let form = spectral::spectral_decompose(e, tol)?;
        pr.close(ctx, "reconstruction", (&form.reconstruct() - e).ref_norm(), Tier::Base, 1.0, &[e]);
        let terms = form.terms();
        let (mut ortho, mut idem) = (0.0f64, 0.0f64);
        for (i, t) in terms.iter().enumerate() {
            idem = idem.max((&t.idempotent.square() - &t.idempotent).ref_norm());
            for u in &terms[i + 1..] {
                ortho = ortho.max(t.idempotent.jordan_mul(&u.idempotent)?.ref_norm());
            }
        }
        pr.close(ctx, "idempotent-orthogonality", ortho, Tier::Base, 1.0, &[e]);
        pr.close(ctx, "idempotent-sharpness", idem, Tier::Base, 1.0, &[e]);
        let separated = form.eigenvalues().windows(2).all(|w| (w[1] - w[0]).abs() >= tol.eig_cluster_gap);
        pr.holds("cluster-separation", separated, &[e]);
    }

    let r = sqrt_effect(&a, tol)?;
    pr.close(ctx, "sqrt-square", (&r.square() - &a).ref_norm(), Tier::Base, 1.0, &[&a]);
    pr.close(ctx, "power-two", (&power(&a, 2, tol)? - &seq_prod(&a, &a, tol)?).ref_norm(), Tier::Base, 1.0, &[&a]);

    let s = random_strictly_positive(d, rng, 0.1);
    let s_inv = inverse(&s, tol)?;
    let cond = s_inv.order_unit_norm()?;
    pr.close(ctx, "inverse", (&seq_prod(&s, &s_inv, tol)? - &s.unit_like()).ref_norm(), Tier::Chained, cond, &[&s]);

    let ceil = ceiling(&a, tol)?;
    let flo = floor(&a, tol)?;
    let dual = &a.unit_like() - &ceiling(&a.complement(), tol)?;
    pr.close(ctx, "ceiling-floor-duality", (&flo - &dual).ref_norm(), Tier::Base, 1.0, &[&a]);
    let lambda = rng.random_range(0.05..=1.0);
    pr.close(ctx, "ceiling-scaling", (&ceiling(&a.scale(lambda), tol)? - &ceil).ref_norm(), Tier::Base, 1.0, &[&a]);
    pr.nonnegative("ceiling-above", order_gap(&a, &ceil)?, eps, &[&a]);
    pr.nonnegative("floor-below", order_gap(&flo, &a)?, eps, &[&a]);
    pr.holds("ceiling-sharp", is_sharp(&ceil, tol)? && is_sharp(&flo, tol)?, &[&a]);

    let p = random_effect(d, rng, Profile::Sharp);
    let under = seq_prod(&p, &random_effect(d, rng, profile(k + 3)), tol)?;
    pr.nonnegative("ceiling-minimal", order_gap(&ceiling(&under, tol)?, &p)?, ctx.eps(Tier::Chained, 1.0), &[&p, &under]);
    Ok(())
}
