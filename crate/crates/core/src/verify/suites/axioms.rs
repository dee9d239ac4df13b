use rand_chacha::ChaCha8Rng;

use super::{clustered_effect, orthogonal_effects, pinch, profile, scale, shared_frame_effects};
use crate::element::Element;
use crate::error::Result;
use crate::random::{random_effect, Profile};
use crate::seqprod::{compatibility_defect, seq_prod};
use crate::tolerance::Tier;
use crate::verify::{Ctx, Probe};

pub(super) fn axioms(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let a = random_effect(d, rng, profile(k));
    let b = random_effect(d, rng, Profile::Generic).scale(0.5);
    let c = random_effect(d, rng, profile(k + 2)).scale(0.5);

    let lhs = seq_prod(&a, &(&b + &c), tol)?;
    let rhs = &seq_prod(&a, &b, tol)? + &seq_prod(&a, &c, tol)?;
    pr.close(ctx, "S1", (&lhs - &rhs).ref_norm(), Tier::Base, 1.0, &[&a, &b, &c]);

    // Hölder-½ probe along a → a2; reported, never asserted.
    let a2 = random_effect(d, rng, Profile::Generic);
    let ab = seq_prod(&a, &b, tol)?;
    for n in 1..=8 {
        let t = 0.5f64.powi(n);
        let an = &a + &(&a2 - &a).scale(t);
        let moved = (&seq_prod(&an, &b, tol)? - &ab).ref_norm();
        let step = (&an - &a).ref_norm();
        if step > 0.0 {
            pr.metric("S2-holder/constant", moved / (step.sqrt() * b.ref_norm().max(1e-300)));
        }
        if n == 8 {
            pr.metric("S2-holder/residual", moved);
        }
    }

    let one = a.unit_like();
    pr.close(ctx, "S3", (&seq_prod(&one, &a, tol)? - &a).ref_norm(), Tier::Base, 1.0, &[&a]);

    let (x, y) = orthogonal_effects(d, rng);
    let xy = seq_prod(&x, &y, tol)?.ref_norm();
    if xy <= ctx.eps(Tier::Base, 1.0) {
        let yx = seq_prod(&y, &x, tol)?.ref_norm();
        pr.close(ctx, "S4", yx, Tier::Chained, 1.0, &[&x, &y]);
    } else {
        pr.metric("S4/antecedent-miss", xy);
    }

    let pair = shared_frame_effects(d, rng, 2);
    let (x, y) = (&pair[0], &pair[1]);
    let lhs = seq_prod(x, &seq_prod(y, &c, tol)?, tol)?;
    let rhs = seq_prod(&seq_prod(x, y, tol)?, &c, tol)?;
    pr.close(ctx, "S5", (&lhs - &rhs).ref_norm(), Tier::Chained, 1.0, &[x, y, &c]);

    let trio = shared_frame_effects(d, rng, 3);
    let (x, y, z) = (&trio[0], &trio[1].scale(0.5), &trio[2].scale(0.5));
    pr.close(ctx, "S6-complement", compatibility_defect(x, &y.complement(), tol)?, Tier::Chained, 1.0, &[x, y]);
    pr.close(ctx, "S6-sum", compatibility_defect(x, &(y + z), tol)?, Tier::Chained, 1.0, &[x, y, z]);

    let a = clustered_effect(d, rng);
    let b = pinch(&a, &random_effect(d, rng, Profile::Generic), tol)?;
    let c = pinch(&a, &random_effect(d, rng, profile(k + 1)), tol)?;
    pr.metric("S7/antecedent-defect", compatibility_defect(&a, &b, tol)?.max(compatibility_defect(&a, &c, tol)?));
    let bc = seq_prod(&b, &c, tol)?;
    pr.close(ctx, "S7", compatibility_defect(&a, &bc, tol)?, Tier::Chained, scale(&[&bc]), &[&a, &b, &c]);
    Ok(())
}

/// `a ∣ b, a ∣ c, b ∣ c ⟹ a ∣ (b & c)` through associativity steps alone.
pub(super) fn derived_weak_s7(ctx: &Ctx, rng: &mut ChaCha8Rng, _k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let a = clustered_effect(d, rng);
    let b = pinch(&a, &random_effect(d, rng, Profile::Generic), tol)?;
    let c = pinch(&b, &pinch(&a, &random_effect(d, rng, Profile::Generic), tol)?, tol)?;
    let sp = |x: &Element, y: &Element| seq_prod(x, y, tol);
    let chain = [
        sp(&a, &sp(&b, &c)?)?,
        sp(&sp(&a, &b)?, &c)?,
        sp(&sp(&b, &a)?, &c)?,
        sp(&b, &sp(&a, &c)?)?,
        sp(&b, &sp(&c, &a)?)?,
        sp(&sp(&b, &c)?, &a)?,
    ];
    let worst = chain
        .windows(2)
        .map(|w| (&w[0] - &w[1]).ref_norm())
        .fold(0.0, f64::max);
    pr.close(ctx, "S5-chain", worst, Tier::Chained, 1.0, &[&a, &b, &c]);
    let bc = sp(&b, &c)?;
    pr.close(ctx, "weak-S7", compatibility_defect(&a, &bc, tol)?, Tier::Chained, 1.0, &[&a, &b, &c]);
    Ok(())
}
