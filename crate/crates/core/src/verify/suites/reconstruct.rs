use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{scale, shared_frame_effects};
use crate::duality::{build_self_dual_inner, FrameChoice};
use crate::element::Element;
use crate::error::Result;
use crate::lattice::{join, SharpEffect};
use crate::random::{random_effect, random_element, random_frame, random_strictly_positive, Profile};
use crate::reconstruct::{atom_jordan, positive_negative_split, t_apply_by_parts, verify_t_commutation, ReconstructedProduct};
use crate::seqprod::{left_mult_map, seq_prod, sharp_prod, LinearMap};
use crate::tolerance::Tier;
use crate::verify::{Ctx, Probe};

pub(super) fn reconstruction(ctx: &Ctx, rng: &mut ChaCha8Rng, _k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let prod = ReconstructedProduct::new(d, tol);
    let a = random_element(d, rng);
    let b = random_element(d, rng);
    let c = random_element(d, rng);
    let s = scale(&[&a, &b, &c]);

    let ab = prod.mul(&a, &b)?;
    pr.close(ctx, "matches-jordan", (&ab - &a.jordan_mul(&b)?).ref_norm(), Tier::Chained, s * s, &[&a, &b]);
    pr.close(ctx, "commutative", (&ab - &prod.mul(&b, &a)?).ref_norm(), Tier::Chained, s * s, &[&a, &b]);
    let (al, be): (f64, f64) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    let lhs = prod.mul(&(&a.scale(al) + &c.scale(be)), &b)?;
    let rhs = &ab.scale(al) + &prod.mul(&c, &b)?.scale(be);
    pr.close(ctx, "bilinear", (&lhs - &rhs).ref_norm(), Tier::Chained, 4.0 * s * s, &[&a, &b, &c]);
    let seeded = ReconstructedProduct::with_frame_seed(d, rng.random(), tol).mul(&a, &b)?;
    pr.within("frame-independent", (&ab - &seeded).ref_norm(), 2.0 * ctx.eps(Tier::Base, s * s), &[&a, &b]);
    let one = a.unit_like();
    pr.close(ctx, "unit-identity", (&prod.mul(&one, &b)? - &b).ref_norm(), Tier::Base, s, &[&b]);

    let atom = |rng: &mut ChaCha8Rng| SharpEffect::new(random_effect(d, rng, Profile::Atomic), tol);
    let p = atom(rng)?;
    let q = atom(rng)?;
    let (pv, qv) = (p.value(), q.value());
    pr.close(ctx, "atom-idempotent", (&atom_jordan(&p, pv)? - pv).ref_norm(), Tier::Base, 1.0, &[pv]);
    pr.close(ctx, "atom-unit", (&atom_jordan(&p, &one)? - pv).ref_norm(), Tier::Base, 1.0, &[pv]);

    let frame = random_frame(d, rng);
    if frame.len() >= 2 {
        let o = SharpEffect::new(frame[0].clone(), tol)?;
        let killed = atom_jordan(&o, &frame[1])?.ref_norm();
        pr.close(ctx, "orthogonal-annihilation", killed, Tier::Base, 1.0, &[o.value(), &frame[1]]);
    }

    if (pv - qv).ref_norm() > 1e-6 {
        let j = join(&p, &q, tol)?;
        let pp = j.value() - pv;
        let twice = atom_jordan(&p, qv)?.scale(2.0);
        let ip = pv.inner(qv)?;
        let chain = &(qv + &pv.scale(ip)) - &pp.scale(pp.inner(qv)?);
        pr.close(ctx, "distinct-atoms-closed-form", (&twice - &chain).ref_norm(), Tier::Chained, 1.0, &[pv, qv]);
        let closed = &(qv + pv) - &j.value().scale(1.0 - ip);
        pr.close(ctx, "distinct-atoms-final-form", (&twice - &closed).ref_norm(), Tier::Chained, 1.0, &[pv, qv]);
        let restrict = (&sharp_prod(&pv.complement(), qv)? - &sharp_prod(&pp, qv)?).ref_norm();
        pr.close(ctx, "restriction-law", restrict, Tier::Chained, 1.0, &[pv, qv]);
    }

    let aa = prod.mul(&a, &a)?;
    let (plus, minus) = positive_negative_split(&a, tol)?;
    let by_parts = &seq_prod(&plus, &a, tol)? - &seq_prod(&minus, &a, tol)?;
    let squares = &plus.square() + &minus.square();
    let res = (&aa - &by_parts).ref_norm().max((&aa - &squares).ref_norm());
    pr.close(ctx, "square-by-parts", res, Tier::Chained, s * s, &[&a]);
    pr.nonnegative("formal-reality", aa.min_eigenvalue()?, ctx.eps(Tier::Chained, s * s), &[&a]);

    let form = build_self_dual_inner(d, FrameChoice::Eigen, tol);
    let left = form.inner(&ab, &c)?;
    let right = form.inner(&b, &prod.mul(&a, &c)?)?;
    pr.close(ctx, "symmetric-product", (left - right).abs(), Tier::Chained, s.powi(3), &[&a, &b, &c]);

    let inv = random_strictly_positive(d, rng, 0.1);
    let l = left_mult_map(&inv, tol)?;
    let lm = l.as_linear_map();
    pr.close(ctx, "left-mult-self-adjoint", lm.distance_to(&lm.adjoint()), Tier::Chained, 1.0, &[&inv]);
    Ok(())
}

pub(super) fn t_commutation(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize, pr: &mut Probe) -> Result<()> {
    let (d, tol) = (&ctx.desc, &ctx.tol);
    let pair = shared_frame_effects(d, rng, 2);
    let (a, b) = (&pair[0].scale(2.0) - &pair[0].unit_like(), &pair[1]);
    let report = verify_t_commutation(&a, b, tol)?;
    pr.close(ctx, "compatible-commute", report.commutator, Tier::Chained, 1.0, &[&a, b]);

    let x = random_element(d, rng);
    let y = random_element(d, rng);
    let s = scale(&[&x, &y]);
    let report = verify_t_commutation(&x, &y, tol)?;
    pr.close(ctx, "jordan-identity-operator", report.jordan_identity, Tier::Chained, s.powi(3), &[&x]);
    let direct = ReconstructedProduct::new(d, tol).t_operator(&a)?.apply(b)?;
    pr.close(ctx, "by-parts", (&direct - &t_apply_by_parts(&a, b, tol)?).ref_norm(), Tier::Chained, 1.0, &[&a, b]);

    if k == 0 {
        let t = ReconstructedProduct::new(d, tol).t_operator(&Element::unit(d))?;
        pr.close(ctx, "unit-identity", t.distance_to(&LinearMap::identity(d)), Tier::Base, 1.0, &[]);
    }
    Ok(())
}
