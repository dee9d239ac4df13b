//! Suite bodies. Each sample function draws its own inputs from the
//! generator it is handed; antecedents of implications are built
//! constructively (shared frames, pinching) rather than rejection-sampled.

mod algebra;
mod axioms;
mod duality;
mod lattice;
mod loctom;
mod reconstruct;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{GlobalFn, SampleFn};
use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::Result;
use crate::random::{combine, random_frame, Profile};
use crate::seqprod;
use crate::spectral;
use crate::tolerance::Tolerances;

pub(crate) struct SuiteFns {
    pub sample: Option<SampleFn>,
    pub global: Option<GlobalFn>,
}

pub(crate) fn lookup(name: &str) -> Option<SuiteFns> {
    let s = |f: SampleFn| SuiteFns { sample: Some(f), global: None };
    Some(match name {
        "axioms-S1..S7" => s(axioms::axioms),
        "derived-weak-S7" => s(axioms::derived_weak_s7),
        "basic-laws" => s(algebra::basic_laws),
        "jordan-algebra" => s(algebra::jordan_algebra),
        "sharpness" => s(algebra::sharpness),
        "classical-algebra" => s(algebra::classical_algebra),
        "homogeneity" => s(algebra::homogeneity),
        "spectral" => s(algebra::spectral),
        "lattice" => s(lattice::lattice),
        "rank" => s(lattice::rank),
        "duality" => SuiteFns {
            sample: Some(duality::duality),
            global: Some(duality::gram),
        },
        "reconstruction" => s(reconstruct::reconstruction),
        "t-commutation" => s(reconstruct::t_commutation),
        "tensor" => SuiteFns {
            sample: None,
            global: Some(loctom::tensor),
        },
        "table" => SuiteFns {
            sample: None,
            global: Some(loctom::table),
        },
        _ => return None,
    })
}

/// Profiles cycle with the sample index so every run covers all of them.
fn profile(k: usize) -> Profile {
    Profile::ALL[k % Profile::ALL.len()]
}

/// Effects sharing one random frame, hence pairwise compatible.
fn shared_frame_effects(desc: &AlgebraDescriptor, rng: &mut ChaCha8Rng, count: usize) -> Vec<Element> {
    let frame = random_frame(desc, rng);
    (0..count)
        .map(|_| {
            let spec: Vec<f64> = (0..frame.len()).map(|_| rng.random()).collect();
            combine(&frame, &spec)
        })
        .collect()
}

/// Effects supported on complementary parts of one frame, so `a & b = 0`.
fn orthogonal_effects(desc: &AlgebraDescriptor, rng: &mut ChaCha8Rng) -> (Element, Element) {
    let frame = random_frame(desc, rng);
    let side: Vec<bool> = (0..frame.len()).map(|_| rng.random_bool(0.5)).collect();
    let mut spec_a = Vec::with_capacity(frame.len());
    let mut spec_b = Vec::with_capacity(frame.len());
    for &left in &side {
        let v = rng.random_range(0.05..1.0);
        spec_a.push(if left { v } else { 0.0 });
        spec_b.push(if left { 0.0 } else { v });
    }
    (combine(&frame, &spec_a), combine(&frame, &spec_b))
}

/// An effect whose spectrum takes at most two values, so its eigenspaces
/// are usually degenerate.
fn clustered_effect(desc: &AlgebraDescriptor, rng: &mut ChaCha8Rng) -> Element {
    let frame = random_frame(desc, rng);
    let values = [rng.random::<f64>(), rng.random::<f64>()];
    let spec: Vec<f64> = (0..frame.len()).map(|_| values[rng.random_range(0..2)]).collect();
    combine(&frame, &spec)
}

/// `Σᵢ Pᵢ & x` over the eigenprojections of `a`; the result is compatible
/// with `a` and is an effect when `x` is.
fn pinch(a: &Element, x: &Element, tol: &Tolerances) -> Result<Element> {
    let form = spectral::spectral_decompose_with(a, tol, true)?;
    let mut acc = x.zero_like();
    for t in form.terms() {
        acc = &acc + &seqprod::sharp_prod(&t.idempotent, x)?;
    }
    Ok(acc)
}

/// `max(1, ‖x‖)` over the operands.
fn scale(xs: &[&Element]) -> f64 {
    xs.iter().map(|x| x.ref_norm()).fold(1.0, f64::max)
}

/// `min eig(b − a)`, nonnegative when `a ≼ b`.
fn order_gap(a: &Element, b: &Element) -> Result<f64> {
    (b - a).min_eigenvalue()
}
