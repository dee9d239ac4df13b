//! Pure states from atoms, symmetric transition probabilities and the
//! self-dual inner product built from them.
//!
//! $ cargo run --example pure_states

use seqlab::descriptor::AlgebraDescriptor;
use seqlab::duality::{build_self_dual_inner, pure_state_of, transition_probability, FrameChoice};
use seqlab::lattice::SharpEffect;
use seqlab::random::{random_effect, Profile};
use seqlab::tolerance::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in AlgebraDescriptor::default_zoo() {
        let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?;
        let q = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?;
        let wp = pure_state_of(&p)?;
        let wq = pure_state_of(&q)?;
        let a = random_effect(&d, &mut rng, Profile::Generic);
        let b = random_effect(&d, &mut rng, Profile::Generic);
        let form = build_self_dual_inner(&d, FrameChoice::Eigen, &tol);
        println!(
            "{:<18} w_p(q) = {:.6}  w_q(p) = {:.6}  <p,q> = {:.6}  |<a,b>' - <a,b>| = {:.1e}  gram min = {:.3e}",
            d.to_string(),
            wp.eval(q.value())?,
            wq.eval(p.value())?,
            transition_probability(&p, &q)?,
            (form.inner(&a, &b)? - a.inner(&b)?).abs(),
            form.gram_min_eigenvalue()?,
        );
    }
    Ok(())
}
