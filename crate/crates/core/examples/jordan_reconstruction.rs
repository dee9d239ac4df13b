//! Recover the Jordan product from the sequential product alone and check
//! the operator identities it satisfies.
//!
//! $ cargo run --example jordan_reconstruction

use seqlab::descriptor::AlgebraDescriptor;
use seqlab::lattice::SharpEffect;
use seqlab::random::{random_effect, random_element, Profile};
use seqlab::reconstruct::{atom_jordan, reconstructed_mul, verify_t_commutation};
use seqlab::tolerance::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    println!(
        "{:<18} {:>12} {:>12} {:>12}",
        "algebra", "|a*b - a.b|", "|p*b - p.b|", "|[Ta,Taa]|"
    );
    for d in AlgebraDescriptor::default_zoo() {
        let a = random_element(&d, &mut rng);
        let b = random_element(&d, &mut rng);
        let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?;
        let t = verify_t_commutation(&a, &b, &tol)?;
        println!(
            "{:<18} {:>12.2e} {:>12.2e} {:>12.2e}",
            d.to_string(),
            (&reconstructed_mul(&a, &b, &tol)? - &a.jordan_mul(&b)?).ref_norm(),
            (&atom_jordan(&p, &b)? - &p.value().jordan_mul(&b)?).ref_norm(),
            t.jordan_identity,
        );
    }
    Ok(())
}
