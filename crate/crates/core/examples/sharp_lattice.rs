//! Sharp effects form a lattice: joins, meets, atomic decompositions,
//! rank and the covering property.
//!
//! $ cargo run --example sharp_lattice

use seqlab::descriptor::AlgebraDescriptor;
use seqlab::element::Element;
use seqlab::lattice::{atomic_decomposition, covering_check, join, meet, orthogonal, rank_of, SharpEffect};
use seqlab::random::{random_effect, Profile};
use seqlab::tolerance::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in ["real:3", "complex:3", "quat:2", "spin:5", "complex:2+spin:3"] {
        let d: AlgebraDescriptor = d.parse()?;
        let unit = SharpEffect::new(Element::unit(&d), &tol)?;
        let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?;
        let q = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?;
        let pq = join(&p, &q, &tol)?;
        let m = meet(&p, &q, &tol)?;
        let cover = covering_check(&pq, &SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol)?, &tol)?;
        println!(
            "{:<18} rank(1) = {}  rank(p v q) = {}  rank(p ^ q) = {}  p _|_ p' = {}  covering: {:?}",
            d.to_string(),
            rank_of(&unit, &tol)?,
            rank_of(&pq, &tol)?,
            rank_of(&m, &tol)?,
            orthogonal(&p, &p.complement(&tol)?, &tol)?,
            cover.case,
        );
    }

    let d: AlgebraDescriptor = "complex:4".parse()?;
    let s = SharpEffect::new(random_effect(&d, &mut rng, Profile::Sharp), &tol)?;
    let atoms = atomic_decomposition(&s, &tol)?;
    println!(
        "\n{} atoms in a random sharp effect of complex:4, |sum - p| = {:e}, max overlap = {:e}",
        atoms.len(),
        atoms.sum_residual(),
        atoms.max_overlap()?,
    );
    Ok(())
}
