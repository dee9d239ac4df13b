//! Parse descriptors, build elements and compare products in every family.
//!
//! $ cargo run --example algebra_zoo

use nalgebra::{dmatrix, dvector};
use seqlab::descriptor::AlgebraDescriptor;
use seqlab::element::Element;
use seqlab::random::{random_effect, Profile};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<18} {:>5} {:>5}", "algebra", "dim", "rank");
    for d in AlgebraDescriptor::default_zoo() {
        println!("{:<18} {:>5} {:>5}", d.to_string(), d.dimension(), d.rank());
    }

    for bad in ["real:0", "complex:2+", "oct:3", "spin:x"] {
        let err = bad.parse::<AlgebraDescriptor>().unwrap_err();
        println!("{bad:<12} rejected: {err}");
    }

    let a = Element::real(dmatrix![2.0, 1.0; 1.0, 2.0])?;
    let b = Element::real(dmatrix![1.0, 0.0; 0.0, 0.0])?;
    println!("\na = {:?}", a.spectrum()?);
    println!("a.b spectrum = {:?}", a.jordan_mul(&b)?.spectrum()?);
    println!("<a, b> = {}", a.inner(&b)?);

    // In a spin factor the two eigenvalues are t ± |v|.
    let s = Element::spin(dvector![0.3, 0.4, 0.0], 1.0)?;
    println!("spin (v = (0.3, 0.4, 0), t = 1) spectrum = {:?}", s.spectrum()?);

    let d: AlgebraDescriptor = "quat:2+spin:3".parse()?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let e = random_effect(&d, &mut rng, Profile::Generic);
    println!("\nrandom effect in {d}: spectrum {:?}", e.spectrum()?);
    println!("trace of unit = rank = {}", Element::unit(&d).trace());
    Ok(())
}
