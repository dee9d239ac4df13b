//! Spectral decomposition, functional calculus, ceiling and floor.
//!
//! $ cargo run --example spectral_calculus

use nalgebra::dmatrix;
use seqlab::element::Element;
use seqlab::spectral::{ceiling, floor, inverse, power, spectral_decompose, sqrt};
use seqlab::tolerance::Tolerances;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    // Eigenvalues 0, 0.5, 0.5 and 1: a repeated eigenvalue forms one term.
    let a = Element::real(dmatrix![
        0.5, 0.0, 0.0, 0.0;
        0.0, 0.75, 0.25, 0.0;
        0.0, 0.25, 0.75, 0.0;
        0.0, 0.0, 0.0, 0.0
    ])?;
    let form = spectral_decompose(&a, &tol)?;
    for t in form.terms() {
        println!("lambda = {:.6}  multiplicity = {}", t.lambda, t.multiplicity);
    }
    println!("reconstruction residual = {:e}", (&form.reconstruct() - &a).ref_norm());

    let r = sqrt(&a, &tol)?;
    println!("|sqrt(a)^2 - a| = {:e}", (&r.square() - &a).ref_norm());
    println!("|a^3 - a.a.a| = {:e}", (&power(&a, 3, &tol)? - &a.square().jordan_mul(&a)?).ref_norm());

    let ceil = ceiling(&a, &tol)?;
    let fl = floor(&a, &tol)?;
    println!("ceiling spectrum = {:?}", ceil.spectrum()?);
    println!("floor spectrum = {:?}", fl.spectrum()?);
    println!("|ceil(a/2) - ceil(a)| = {:e}", (&ceiling(&a.scale(0.5), &tol)? - &ceil).ref_norm());

    match inverse(&a, &tol) {
        Ok(_) => println!("a is invertible"),
        Err(e) => println!("inverse refused: {e}"),
    }
    Ok(())
}
