//! The sequential product a & b = U_sqrt(a) b on qubit effects, its failure
//! to commute, and compatibility.
//!
//! $ cargo run --example sequential_product

use nalgebra::dmatrix;
use seqlab::element::Element;
use seqlab::linalg::c;
use seqlab::seqprod::{compatibility_defect, is_compatible, seq_prod};
use seqlab::tolerance::Tolerances;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    let z = Element::complex(dmatrix![c(1.0, 0.0), c(0.0, 0.0); c(0.0, 0.0), c(0.0, 0.0)])?;
    let x = Element::complex(dmatrix![c(0.5, 0.0), c(0.5, 0.0); c(0.5, 0.0), c(0.5, 0.0)])?;
    let half = z.unit_like().scale(0.5);

    // Measuring "spin up along z" then "spin up along x" is not the reverse order.
    let zx = seq_prod(&z, &x, &tol)?;
    let xz = seq_prod(&x, &z, &tol)?;
    println!("z & x spectrum = {:?}", zx.spectrum()?);
    println!("x & z spectrum = {:?}", xz.spectrum()?);
    println!("compatibility defect of (z, x) = {:.6}", compatibility_defect(&z, &x, &tol)?);
    println!("z | x: {}", is_compatible(&z, &x, &tol)?);
    println!("z | 1/2: {}", is_compatible(&z, &half, &tol)?);

    // Additivity in the second argument and the unit law.
    let sum = seq_prod(&x, &(&z.scale(0.3) + &half.scale(0.4)), &tol)?;
    let parts = &seq_prod(&x, &z, &tol)?.scale(0.3) + &seq_prod(&x, &half, &tol)?.scale(0.4);
    println!("additivity residual = {:e}", (&sum - &parts).ref_norm());
    println!("|1 & x - x| = {:e}", (&seq_prod(&x.unit_like(), &x, &tol)? - &x).ref_norm());
    Ok(())
}
