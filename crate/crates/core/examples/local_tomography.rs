//! Which algebras admit a locally tomographic composite with themselves,
//! and explicit tensor products of complex matrix algebras.
//!
//! $ cargo run --example local_tomography

use seqlab::descriptor::AlgebraDescriptor;
use seqlab::loctom::{explicit_tensor_checks, is_locally_tomographic_self_composite, simple_ejas_of_rank};
use seqlab::tolerance::Tolerances;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for d in ["complex:3", "real:3", "quat:2", "spin:5", "spin:3", "complex:2+complex:3", "complex:2+spin:5"] {
        let d: AlgebraDescriptor = d.parse()?;
        let r = is_locally_tomographic_self_composite(&d);
        let rows: Vec<String> = r
            .summands
            .iter()
            .map(|s| format!("{}: rank^2 {} dim^2 {} -> {}", s.factor, s.rank_squared, s.dim_squared, s.verdict))
            .collect();
        println!("{:<20} {:<6} [{}]", r.algebra, r.verdict, rows.join("; "));
    }

    println!("\nsimple algebras of rank 4: {:?}", dims(4, 64));
    println!("largest simple algebra of rank 9 has dimension {}", dims(9, 729).into_iter().max().unwrap_or(0));
    println!("simple algebras of rank 9 with dimension 729: {:?}", dims(9, 729).iter().filter(|&&n| n == 729).count());

    let report = explicit_tensor_checks(2, 2, 20, 0, &Tolerances::default())?;
    println!(
        "\ncomplex:2 (x) complex:2: product law {:.1e}, atom products {:.1e}, rank of unit {}, pass {}",
        report.product_law_residual,
        report.atom_product_residual,
        report.identity_rank,
        report.pass()
    );
    Ok(())
}

fn dims(rank: usize, limit: usize) -> Vec<usize> {
    simple_ejas_of_rank(rank, limit).iter().map(|r| r.dim).collect()
}
