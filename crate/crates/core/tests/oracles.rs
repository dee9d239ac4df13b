//! Values derived by hand, independent of the implementation.

use nalgebra::{dmatrix, dvector};
use seqlab::descriptor::{AlgebraDescriptor, SimpleFactor};
use seqlab::duality::transition_probability;
use seqlab::element::Element;
use seqlab::lattice::{join, meet, rank_of, SharpEffect};
use seqlab::linalg::c;
use seqlab::loctom::{is_locally_tomographic_self_composite, simple_ejas_of_rank, SimpleEjaRow};
use seqlab::seqprod::{homogeneity_iso, seq_prod};
use seqlab::spectral::{ceiling, floor, sqrt};
use seqlab::tolerance::Tolerances;
use seqlab::verify::hexfloat::format_hex;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn close(a: &Element, b: &Element, bound: f64) {
    let d = (a - b).ref_norm();
    assert!(d <= bound, "distance {d:e}");
}

fn real_atom(theta: f64) -> SharpEffect {
    let (s, c) = theta.sin_cos();
    SharpEffect::new(Element::real(dmatrix![c * c, c * s; c * s, s * s]).unwrap(), &tol()).unwrap()
}

#[test]
fn dimensions_and_ranks() {
    // n(n+1)/2, n², n(2n−1), d+1.
    let table = [
        ("real:3", 6, 3),
        ("complex:3", 9, 3),
        ("quat:3", 15, 3),
        ("spin:4", 5, 2),
        ("real:2+complex:2+spin:3", 11, 6),
    ];
    for (s, dim, rank) in table {
        let d: AlgebraDescriptor = s.parse().unwrap();
        assert_eq!((d.dimension(), d.rank()), (dim, rank), "{s}");
        assert!((Element::unit(&d).trace() - rank as f64).abs() < 1e-14);
    }
}

#[test]
fn qubit_sequential_products() {
    // |0⟩⟨0| then |+⟩⟨+|: P0 (|+⟩⟨+|) P0 = ½ P0.
    let z = Element::complex(dmatrix![c(1.0, 0.0), c(0.0, 0.0); c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
    let x = Element::complex(dmatrix![c(0.5, 0.0), c(0.5, 0.0); c(0.5, 0.0), c(0.5, 0.0)]).unwrap();
    close(&seq_prod(&z, &x, &tol()).unwrap(), &z.scale(0.5), 1e-15);
    // √(diag(¼, 1)) = diag(½, 1); U_{diag(½,1)} of the all-halves matrix.
    let a = Element::real(dmatrix![0.25, 0.0; 0.0, 1.0]).unwrap();
    let b = Element::real(dmatrix![0.5, 0.5; 0.5, 0.5]).unwrap();
    close(&seq_prod(&a, &b, &tol()).unwrap(), &Element::real(dmatrix![0.125, 0.25; 0.25, 0.5]).unwrap(), 1e-15);
    close(&sqrt(&a, &tol()).unwrap(), &Element::real(dmatrix![0.5, 0.0; 0.0, 1.0]).unwrap(), 1e-15);
}

#[test]
fn spin_factor_spectrum_and_product() {
    // Eigenvalues t ± |v| with idempotents ½(1 ± v/|v|).
    let s = Element::spin(dvector![3.0, 4.0], 10.0).unwrap();
    let spec = s.spectrum().unwrap();
    assert!((spec[0] - 5.0).abs() < 1e-13 && (spec[1] - 15.0).abs() < 1e-13);
    // (u, s)∘(v, t) = (t u + s v, ⟨u, v⟩ + s t).
    let a = Element::spin(dvector![1.0, 2.0], 3.0).unwrap();
    let b = Element::spin(dvector![-1.0, 0.5], 2.0).unwrap();
    close(&a.jordan_mul(&b).unwrap(), &Element::spin(dvector![-1.0, 5.5], 6.0).unwrap(), 1e-14);
}

#[test]
fn atoms_at_an_angle() {
    // In real:2, ⟨p, q⟩ = cos²θ, p ∨ q = 1 and p ∧ q = 0 for θ ∉ πℤ.
    for theta in [0.3, 0.7, 1.2] {
        let p = real_atom(0.0);
        let q = real_atom(theta);
        let expected = theta.cos().powi(2);
        assert!((transition_probability(&p, &q).unwrap() - expected).abs() < 1e-14);
        close(join(&p, &q, &tol()).unwrap().value(), &Element::unit(p.value().descriptor()), 1e-9);
        assert_eq!(rank_of(&meet(&p, &q, &tol()).unwrap(), &tol()).unwrap(), 0);
        // p & q = cos²θ p.
        close(&seq_prod(p.value(), q.value(), &tol()).unwrap(), &p.value().scale(expected), 1e-14);
    }
}

#[test]
fn ceiling_and_floor_of_a_diagonal() {
    let a = Element::real(dmatrix![0.3, 0.0, 0.0; 0.0, 0.0, 0.0; 0.0, 0.0, 1.0]).unwrap();
    close(&ceiling(&a, &tol()).unwrap(), &Element::real(dmatrix![1.0, 0.0, 0.0; 0.0, 0.0, 0.0; 0.0, 0.0, 1.0]).unwrap(), 1e-15);
    close(&floor(&a, &tol()).unwrap(), &Element::real(dmatrix![0.0, 0.0, 0.0; 0.0, 0.0, 0.0; 0.0, 0.0, 1.0]).unwrap(), 1e-15);
}

#[test]
fn homogeneity_of_diagonals() {
    // Φ carries diag(1, 4) to diag(9, 1): on diagonals it multiplies by diag(9, 1/4).
    let a = Element::real(dmatrix![1.0, 0.0; 0.0, 4.0]).unwrap();
    let b = Element::real(dmatrix![9.0, 0.0; 0.0, 1.0]).unwrap();
    let phi = homogeneity_iso(&a, &b, &tol()).unwrap();
    close(&phi.apply(&a).unwrap(), &b, 1e-13);
    let x = Element::real(dmatrix![2.0, 0.0; 0.0, 8.0]).unwrap();
    close(&phi.apply(&x).unwrap(), &Element::real(dmatrix![18.0, 0.0; 0.0, 2.0]).unwrap(), 1e-13);
    // Off-diagonal entries scale by √9 · √(1/4) = 3/2.
    let off = Element::real(dmatrix![0.0, 1.0; 1.0, 0.0]).unwrap();
    close(&phi.apply(&off).unwrap(), &off.scale(1.5), 1e-13);
}

#[test]
fn classification_numbers() {
    // Rank 4: real 10, complex 16, quaternionic 28; spin factors have rank 2.
    let mut four: Vec<usize> = simple_ejas_of_rank(4, 1000).iter().map(|r| r.dim).collect();
    four.sort_unstable();
    assert_eq!(four, [10, 16, 28]);
    // Rank 9: 9·(2·9 − 1) = 153 is the largest.
    assert_eq!(simple_ejas_of_rank(9, 10_000).iter().map(|r| r.dim).max(), Some(153));
    let row = SimpleEjaRow::of_factor(SimpleFactor::QuatHerm(2));
    assert_eq!((row.rank, row.dim), (2, 6));
    for (s, v) in [("complex:5", true), ("real:2", false), ("spin:3", true), ("spin:4", false), ("real:1+complex:2", true)] {
        assert_eq!(is_locally_tomographic_self_composite(&s.parse().unwrap()).verdict, v, "{s}");
    }
}

#[test]
fn hex_encodings() {
    assert_eq!(format_hex(1.0), "0x1p+0");
    assert_eq!(format_hex(-2.5), "-0x1.4p+1");
    assert_eq!(format_hex(0.1), "0x1.999999999999ap-4");
    assert_eq!(format_hex(0.0), "0x0p+0");
}
