//! Sequential products on Euclidean Jordan algebras: spectral calculus,
//! sharp-effect lattices, pure states, reconstruction of the Jordan product
//! and seeded property suites.

pub mod descriptor;
pub mod element;
pub mod error;
pub mod linalg;
pub mod random;
pub mod tolerance;
pub mod seqprod;
pub mod spectral;
pub mod lattice;
pub mod duality;
pub mod reconstruct;
pub mod loctom;
pub mod verify;
pub mod cli;
