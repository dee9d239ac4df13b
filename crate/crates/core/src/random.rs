//! Seeded sampling of elements and effects.
//!
//! Every sampler builds a random frame of orthogonal atoms (a Jordan frame)
//! and combines it with a spectrum chosen by the requested profile, so the
//! spectral structure of the result is known by construction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DVector;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::descriptor::{AlgebraDescriptor, SimpleFactor};
use crate::element::{Block, Element};
use crate::linalg::{self, c};

/// Spectral shape of a sampled effect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Eigenvalues uniform in `[0, 1]`.
    Generic,
    /// Eigenvalues in `{0, 1}`: a random idempotent.
    Sharp,
    /// A single rank-one idempotent.
    Atomic,
    /// One eigenvalue repeated over `⌈rank/2⌉` frame slots.
    Degenerate,
    /// Eigenvalues drawn from `{0, 1}` or the open interval; lands on the
    /// boundary of the effect interval.
    Boundary,
}

impl Profile {
    pub const ALL: [Profile; 5] = [
        Profile::Generic,
        Profile::Sharp,
        Profile::Atomic,
        Profile::Degenerate,
        Profile::Boundary,
    ];
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Generic => "generic",
            Profile::Sharp => "sharp",
            Profile::Atomic => "atomic",
            Profile::Degenerate => "degenerate",
            Profile::Boundary => "boundary",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Profile::ALL
            .iter()
            .copied()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| format!("unknown profile `{s}`"))
    }
}

fn atom_blocks<R: Rng + ?Sized>(factor: SimpleFactor, rng: &mut R) -> Vec<Block> {
    match factor {
        SimpleFactor::RealSym(n) => {
            let e: Vec<DVector<f64>> = (0..n)
                .map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 }))
                .collect();
            linalg::random_real_frame_in_range(&e, n, rng)
                .iter()
                .map(|v| Block::Real(linalg::outer_real(v)))
                .collect()
        }
        SimpleFactor::ComplexHerm(n) => {
            let e: Vec<_> = (0..n)
                .map(|i| linalg::CVec::from_fn(n, |r, _| c(if r == i { 1.0 } else { 0.0 }, 0.0)))
                .collect();
            linalg::random_frame_in_range(&e, n, rng)
                .iter()
                .map(|v| Block::Complex(linalg::outer(v)))
                .collect()
        }
        SimpleFactor::QuatHerm(n) => {
            let e: Vec<_> = (0..2 * n)
                .map(|i| linalg::CVec::from_fn(2 * n, |r, _| c(if r == i { 1.0 } else { 0.0 }, 0.0)))
                .collect();
            linalg::symplectic_pairs(&e, Some(rng))
                .iter()
                .map(|v| {
                    let w = linalg::symplectic_partner(v);
                    Block::Quat(linalg::outer(v) + linalg::outer(&w))
                })
                .collect()
        }
        SimpleFactor::SpinFactor(d) => {
            let mut u = linalg::random_real_vector(d, rng);
            while u.norm() < 1e-8 {
                u = linalg::random_real_vector(d, rng);
            }
            let u = u.normalize() * 0.5;
            vec![
                Block::Spin { v: u.clone(), t: 0.5 },
                Block::Spin { v: -u, t: 0.5 },
            ]
        }
    }
}

/// A random Jordan frame: `rank` mutually orthogonal atoms summing to the
/// unit, listed factor by factor.
pub fn random_frame<R: Rng + ?Sized>(descriptor: &AlgebraDescriptor, rng: &mut R) -> Vec<Element> {
    let shared = Arc::new(descriptor.clone());
    let factors = descriptor.factors();
    let mut out = Vec::with_capacity(descriptor.rank());
    for (k, factor) in factors.iter().enumerate() {
        for atom in atom_blocks(*factor, rng) {
            let blocks = factors
                .iter()
                .enumerate()
                .map(|(i, f)| if i == k { atom.clone() } else { Block::zero(*f) })
                .collect();
            out.push(Element::from_parts(shared.clone(), blocks));
        }
    }
    out
}

/// `Σ λᵢ pᵢ` over a frame.
pub fn combine(frame: &[Element], eigenvalues: &[f64]) -> Element {
    assert_eq!(frame.len(), eigenvalues.len());
    let mut acc = frame[0].zero_like();
    for (p, l) in frame.iter().zip(eigenvalues) {
        acc = &acc + &p.scale(*l);
    }
    acc
}

fn profile_spectrum<R: Rng + ?Sized>(rank: usize, profile: Profile, rng: &mut R) -> Vec<f64> {
    match profile {
        Profile::Generic => (0..rank).map(|_| rng.random::<f64>()).collect(),
        Profile::Sharp => (0..rank).map(|_| if rng.random_bool(0.5) { 1.0 } else { 0.0 }).collect(),
        Profile::Atomic => {
            let hit = rng.random_range(0..rank);
            (0..rank).map(|i| if i == hit { 1.0 } else { 0.0 }).collect()
        }
        Profile::Degenerate => {
            let mut spec: Vec<f64> = (0..rank).map(|_| rng.random::<f64>()).collect();
            let repeated = rng.random::<f64>();
            let mut slots: Vec<usize> = (0..rank).collect();
            slots.shuffle(rng);
            for &i in slots.iter().take(rank.div_ceil(2)) {
                spec[i] = repeated;
            }
            spec
        }
        Profile::Boundary => (0..rank)
            .map(|_| match rng.random_range(0..3) {
                0 => 0.0,
                1 => 1.0,
                _ => rng.random::<f64>(),
            })
            .collect(),
    }
}

/// A random effect with the spectral shape of `profile`.
pub fn random_effect<R: Rng + ?Sized>(descriptor: &AlgebraDescriptor, rng: &mut R, profile: Profile) -> Element {
    let frame = random_frame(descriptor, rng);
    let spec = profile_spectrum(frame.len(), profile, rng);
    combine(&frame, &spec)
}

/// A random element with spectrum uniform in `[-1, 1]`.
pub fn random_element<R: Rng + ?Sized>(descriptor: &AlgebraDescriptor, rng: &mut R) -> Element {
    let frame = random_frame(descriptor, rng);
    let spec: Vec<f64> = (0..frame.len()).map(|_| rng.random_range(-1.0..=1.0)).collect();
    combine(&frame, &spec)
}

/// A random element with spectrum uniform in `[lo, 1]`, strictly positive
/// when `lo > 0`.
pub fn random_strictly_positive<R: Rng + ?Sized>(descriptor: &AlgebraDescriptor, rng: &mut R, lo: f64) -> Element {
    let frame = random_frame(descriptor, rng);
    let spec: Vec<f64> = (0..frame.len()).map(|_| rng.random_range(lo..=1.0)).collect();
    combine(&frame, &spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerances;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn frames_are_orthogonal_and_resolve_the_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in AlgebraDescriptor::default_zoo() {
            let frame = random_frame(&d, &mut rng);
            assert_eq!(frame.len(), d.rank());
            let sum = combine(&frame, &vec![1.0; frame.len()]);
            assert!((&sum - &Element::unit(&d)).ref_norm() < 1e-12, "{d}");
            for (i, p) in frame.iter().enumerate() {
                assert!((&p.square() - p).ref_norm() < 1e-12);
                assert!((p.trace() - 1.0).abs() < 1e-12);
                for q in &frame[i + 1..] {
                    assert!(p.jordan_mul(q).unwrap().ref_norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn profiles_are_effects_and_deterministic() {
        let tol = Tolerances::default();
        for d in AlgebraDescriptor::default_zoo() {
            for profile in Profile::ALL {
                let a = random_effect(&d, &mut ChaCha8Rng::seed_from_u64(9), profile);
                let b = random_effect(&d, &mut ChaCha8Rng::seed_from_u64(9), profile);
                assert_eq!(a.coordinates(), b.coordinates());
                assert!(a.is_effect(&tol).unwrap(), "{d} {profile}");
            }
        }
    }

    #[test]
    fn degenerate_profile_repeats_an_eigenvalue() {
        let d: AlgebraDescriptor = "real:3".parse().unwrap();
        let a = random_effect(&d, &mut ChaCha8Rng::seed_from_u64(1), Profile::Degenerate);
        let s = a.spectrum().unwrap();
        let repeated = s.windows(2).any(|w| (w[1] - w[0]).abs() < 1e-12);
        assert!(repeated, "{s:?}");
    }

    #[test]
    fn profile_names_round_trip() {
        for p in Profile::ALL {
            assert_eq!(p.to_string().parse::<Profile>().unwrap(), p);
        }
        assert!("nope".parse::<Profile>().is_err());
    }
}
