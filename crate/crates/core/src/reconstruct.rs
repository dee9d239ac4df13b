//! The Jordan product rebuilt from the sequential product alone.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lattice::SharpEffect;
use crate::seqprod::{self, LinearMap};
use crate::spectral;
use crate::tolerance::Tolerances;

/// `p * b = ½(b + p & b − p⊥ & b)`, for `p` already known to be an atom.
fn atom_jordan_raw(p: &Element, b: &Element) -> Result<Element> {
    let pb = seqprod::sharp_prod(p, b)?;
    let qb = seqprod::sharp_prod(&p.complement(), b)?;
    Ok((&(b + &pb) - &qb).scale(0.5))
}

/// `p * b = ½(b + p & b − p⊥ & b)` for an atom `p`.
pub fn atom_jordan(p: &SharpEffect, b: &Element) -> Result<Element> {
    p.require_atomic()?;
    atom_jordan_raw(p.value(), b)
}

/// `a * b = Σᵢⱼ λᵢ μⱼ pᵢ * qⱼ` over atomic spectral forms of `a` and `b`.
#[derive(Debug, Clone)]
pub struct ReconstructedProduct {
    descriptor: AlgebraDescriptor,
    frame_seed: Option<u64>,
    tol: Tolerances,
}

impl ReconstructedProduct {
    /// Decomposes along eigenvector frames.
    pub fn new(descriptor: &AlgebraDescriptor, tol: &Tolerances) -> Self {
        Self {
            descriptor: descriptor.clone(),
            frame_seed: None,
            tol: *tol,
        }
    }

    /// Decomposes along frames drawn from `seed`.
    pub fn with_frame_seed(descriptor: &AlgebraDescriptor, seed: u64, tol: &Tolerances) -> Self {
        Self {
            descriptor: descriptor.clone(),
            frame_seed: Some(seed),
            tol: *tol,
        }
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    fn decompose(&self, a: &Element, stream: u64) -> Result<Vec<(f64, Element)>> {
        if a.descriptor() != &self.descriptor {
            return Err(Error::DescriptorMismatch {
                left: self.descriptor.to_string(),
                right: a.descriptor().to_string(),
            });
        }
        let terms = match self.frame_seed {
            None => spectral::atomic_spectral::<ChaCha8Rng>(a, &self.tol, None)?,
            Some(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(stream);
                spectral::atomic_spectral(a, &self.tol, Some(&mut rng))?
            }
        };
        Ok(terms
            .into_iter()
            .filter(|(l, _)| l.abs() > self.tol.zero_cutoff)
            .collect())
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let da = self.decompose(a, 0)?;
        let db = self.decompose(b, 1)?;
        let mut acc = a.zero_like();
        for (l, p) in &da {
            for (m, q) in &db {
                acc = &acc + &atom_jordan_raw(p, q)?.scale(l * m);
            }
        }
        Ok(acc)
    }

    /// `T_a = b ↦ a * b`, tabulated on the coordinate basis.
    pub fn t_operator(&self, a: &Element) -> Result<LinearMap> {
        let da = self.decompose(a, 0)?;
        LinearMap::from_fn(&self.descriptor, |e| {
            let mut acc = a.zero_like();
            for (l, p) in &da {
                acc = &acc + &atom_jordan_raw(p, e)?.scale(*l);
            }
            Ok(acc)
        })
    }
}

/// `reconstructed_mul(a, b)` along eigenvector frames.
pub fn reconstructed_mul(a: &Element, b: &Element, tol: &Tolerances) -> Result<Element> {
    a.check_same(b)?;
    ReconstructedProduct::new(a.descriptor(), tol).mul(a, b)
}

pub fn t_operator(a: &Element, tol: &Tolerances) -> Result<LinearMap> {
    ReconstructedProduct::new(a.descriptor(), tol).t_operator(a)
}

#[derive(Debug, Clone, Copy)]
pub struct TCommutationReport {
    /// `‖T_a T_b − T_b T_a‖`.
    pub commutator: f64,
    /// `‖T_a T_{a*a} − T_{a*a} T_a‖`.
    pub jordan_identity: f64,
}

pub fn verify_t_commutation(a: &Element, b: &Element, tol: &Tolerances) -> Result<TCommutationReport> {
    a.check_same(b)?;
    let prod = ReconstructedProduct::new(a.descriptor(), tol);
    let ta = prod.t_operator(a)?;
    let tb = prod.t_operator(b)?;
    let aa = prod.mul(a, a)?;
    let taa = prod.t_operator(&aa)?;
    Ok(TCommutationReport {
        commutator: ta.commutator_norm(&tb),
        jordan_identity: ta.commutator_norm(&taa),
    })
}

/// `a = a⁺ − a⁻` with `a⁺`, `a⁻` positive and orthogonal; eigenvalues
/// within `zero_cutoff` of zero go to neither part.
pub fn positive_negative_split(a: &Element, tol: &Tolerances) -> Result<(Element, Element)> {
    let form = spectral::spectral_decompose(a, tol)?;
    let cut = tol.zero_cutoff;
    let plus = form.map(|l| if l > cut { l } else { 0.0 });
    let minus = form.map(|l| if l < -cut { -l } else { 0.0 });
    Ok((plus, minus))
}

/// `a⁺ & b − a⁻ & b`, which equals `T_a b` when `a` and `b` are compatible.
pub fn t_apply_by_parts(a: &Element, b: &Element, tol: &Tolerances) -> Result<Element> {
    let (plus, minus) = positive_negative_split(a, tol)?;
    Ok(&seqprod::seq_prod(&plus, b, tol)? - &seqprod::seq_prod(&minus, b, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::join;
    use crate::random::{combine, random_effect, random_element, random_frame, Profile};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn atom_against_unit_and_itself() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let d: AlgebraDescriptor = "quat:2".parse().unwrap();
        let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &t).unwrap();
        let one = Element::unit(&d);
        assert!((&atom_jordan(&p, &one).unwrap() - p.value()).ref_norm() < 1e-12);
        assert!((&atom_jordan(&p, p.value()).unwrap() - p.value()).ref_norm() < 1e-12);
        let whole = SharpEffect::new(one.clone(), &t).unwrap();
        assert!(matches!(atom_jordan(&whole, &one), Err(Error::NotAtomic)));
    }

    #[test]
    fn distinct_atoms_closed_form() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &t).unwrap();
        let q = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &t).unwrap();
        let pq = join(&p, &q, &t).unwrap();
        let pp = pq.value() - p.value();
        let lhs = atom_jordan(&p, q.value()).unwrap().scale(2.0);
        let c1 = p.value().inner(q.value()).unwrap();
        let c2 = pp.inner(q.value()).unwrap();
        let rhs = &(q.value() + &p.value().scale(c1)) - &pp.scale(c2);
        assert!((&lhs - &rhs).ref_norm() < 1e-10);
        let corrected = &(q.value() + p.value()) - &pq.value().scale(1.0 - c1);
        assert!((&lhs - &corrected).ref_norm() < 1e-10);
        let plus_sign = &(q.value() + p.value()) + &pq.value().scale(1.0 - c1);
        assert!((&lhs - &plus_sign).ref_norm() > 0.1);
        let p_perp_q = seqprod::sharp_prod(&p.value().complement(), q.value()).unwrap();
        let pp_q = seqprod::sharp_prod(&pp, q.value()).unwrap();
        assert!((&p_perp_q - &pp_q).ref_norm() < 1e-10);
    }

    #[test]
    fn matches_jordan_product_on_zoo() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for d in AlgebraDescriptor::default_zoo() {
            let a = random_element(&d, &mut rng);
            let b = random_element(&d, &mut rng);
            let got = reconstructed_mul(&a, &b, &t).unwrap();
            let want = a.jordan_mul(&b).unwrap();
            assert!((&got - &want).ref_norm() < 1e-10, "{d}");
            let other = ReconstructedProduct::with_frame_seed(&d, 99, &t).mul(&a, &b).unwrap();
            assert!((&got - &other).ref_norm() < 1e-10, "{d}");
        }
    }

    #[test]
    fn square_by_parts() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let d: AlgebraDescriptor = "spin:4".parse().unwrap();
        let a = random_element(&d, &mut rng);
        let (plus, minus) = positive_negative_split(&a, &t).unwrap();
        assert!((&(&plus - &minus) - &a).ref_norm() < 1e-12);
        assert!(seqprod::seq_prod(&plus, &minus, &t).unwrap().ref_norm() < 1e-10);
        let aa = reconstructed_mul(&a, &a, &t).unwrap();
        assert!((&aa - &t_apply_by_parts(&a, &a, &t).unwrap()).ref_norm() < 1e-10);
        assert!((&aa - &a.square()).ref_norm() < 1e-10);
    }

    #[test]
    fn t_operators() {
        let t = tol();
        let d: AlgebraDescriptor = "real:3".parse().unwrap();
        let one = Element::unit(&d);
        assert!(t_operator(&one, &t).unwrap().distance_to(&LinearMap::identity(&d)) < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let frame = random_frame(&d, &mut rng);
        let a = combine(&frame, &[0.2, -0.5, 0.9]);
        let b = combine(&frame, &[1.0, 0.3, -0.1]);
        let r = verify_t_commutation(&a, &b, &t).unwrap();
        assert!(r.commutator < 1e-10 && r.jordan_identity < 1e-10);
        let c = random_element(&d, &mut rng);
        assert!(verify_t_commutation(&c, &a, &t).unwrap().jordan_identity < 1e-10);
    }
}
