//! Pure states on atoms and the inner product they induce.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lattice::SharpEffect;
use crate::seqprod;
use crate::spectral;
use crate::tolerance::Tolerances;

/// A linear functional `a ↦ ⟨riesz, a⟩`.
#[derive(Debug, Clone)]
pub struct StateFunctional {
    pub riesz: Element,
    /// The atom this is the pure state of, if any.
    pub label: Option<Element>,
}

impl StateFunctional {
    pub fn eval(&self, a: &Element) -> Result<f64> {
        self.riesz.inner(a)
    }

    /// `|ω(1) − 1|`.
    pub fn normalization_defect(&self) -> f64 {
        (self.riesz.trace() - 1.0).abs()
    }

    /// Smallest value on the cone, i.e. the least eigenvalue of the Riesz
    /// vector.
    pub fn min_on_effects(&self) -> Result<f64> {
        self.riesz.min_eigenvalue()
    }
}

/// The normalized trace, strictly positive on every nonzero positive.
pub fn separating_state(descriptor: &AlgebraDescriptor) -> StateFunctional {
    StateFunctional {
        riesz: Element::unit(descriptor).scale(1.0 / descriptor.rank() as f64),
        label: None,
    }
}

fn normalized_trace(a: &Element) -> f64 {
    a.trace() / a.descriptor().rank() as f64
}

/// `ω_p(a) = ω(p & a) / ω(p)` with `ω` the normalized trace.
pub fn pure_state_of(p: &SharpEffect) -> Result<StateFunctional> {
    p.require_atomic()?;
    let pv = p.value();
    let denom = normalized_trace(pv);
    let coords = Element::basis(pv.descriptor())
        .iter()
        .map(|e| Ok(normalized_trace(&seqprod::sharp_prod(pv, e)?) / denom))
        .collect::<Result<Vec<_>>>()?;
    Ok(StateFunctional {
        riesz: Element::from_coordinates(pv.descriptor(), &coords)?,
        label: Some(pv.clone()),
    })
}

/// `ω_p(a) = ⟨p, a⟩ / ⟨p, p⟩`; agrees with [`pure_state_of`] by uniqueness.
pub fn pure_state_by_inner(p: &SharpEffect) -> Result<StateFunctional> {
    p.require_atomic()?;
    let pv = p.value();
    let norm = pv.inner(pv)?;
    Ok(StateFunctional {
        riesz: pv.scale(1.0 / norm),
        label: Some(pv.clone()),
    })
}

fn transition_raw(p: &Element, q: &Element) -> Result<f64> {
    Ok(seqprod::sharp_prod(p, q)?.trace() / p.trace())
}

/// `ω_p(q)` for atoms `p`, `q`.
pub fn transition_probability(p: &SharpEffect, q: &SharpEffect) -> Result<f64> {
    p.require_atomic()?;
    q.require_atomic()?;
    transition_raw(p.value(), q.value())
}

/// Which atomic frame a [`SelfDualForm`] decomposes its arguments along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameChoice {
    /// The eigenvector frame returned by the spectral solver.
    Eigen,
    /// Every eigenspace re-split along a frame drawn from this seed.
    Seeded(u64),
}

/// `⟨a, b⟩ = Σᵢⱼ λᵢ μⱼ ω_{pᵢ}(qⱼ)` for `a = Σ λᵢ pᵢ`, `b = Σ μⱼ qⱼ`.
#[derive(Debug, Clone)]
pub struct SelfDualForm {
    descriptor: AlgebraDescriptor,
    frame: FrameChoice,
    tol: Tolerances,
}

pub fn build_self_dual_inner(descriptor: &AlgebraDescriptor, frame: FrameChoice, tol: &Tolerances) -> SelfDualForm {
    SelfDualForm {
        descriptor: descriptor.clone(),
        frame,
        tol: *tol,
    }
}

impl SelfDualForm {
    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    pub fn frame(&self) -> FrameChoice {
        self.frame
    }

    fn check(&self, a: &Element) -> Result<()> {
        if a.descriptor() != &self.descriptor {
            return Err(Error::DescriptorMismatch {
                left: self.descriptor.to_string(),
                right: a.descriptor().to_string(),
            });
        }
        Ok(())
    }

    /// The atomic spectral form used for `a`, with `salt` selecting an
    /// independent frame per argument.
    pub fn decompose(&self, a: &Element, salt: u64) -> Result<Vec<(f64, Element)>> {
        self.check(a)?;
        match self.frame {
            FrameChoice::Eigen => spectral::atomic_spectral::<ChaCha8Rng>(a, &self.tol, None),
            FrameChoice::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(salt);
                spectral::atomic_spectral(a, &self.tol, Some(&mut rng))
            }
        }
    }

    pub fn inner(&self, a: &Element, b: &Element) -> Result<f64> {
        let da = self.decompose(a, 0)?;
        let db = self.decompose(b, 1)?;
        let mut acc = 0.0;
        for (l, p) in &da {
            if l.abs() <= self.tol.zero_cutoff {
                continue;
            }
            for (m, q) in &db {
                if m.abs() <= self.tol.zero_cutoff {
                    continue;
                }
                acc += l * m * transition_raw(p, q)?;
            }
        }
        Ok(acc)
    }

    /// Gram matrix on the orthonormal coordinate basis.
    pub fn gram(&self) -> Result<DMatrix<f64>> {
        let basis = Element::basis(&self.descriptor);
        let n = basis.len();
        let mut g = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.inner(&basis[i], &basis[j])?;
                g[(i, j)] = v;
                g[(j, i)] = v;
            }
        }
        Ok(g)
    }

    /// Smallest eigenvalue of the symmetrized Gram matrix.
    pub fn gram_min_eigenvalue(&self) -> Result<f64> {
        let g = self.gram()?;
        let sym = (&g + g.transpose()) * 0.5;
        Ok(sym.symmetric_eigenvalues().min())
    }

    /// `min_j ⟨a, p_j⟩` over the frame atoms of `a`'s own decomposition;
    /// nonnegative exactly when `a` is positive.
    pub fn min_frame_pairing(&self, a: &Element) -> Result<f64> {
        let mut worst = f64::INFINITY;
        for (_, p) in self.decompose(a, 0)? {
            worst = worst.min(self.inner(a, &p)?);
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, outer, CVec};
    use crate::random::{random_effect, random_element, Profile};
    use nalgebra::{DMatrix, DVector};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn ray(v: &CVec) -> SharpEffect {
        let v = v / c(v.norm(), 0.0);
        SharpEffect::new(Element::complex(outer(&v)).unwrap(), &tol()).unwrap()
    }

    #[test]
    fn diagonal_pure_state() {
        let p = ray(&CVec::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]));
        let w = pure_state_of(&p).unwrap();
        let d = Element::complex(DMatrix::from_diagonal(&DVector::from_vec(vec![c(0.7, 0.0), c(-2.0, 0.0)]))).unwrap();
        assert!((w.eval(&d).unwrap() - 0.7).abs() < 1e-12);
        assert!(w.eval(&p.value().complement()).unwrap().abs() < 1e-12);
        assert!((w.eval(p.value()).unwrap() - 1.0).abs() < 1e-12);
        assert!(w.normalization_defect() < 1e-12);
    }

    #[test]
    fn constructions_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for s in ["real:3", "quat:2", "spin:4", "complex:2+spin:3"] {
            let d: AlgebraDescriptor = s.parse().unwrap();
            let p = SharpEffect::new(random_effect(&d, &mut rng, Profile::Atomic), &tol()).unwrap();
            let a = pure_state_of(&p).unwrap();
            let b = pure_state_by_inner(&p).unwrap();
            for _ in 0..100 {
                let x = random_element(&d, &mut rng);
                assert!((a.eval(&x).unwrap() - b.eval(&x).unwrap()).abs() < 1e-10, "{s}");
            }
            assert!(a.min_on_effects().unwrap() > -1e-10);
        }
    }

    #[test]
    fn transition_is_squared_overlap() {
        let u = CVec::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let v = CVec::from_vec(vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)]);
        let (p, q) = (ray(&u), ray(&v));
        assert!((transition_probability(&p, &q).unwrap() - 0.36).abs() < 1e-12);
        assert!((transition_probability(&q, &p).unwrap() - 0.36).abs() < 1e-12);
        assert!((transition_probability(&p, &p).unwrap() - 1.0).abs() < 1e-12);
        let w = ray(&CVec::from_vec(vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]));
        assert!(transition_probability(&p, &w).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rejects_non_atoms() {
        let d: AlgebraDescriptor = "real:2".parse().unwrap();
        let one = SharpEffect::new(Element::unit(&d), &tol()).unwrap();
        assert!(matches!(pure_state_of(&one), Err(Error::NotAtomic)));
        assert!(matches!(transition_probability(&one, &one), Err(Error::NotAtomic)));
    }

    #[test]
    fn form_matches_reference_inner() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for d in AlgebraDescriptor::default_zoo() {
            let form = build_self_dual_inner(&d, FrameChoice::Seeded(77), &tol());
            for _ in 0..5 {
                let a = random_element(&d, &mut rng);
                let b = random_element(&d, &mut rng);
                let got = form.inner(&a, &b).unwrap();
                assert!((got - a.inner(&b).unwrap()).abs() < 1e-10, "{d}");
            }
            assert!(form.gram_min_eigenvalue().unwrap() > 1e-8, "{d}");
        }
    }

    #[test]
    fn norm_is_sum_of_squared_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d: AlgebraDescriptor = "quat:3".parse().unwrap();
        let a = random_element(&d, &mut rng);
        let form = build_self_dual_inner(&d, FrameChoice::Eigen, &tol());
        let expect: f64 = a.spectrum().unwrap().iter().map(|l| l * l).sum();
        assert!((form.inner(&a, &a).unwrap() - expect).abs() < 1e-10);
        let pos = random_effect(&d, &mut rng, Profile::Generic);
        assert!(form.min_frame_pairing(&pos).unwrap() >= -1e-10);
        let neg = -&pos;
        assert!(form.min_frame_pairing(&neg).unwrap() < 0.0);
    }
}
