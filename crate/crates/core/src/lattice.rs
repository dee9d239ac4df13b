//! The lattice of sharp effects.

use rand::Rng;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::seqprod;
use crate::spectral::{self, SpectralForm};
use crate::tolerance::Tolerances;

/// An effect certified idempotent under the sequential product.
#[derive(Debug, Clone)]
pub struct SharpEffect {
    value: Element,
    form: SpectralForm,
}

impl SharpEffect {
    /// Certify `value`; refuses anything whose `‖p & p − p‖` exceeds `ε`.
    pub fn new(value: Element, tol: &Tolerances) -> Result<Self> {
        value.require_effect(tol)?;
        let residual = spectral::sharpness_residual(&value, tol)?;
        if residual > tol.eps(value.dimension(), value.ref_norm()) {
            return Err(Error::NotSharp { residual });
        }
        let form = spectral::spectral_decompose(&value, tol)?;
        Ok(Self { value, form })
    }

    pub fn value(&self) -> &Element {
        &self.value
    }

    pub fn into_value(self) -> Element {
        self.value
    }

    pub fn spectral_form(&self) -> &SpectralForm {
        &self.form
    }

    /// Jordan rank read off the eigenvalue-one cluster.
    pub fn jordan_rank(&self) -> usize {
        self.form
            .terms()
            .iter()
            .filter(|t| t.lambda > 0.5)
            .map(|t| t.multiplicity)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.jordan_rank() == 0
    }

    pub fn is_atomic(&self) -> bool {
        self.jordan_rank() == 1
    }

    /// `p⊥ = 1 − p`.
    pub fn complement(&self, tol: &Tolerances) -> Result<Self> {
        Self::new(self.value.complement(), tol)
    }

    pub fn require_atomic(&self) -> Result<()> {
        if self.is_atomic() {
            Ok(())
        } else {
            Err(Error::NotAtomic)
        }
    }
}

/// `a ≼ b` up to `slack`: the smallest eigenvalue of `b − a` is at least
/// `−slack`.
pub fn precedes(a: &Element, b: &Element, slack: f64) -> Result<bool> {
    Ok(b.try_sub(a)?.min_eigenvalue()? >= -slack)
}

/// `p ∨ q = ⌈½(p + q)⌉`.
pub fn join(p: &SharpEffect, q: &SharpEffect, tol: &Tolerances) -> Result<SharpEffect> {
    let half = p.value.try_add(&q.value)?.scale(0.5);
    SharpEffect::new(spectral::ceiling(&half, tol)?, tol)
}

/// `p ∧ q = (p⊥ ∨ q⊥)⊥`.
pub fn meet(p: &SharpEffect, q: &SharpEffect, tol: &Tolerances) -> Result<SharpEffect> {
    join(&p.complement(tol)?, &q.complement(tol)?, tol)?.complement(tol)
}

/// `p & q = 0` within `ε`.
pub fn orthogonal(p: &SharpEffect, q: &SharpEffect, tol: &Tolerances) -> Result<bool> {
    let pq = seqprod::sharp_prod(&p.value, &q.value)?;
    Ok(pq.ref_norm() <= tol.eps(p.value.dimension(), 1.0))
}

/// Orthogonal atoms summing to `target`.
#[derive(Debug, Clone)]
pub struct AtomicDecomposition {
    pub atoms: Vec<SharpEffect>,
    pub target: SharpEffect,
}

impl AtomicDecomposition {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `‖Σ atoms − target‖`.
    pub fn sum_residual(&self) -> f64 {
        let mut acc = self.target.value.zero_like();
        for a in &self.atoms {
            acc = &acc + &a.value;
        }
        (&acc - &self.target.value).ref_norm()
    }

    /// Largest `‖pᵢ & pⱼ‖` over distinct pairs.
    pub fn max_overlap(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for (i, p) in self.atoms.iter().enumerate() {
            for q in &self.atoms[i + 1..] {
                worst = worst.max(seqprod::sharp_prod(&p.value, &q.value)?.ref_norm());
            }
        }
        Ok(worst)
    }
}

fn certify_all(atoms: Vec<Element>, tol: &Tolerances) -> Result<Vec<SharpEffect>> {
    atoms
        .into_iter()
        .map(|a| {
            let s = SharpEffect::new(a, tol)?;
            s.require_atomic()?;
            Ok(s)
        })
        .collect()
}

/// Decompose `p` along the eigenframe of its spectral form.
pub fn atomic_decomposition(p: &SharpEffect, tol: &Tolerances) -> Result<AtomicDecomposition> {
    let atoms = p
        .form
        .terms()
        .iter()
        .filter(|t| t.lambda > 0.5)
        .flat_map(|t| t.atoms().iter().cloned())
        .collect();
    Ok(AtomicDecomposition {
        atoms: certify_all(atoms, tol)?,
        target: p.clone(),
    })
}

/// Decompose `p` along a random frame of its range.
pub fn atomic_decomposition_with<R: Rng + ?Sized>(
    p: &SharpEffect,
    tol: &Tolerances,
    rng: &mut R,
) -> Result<AtomicDecomposition> {
    let atoms = spectral::split_sharp(&p.value, rng)?;
    Ok(AtomicDecomposition {
        atoms: certify_all(atoms, tol)?,
        target: p.clone(),
    })
}

/// The common length of every atomic decomposition of `p`.
pub fn rank_of(p: &SharpEffect, tol: &Tolerances) -> Result<usize> {
    Ok(atomic_decomposition(p, tol)?.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringCase {
    Zero,
    Atom,
    /// Neither zero nor atomic; never expected.
    Neither,
}

/// Outcome of the covering check for `p` and an atom `q`.
#[derive(Debug, Clone)]
pub struct Covering {
    pub case: CoveringCase,
    /// `(q ∨ p) − p`.
    pub witness: Element,
    /// `‖⌈p⊥ & q⌉ − ((q ∨ p) − p)‖`.
    pub ceiling_residual: f64,
}

/// `(q ∨ p) − p` is zero or an atom.
pub fn covering_check(p: &SharpEffect, q: &SharpEffect, tol: &Tolerances) -> Result<Covering> {
    q.require_atomic()?;
    let joined = join(q, p, tol)?;
    let witness = joined.value.try_sub(&p.value)?;
    let eps = tol.eps(witness.dimension(), 1.0);
    let case = if witness.ref_norm() <= eps {
        CoveringCase::Zero
    } else {
        match SharpEffect::new(witness.clone(), tol) {
            Ok(s) if s.is_atomic() => CoveringCase::Atom,
            _ => CoveringCase::Neither,
        }
    };
    let compressed = seqprod::sharp_prod(&p.value.complement(), &q.value)?;
    let ceil = spectral::ceiling(&compressed, tol)?;
    Ok(Covering {
        case,
        ceiling_residual: (&ceil - &witness).ref_norm(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::AlgebraDescriptor;
    use crate::linalg::{c, outer, CVec};
    use crate::random::{random_effect, random_frame, Profile};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn sharp(e: Element) -> SharpEffect {
        SharpEffect::new(e, &tol()).unwrap()
    }

    fn projector(v: &[(f64, f64)]) -> SharpEffect {
        let v = CVec::from_iterator(v.len(), v.iter().map(|&(r, i)| c(r, i)));
        let v = &v / c(v.norm(), 0.0);
        sharp(Element::complex(outer(&v)).unwrap())
    }

    #[test]
    fn idempotent_laws() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let p = sharp(random_effect(&d, &mut rng, Profile::Sharp));
        assert!((&join(&p, &p, &t).unwrap().value - &p.value).ref_norm() < 1e-12);
        assert!((&meet(&p, &p, &t).unwrap().value - &p.value).ref_norm() < 1e-12);
    }

    #[test]
    fn orthogonal_join_is_the_sum() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d: AlgebraDescriptor = "quat:3".parse().unwrap();
        let frame = random_frame(&d, &mut rng);
        let p = sharp(frame[0].clone());
        let q = sharp(&frame[1] + &frame[2]);
        assert!(orthogonal(&p, &q, &t).unwrap());
        assert!(orthogonal(&q, &p, &t).unwrap());
        let j = join(&p, &q, &t).unwrap();
        assert!((&j.value - &(&p.value + &q.value)).ref_norm() < 1e-12);
        assert!(precedes(&(&p.value + &q.value), &p.value.unit_like(), 1e-12).unwrap());
    }

    #[test]
    fn two_rank_one_projections_in_a_qubit() {
        let t = tol();
        let p = projector(&[(1.0, 0.0), (0.0, 0.0)]);
        let q = projector(&[(1.0, 0.0), (0.3, 0.4)]);
        let j = join(&p, &q, &t).unwrap();
        let m = meet(&p, &q, &t).unwrap();
        assert!((&j.value - &p.value.unit_like()).ref_norm() < 1e-12);
        assert!(m.value.ref_norm() < 1e-12);
        assert_eq!(rank_of(&j, &t).unwrap(), 2);
        assert!(!orthogonal(&p, &q, &t).unwrap());
    }

    #[test]
    fn complementary_spin_atoms_are_orthogonal() {
        let t = tol();
        let u = nalgebra::DVector::from_vec(vec![0.3, -0.4, 0.0]);
        let p = sharp(Element::spin(u.clone(), 0.5).unwrap());
        let q = sharp(Element::spin(-&u, 0.5).unwrap());
        assert!(orthogonal(&p, &q, &t).unwrap());
        assert!(orthogonal(&p, &p.complement(&t).unwrap(), &t).unwrap());
        assert!(!orthogonal(&p, &p, &t).unwrap());
    }

    #[test]
    fn decompositions_and_ranks() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (s, r) in [("real:4", 4), ("complex:3", 3), ("quat:2", 2), ("spin:5", 2), ("complex:2+spin:3", 4)] {
            let d: AlgebraDescriptor = s.parse().unwrap();
            let one = sharp(Element::unit(&d));
            assert_eq!(rank_of(&one, &t).unwrap(), r, "{s}");
            let dec = atomic_decomposition_with(&one, &t, &mut rng).unwrap();
            assert_eq!(dec.len(), r);
            assert!(dec.sum_residual() < 1e-12);
            assert!(dec.max_overlap().unwrap() < 1e-12);
        }
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let atom = sharp(random_effect(&d, &mut rng, Profile::Atomic));
        let dec = atomic_decomposition(&atom, &t).unwrap();
        assert_eq!(dec.len(), 1);
        assert!((&dec.atoms[0].value - &atom.value).ref_norm() < 1e-12);
    }

    #[test]
    fn refuses_near_sharp_values() {
        let t = tol();
        let d: AlgebraDescriptor = "real:2".parse().unwrap();
        let almost = Element::unit(&d).scale(1.0 - 1e-6);
        assert!(matches!(SharpEffect::new(almost, &t), Err(Error::NotSharp { .. })));
    }

    #[test]
    fn covering_cases() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let frame = random_frame(&d, &mut rng);
        let p = sharp(&frame[0] + &frame[1]);
        let below = sharp(frame[0].clone());
        let ortho = sharp(frame[2].clone());
        let zero = covering_check(&p, &below, &t).unwrap();
        assert_eq!(zero.case, CoveringCase::Zero);
        let same = covering_check(&p, &ortho, &t).unwrap();
        assert_eq!(same.case, CoveringCase::Atom);
        assert!((&same.witness - &ortho.value).ref_norm() < 1e-12);
        let q = sharp(random_effect(&d, &mut rng, Profile::Atomic));
        let generic = covering_check(&p, &q, &t).unwrap();
        assert_eq!(generic.case, CoveringCase::Atom);
        assert!(generic.ceiling_residual < 1e-10);
        assert!(matches!(covering_check(&q, &p, &t), Err(Error::NotAtomic)));
    }
}
