//! Spectral decomposition and the functional calculus built on it.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::Serialize;

use crate::element::{Block, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, CVec};
use crate::seqprod;
use crate::tolerance::Tolerances;

/// One eigenvalue cluster: `λ` together with its idempotent.
#[derive(Debug, Clone)]
pub struct SpectralTerm {
    pub lambda: f64,
    pub idempotent: Element,
    /// Jordan rank of the idempotent.
    pub multiplicity: usize,
    atoms: Vec<Element>,
}

impl SpectralTerm {
    /// Orthogonal atoms summing to the idempotent, taken from the eigenframe.
    pub fn atoms(&self) -> &[Element] {
        &self.atoms
    }
}

/// `a = Σ λᵢ pᵢ` with orthogonal idempotents `pᵢ` and distinct `λᵢ`,
/// ascending in `λ`.
#[derive(Debug, Clone)]
pub struct SpectralForm {
    terms: Vec<SpectralTerm>,
    template: Element,
}

impl SpectralForm {
    pub fn terms(&self) -> &[SpectralTerm] {
        &self.terms
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.lambda).collect()
    }

    /// `Σ f(λᵢ) pᵢ`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Element {
        let mut acc = self.template.zero_like();
        for t in &self.terms {
            acc = &acc + &t.idempotent.scale(f(t.lambda));
        }
        acc
    }

    pub fn reconstruct(&self) -> Element {
        self.map(|l| l)
    }

    /// `(λ, atom)` pairs over every term.
    pub fn atomic_terms(&self) -> Vec<(f64, Element)> {
        self.terms
            .iter()
            .flat_map(|t| t.atoms.iter().map(move |p| (t.lambda, p.clone())))
            .collect()
    }
}

/// Eigenvalue/atom pairs of one block. Atoms are rank-one in the Jordan
/// sense: for quaternionic blocks each is a symplectic pair of eigenvectors.
fn block_atoms(block: &Block, tol: &Tolerances) -> Result<Vec<(f64, Block)>> {
    Ok(match block {
        Block::Real(m) => {
            let (vals, vecs) = linalg::real_eigen(m)?;
            vals.iter()
                .enumerate()
                .map(|(i, l)| (*l, Block::Real(linalg::outer_real(&vecs.column(i).into_owned()))))
                .collect()
        }
        Block::Complex(m) => {
            let (vals, vecs) = linalg::hermitian_eigen(m)?;
            vals.iter()
                .enumerate()
                .map(|(i, l)| (*l, Block::Complex(linalg::outer(&vecs.column(i).into_owned()))))
                .collect()
        }
        Block::Quat(m) => {
            let (vals, vecs) = linalg::hermitian_eigen(m)?;
            let mut out = Vec::with_capacity(vals.len() / 2);
            for range in cluster_ranges(&vals, tol.eig_cluster_gap) {
                let span: Vec<CVec> = range.clone().map(|i| vecs.column(i).into_owned()).collect();
                let pairs = linalg::symplectic_pairs::<rand::rngs::ThreadRng>(&span, None);
                for v in pairs {
                    let w = linalg::symplectic_partner(&v);
                    let lambda = 0.5 * ((v.adjoint() * m * &v)[(0, 0)].re + (w.adjoint() * m * &w)[(0, 0)].re);
                    out.push((lambda, Block::Quat(linalg::outer(&v) + linalg::outer(&w))));
                }
            }
            out
        }
        Block::Spin { v, t } => {
            let r = v.norm();
            let u = if r > 1e-150 {
                v / r
            } else {
                DVector::from_fn(v.len(), |i, _| if i == 0 { 1.0 } else { 0.0 })
            };
            vec![
                (t - r, Block::Spin { v: &u * -0.5, t: 0.5 }),
                (t + r, Block::Spin { v: &u * 0.5, t: 0.5 }),
            ]
        }
    })
}

/// Index ranges of a sorted slice grouped by single-link gap.
fn cluster_ranges(sorted: &[f64], gap: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > gap {
            out.push(start..i);
            start = i;
        }
    }
    out
}

fn place(template: &Element, index: usize, block: Block) -> Element {
    let blocks = template
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, _)| {
            if i == index {
                block.clone()
            } else {
                Block::zero(template.descriptor().factors()[i])
            }
        })
        .collect::<Vec<_>>();
    template.with_blocks(blocks)
}

/// Spectral decomposition dropping the zero eigenvalue cluster.
pub fn spectral_decompose(a: &Element, tol: &Tolerances) -> Result<SpectralForm> {
    spectral_decompose_with(a, tol, false)
}

/// Spectral decomposition. Eigenvalues closer than `eig_cluster_gap` are
/// merged into one term; terms with `|λ| ≤ zero_cutoff` are kept, with
/// `λ = 0` exactly, only when `keep_zero` is set.
pub fn spectral_decompose_with(a: &Element, tol: &Tolerances, keep_zero: bool) -> Result<SpectralForm> {
    let mut pool: Vec<(f64, Element)> = Vec::with_capacity(a.descriptor().rank());
    for (k, block) in a.blocks().iter().enumerate() {
        for (lambda, atom) in block_atoms(block, tol)? {
            pool.push((lambda, place(a, k, atom)));
        }
    }
    pool.sort_by(|x, y| x.0.total_cmp(&y.0));
    let lambdas: Vec<f64> = pool.iter().map(|p| p.0).collect();
    let mut terms = Vec::new();
    for range in cluster_ranges(&lambdas, tol.eig_cluster_gap) {
        let members = &pool[range];
        let mut lambda = members.iter().map(|m| m.0).sum::<f64>() / members.len() as f64;
        if lambda.abs() <= tol.zero_cutoff {
            if !keep_zero {
                continue;
            }
            lambda = 0.0;
        }
        let mut idempotent = a.zero_like();
        for (_, p) in members {
            idempotent = &idempotent + p;
        }
        terms.push(SpectralTerm {
            lambda,
            idempotent,
            multiplicity: members.len(),
            atoms: members.iter().map(|m| m.1.clone()).collect(),
        });
    }
    Ok(SpectralForm {
        terms,
        template: a.zero_like(),
    })
}

/// `a = Σ λᵢ pᵢ` over a full Jordan frame of atoms (zero eigenvalues
/// included). With a `rng`, every eigenspace is re-split along a random
/// frame; without one the eigenvector frame is used.
pub fn atomic_spectral<R: Rng + ?Sized>(
    a: &Element,
    tol: &Tolerances,
    rng: Option<&mut R>,
) -> Result<Vec<(f64, Element)>> {
    let form = spectral_decompose_with(a, tol, true)?;
    match rng {
        None => Ok(form.atomic_terms()),
        Some(rng) => {
            let mut out = Vec::with_capacity(a.descriptor().rank());
            for t in form.terms() {
                for p in split_sharp(&t.idempotent, rng)? {
                    out.push((t.lambda, p));
                }
            }
            Ok(out)
        }
    }
}

/// Split an idempotent into orthogonal atoms along a random frame of its
/// range.
pub fn split_sharp<R: Rng + ?Sized>(p: &Element, rng: &mut R) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for (k, block) in p.blocks().iter().enumerate() {
        match block {
            Block::Real(m) => {
                let (vals, vecs) = linalg::real_eigen(m)?;
                let range: Vec<DVector<f64>> = (0..vals.len())
                    .filter(|&i| vals[i] > 0.5)
                    .map(|i| vecs.column(i).into_owned())
                    .collect();
                if range.is_empty() {
                    continue;
                }
                for v in linalg::random_real_frame_in_range(&range, range.len(), rng) {
                    out.push(place(p, k, Block::Real(linalg::outer_real(&v))));
                }
            }
            Block::Complex(m) | Block::Quat(m) => {
                let (vals, vecs) = linalg::hermitian_eigen(m)?;
                let range: Vec<CVec> = (0..vals.len())
                    .filter(|&i| vals[i] > 0.5)
                    .map(|i| vecs.column(i).into_owned())
                    .collect();
                if range.is_empty() {
                    continue;
                }
                if matches!(block, Block::Complex(_)) {
                    for v in linalg::random_frame_in_range(&range, range.len(), rng) {
                        out.push(place(p, k, Block::Complex(linalg::outer(&v))));
                    }
                } else {
                    for v in linalg::symplectic_pairs(&range, Some(&mut *rng)) {
                        let w = linalg::symplectic_partner(&v);
                        out.push(place(p, k, Block::Quat(linalg::outer(&v) + linalg::outer(&w))));
                    }
                }
            }
            Block::Spin { v, t } => {
                if *t < 0.25 {
                    continue;
                }
                if *t < 0.75 {
                    out.push(place(p, k, block.clone()));
                    continue;
                }
                let mut u = linalg::random_real_vector(v.len(), rng);
                while u.norm() < 1e-8 {
                    u = linalg::random_real_vector(v.len(), rng);
                }
                let u = u.normalize() * 0.5;
                out.push(place(p, k, Block::Spin { v: u.clone(), t: 0.5 }));
                out.push(place(p, k, Block::Spin { v: -u, t: 0.5 }));
            }
        }
    }
    Ok(out)
}

fn require_positive(a: &Element, tol: &Tolerances) -> Result<SpectralForm> {
    let form = spectral_decompose_with(a, tol, true)?;
    let min = form.eigenvalues().first().copied().unwrap_or(0.0);
    if min < -tol.eq_tol {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    Ok(form)
}

/// Square root of a positive element.
pub fn sqrt(a: &Element, tol: &Tolerances) -> Result<Element> {
    Ok(require_positive(a, tol)?.map(|l| l.max(0.0).sqrt()))
}

/// Alias of [`sqrt`] for effects.
pub fn sqrt_effect(a: &Element, tol: &Tolerances) -> Result<Element> {
    sqrt(a, tol)
}

/// `aⁿ` for positive `a`, with `a⁰ = 1`.
pub fn power(a: &Element, n: u32, tol: &Tolerances) -> Result<Element> {
    let form = require_positive(a, tol)?;
    if n == 0 {
        return Ok(a.unit_like());
    }
    Ok(form.map(|l| l.max(0.0).powi(n as i32)))
}

/// `a⁻¹ = Σ λᵢ⁻¹ pᵢ`, defined when every eigenvalue exceeds `zero_cutoff`.
pub fn inverse(a: &Element, tol: &Tolerances) -> Result<Element> {
    let form = spectral_decompose_with(a, tol, true)?;
    let min = form.eigenvalues().first().copied().unwrap_or(0.0);
    if min <= tol.zero_cutoff {
        return Err(Error::Singular { min_eigenvalue: min });
    }
    Ok(form.map(|l| 1.0 / l))
}

/// `‖a & a − a‖` in the trace norm.
pub fn sharpness_residual(a: &Element, tol: &Tolerances) -> Result<f64> {
    let aa = seqprod::seq_prod(a, a, tol)?;
    Ok((&aa - a).ref_norm())
}

pub fn is_sharp(a: &Element, tol: &Tolerances) -> Result<bool> {
    a.require_effect(tol)?;
    Ok(sharpness_residual(a, tol)? <= tol.eps(a.dimension(), a.ref_norm()))
}

/// Sharp with a single eigenvalue-one term of Jordan rank one.
pub fn is_atomic(a: &Element, tol: &Tolerances) -> Result<bool> {
    if !is_sharp(a, tol)? {
        return Ok(false);
    }
    let form = spectral_decompose(a, tol)?;
    Ok(match form.terms() {
        [t] => t.multiplicity == 1 && (t.lambda - 1.0).abs() <= tol.eig_cluster_gap,
        _ => false,
    })
}

/// Smallest sharp effect above `a`: the sum of idempotents with `λ > zero_cutoff`.
pub fn ceiling(a: &Element, tol: &Tolerances) -> Result<Element> {
    a.require_effect(tol)?;
    let form = spectral_decompose_with(a, tol, true)?;
    let mut acc = a.zero_like();
    for t in form.terms().iter().filter(|t| t.lambda > tol.zero_cutoff) {
        acc = &acc + &t.idempotent;
    }
    Ok(acc)
}

/// Largest sharp effect below `a`: `1 − ⌈1 − a⌉`.
pub fn floor(a: &Element, tol: &Tolerances) -> Result<Element> {
    a.require_effect(tol)?;
    Ok(ceiling(&a.complement(), tol)?.complement())
}

/// Numeric evidence that the span of the powers of `a` and `1 − a` is a
/// commutative, associative algebra isomorphic to `Rⁿ`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassicalAlgebraReport {
    /// Distinct eigenvalue clusters of `a`, zero cluster included.
    pub clusters: usize,
    /// Numerical rank of `{a⁰, …, a^max_power, (1−a)¹, …}`.
    pub span_rank: usize,
    pub max_commutator: f64,
    pub max_associator: f64,
    pub samples: usize,
}

impl ClassicalAlgebraReport {
    pub fn dimension_matches(&self) -> bool {
        self.clusters == self.span_rank
    }
}

fn numerical_rank(columns: &[Vec<f64>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let rows = columns[0].len();
    let m = DMatrix::from_fn(rows, columns.len(), |r, k| columns[k][r]);
    let sv = m.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|s| **s > 1e-9 * top.max(1e-300)).count()
}

/// Checks `C(a)` on `samples` random effect triples drawn from the span.
/// `max_power` defaults to `2·rank` when `None`.
pub fn classical_algebra_check<R: Rng + ?Sized>(
    a: &Element,
    max_power: Option<u32>,
    samples: usize,
    tol: &Tolerances,
    rng: &mut R,
) -> Result<ClassicalAlgebraReport> {
    a.require_effect(tol)?;
    let max_power = max_power.unwrap_or(2 * a.descriptor().rank() as u32);
    let comp = a.complement();
    let mut span = vec![a.unit_like()];
    for _ in 1..=max_power {
        span.push(seqprod::seq_prod(a, span.last().unwrap(), tol)?);
    }
    let mut c_pow = a.unit_like();
    for _ in 1..=max_power {
        c_pow = seqprod::seq_prod(&comp, &c_pow, tol)?;
        span.push(c_pow.clone());
    }
    let coords: Vec<Vec<f64>> = span.iter().map(Element::coordinates).collect();
    let span_rank = numerical_rank(&coords);
    let clusters = spectral_decompose_with(a, tol, true)?.terms().len();

    let random_member = |rng: &mut R| -> Result<Element> {
        let mut y = a.zero_like();
        for s in &span {
            y = &y + &s.scale(rng.random_range(-1.0..=1.0));
        }
        let spec = y.spectrum()?;
        let (lo, hi) = (spec[0], spec[spec.len() - 1]);
        let width = hi - lo;
        if width <= 1e-9 * hi.abs().max(lo.abs()).max(1.0) {
            return Ok(a.unit_like());
        }
        Ok((&y - &a.unit_like().scale(lo)).scale(1.0 / width))
    };
    let (mut max_commutator, mut max_associator) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let x = random_member(rng)?;
        let y = random_member(rng)?;
        let z = random_member(rng)?;
        let xy = seqprod::seq_prod(&x, &y, tol)?;
        let yx = seqprod::seq_prod(&y, &x, tol)?;
        max_commutator = max_commutator.max((&xy - &yx).ref_norm());
        let left = seqprod::seq_prod(&x, &seqprod::seq_prod(&y, &z, tol)?, tol)?;
        let right = seqprod::seq_prod(&xy, &z, tol)?;
        max_associator = max_associator.max((&left - &right).ref_norm());
    }
    Ok(ClassicalAlgebraReport {
        clusters,
        span_rank,
        max_commutator,
        max_associator,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::AlgebraDescriptor;
    use crate::random::{random_effect, Profile};
    use nalgebra::{dmatrix, DVector};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn unit_has_a_single_term() {
        let d: AlgebraDescriptor = "complex:2+spin:3".parse().unwrap();
        let f = spectral_decompose(&Element::unit(&d), &tol()).unwrap();
        assert_eq!(f.terms().len(), 1);
        assert!((f.terms()[0].lambda - 1.0).abs() < 1e-14);
        assert_eq!(f.terms()[0].multiplicity, d.rank());
        assert!((&f.terms()[0].idempotent - &Element::unit(&d)).ref_norm() < 1e-13);
    }

    #[test]
    fn spin_closed_form() {
        let v = DVector::from_vec(vec![0.3, 0.4]);
        let t = 0.2;
        let a = Element::spin(v.clone(), t).unwrap();
        let f = spectral_decompose(&a, &tol()).unwrap();
        let [lo, hi] = f.terms() else { panic!("two terms expected") };
        assert!((hi.lambda - (t + 0.5)).abs() < 1e-15);
        assert!((lo.lambda - (t - 0.5)).abs() < 1e-15);
        let u = &v / v.norm();
        let p_plus = Element::spin(&u * 0.5, 0.5).unwrap();
        let p_minus = Element::spin(&u * -0.5, 0.5).unwrap();
        assert!((&hi.idempotent - &p_plus).ref_norm() < 1e-15);
        assert!((&lo.idempotent - &p_minus).ref_norm() < 1e-15);
        // idempotent under the spin product, and the terms rebuild a
        assert!((&p_plus.square() - &p_plus).ref_norm() < 1e-15);
        assert!((&f.reconstruct() - &a).ref_norm() < 1e-15);
    }

    #[test]
    fn near_degenerate_eigenvalues_cluster() {
        let a = Element::real(DMatrix::from_diagonal(&DVector::from_vec(vec![0.5, 0.5 + 1e-12, 0.2]))).unwrap();
        let f = spectral_decompose(&a, &tol()).unwrap();
        // oracle: the unclustered eigenvalues
        let raw = a.spectrum().unwrap();
        assert_eq!(raw.len(), 3);
        assert_eq!(f.terms().len(), 2);
        assert!((f.terms()[0].lambda - 0.2).abs() < 1e-15);
        assert_eq!(f.terms()[0].multiplicity, 1);
        assert!((f.terms()[1].lambda - 0.5).abs() < 1e-12);
        assert_eq!(f.terms()[1].multiplicity, 2);
        assert!((f.terms()[1].idempotent.trace() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reconstruction_on_random_effects() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for d in AlgebraDescriptor::default_zoo() {
            for profile in Profile::ALL {
                let a = random_effect(&d, &mut rng, profile);
                let f = spectral_decompose(&a, &tol()).unwrap();
                assert!((&f.reconstruct() - &a).ref_norm() < 1e-12, "{d} {profile}");
                for (i, t) in f.terms().iter().enumerate() {
                    assert!((&t.idempotent.square() - &t.idempotent).ref_norm() < 1e-12);
                    for s in &f.terms()[i + 1..] {
                        assert!(t.idempotent.jordan_mul(&s.idempotent).unwrap().ref_norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn functional_calculus_examples() {
        let t = tol();
        let d: AlgebraDescriptor = "quat:2".parse().unwrap();
        let one = Element::unit(&d);
        assert!((&sqrt_effect(&one, &t).unwrap() - &one).ref_norm() < 1e-13);
        let a = Element::real(dmatrix![2.0, 0.0; 0.0, 4.0]).unwrap();
        let inv = inverse(&a, &t).unwrap();
        let expected = Element::real(dmatrix![0.5, 0.0; 0.0, 0.25]).unwrap();
        assert!((&inv - &expected).ref_norm() < 1e-15);
        assert!(matches!(
            inverse(&Element::real(dmatrix![1.0, 0.0; 0.0, 0.0]).unwrap(), &t),
            Err(Error::Singular { .. })
        ));
        assert!(matches!(
            sqrt(&Element::real(dmatrix![-1.0, 0.0; 0.0, 1.0]).unwrap(), &t),
            Err(Error::NotPositive { .. })
        ));
        assert!((&power(&a, 0, &t).unwrap() - &a.unit_like()).ref_norm() < 1e-15);
    }

    #[test]
    fn sharp_and_atomic_predicates() {
        let t = tol();
        let one = Element::unit(&"real:2".parse().unwrap());
        assert!(is_sharp(&one, &t).unwrap());
        assert!(!is_atomic(&one, &t).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let p = random_effect(&d, &mut rng, Profile::Atomic);
        assert!(is_atomic(&p, &t).unwrap());
        assert!(!is_sharp(&p.scale(0.5), &t).unwrap());
        assert!(matches!(is_sharp(&one.scale(2.0), &t), Err(Error::NotEffect { .. })));
    }

    #[test]
    fn ceiling_and_floor_of_a_diagonal() {
        let t = tol();
        let a = Element::real(DMatrix::from_diagonal(&DVector::from_vec(vec![0.3, 0.0, 0.9]))).unwrap();
        let ceil = ceiling(&a, &t).unwrap();
        let expected = Element::real(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 0.0, 1.0]))).unwrap();
        assert!((&ceil - &expected).ref_norm() < 1e-15);
        assert!(floor(&a, &t).unwrap().ref_norm() < 1e-15);
    }

    #[test]
    fn re_split_frames_differ_but_sum_to_the_idempotent() {
        let t = tol();
        let d: AlgebraDescriptor = "quat:3".parse().unwrap();
        let one = Element::unit(&d);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let atoms = split_sharp(&one, &mut rng).unwrap();
        assert_eq!(atoms.len(), 3);
        let mut sum = one.zero_like();
        for p in &atoms {
            assert!(is_atomic(p, &t).unwrap());
            sum = &sum + p;
        }
        assert!((&sum - &one).ref_norm() < 1e-12);
    }

    #[test]
    fn classical_algebra_of_the_unit_is_one_dimensional() {
        let t = tol();
        let d: AlgebraDescriptor = "complex:3".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let r = classical_algebra_check(&Element::unit(&d), None, 5, &t, &mut rng).unwrap();
        assert_eq!(r.clusters, 1);
        assert_eq!(r.span_rank, 1);
    }
}
