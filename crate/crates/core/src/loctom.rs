//! Local tomography: which algebras admit a composite with themselves of
//! rank `r²` and dimension `N²`, and explicit checks of complex tensor
//! composites.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::descriptor::{AlgebraDescriptor, SimpleFactor};
use crate::element::{Block, Element};
use crate::error::{Error, Result};
use crate::lattice::{rank_of, SharpEffect};
use crate::linalg::{c, kron, outer, random_frame_in_range, CVec};
use crate::random::{random_effect, Profile};
use crate::seqprod;
use crate::spectral;
use crate::tolerance::{Tier, Tolerances};

/// Largest `n·m` for which [`explicit_tensor_checks`] builds the composite.
pub const TENSOR_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EjaFamily {
    RealSym,
    ComplexHerm,
    QuatHerm,
    SpinFactor,
    Albert,
}

impl fmt::Display for EjaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RealSym => "real",
            Self::ComplexHerm => "complex",
            Self::QuatHerm => "quat",
            Self::SpinFactor => "spin",
            Self::Albert => "albert",
        })
    }
}

/// One entry of the classification of simple Euclidean Jordan algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimpleEjaRow {
    pub family: EjaFamily,
    pub rank: usize,
    pub dim: usize,
}

impl SimpleEjaRow {
    /// The row of a supported simple factor.
    pub fn of_factor(factor: SimpleFactor) -> Self {
        let family = match factor {
            SimpleFactor::RealSym(_) => EjaFamily::RealSym,
            SimpleFactor::ComplexHerm(_) => EjaFamily::ComplexHerm,
            SimpleFactor::QuatHerm(_) => EjaFamily::QuatHerm,
            SimpleFactor::SpinFactor(_) => EjaFamily::SpinFactor,
        };
        Self {
            family,
            rank: factor.rank(),
            dim: factor.dimension(),
        }
    }

    /// Whether `dim` agrees with the family's dimension formula.
    pub fn is_consistent(&self) -> bool {
        let r = self.rank;
        match self.family {
            EjaFamily::RealSym => self.dim == r * (r + 1) / 2,
            EjaFamily::ComplexHerm => self.dim == r * r,
            EjaFamily::QuatHerm => self.dim == r * (2 * r - 1),
            EjaFamily::SpinFactor => r == 2 && self.dim >= 3,
            EjaFamily::Albert => r == 3 && self.dim == 27,
        }
    }
}

/// Every simple EJA of rank `r` and dimension at most `dim_limit`, one row
/// per `(rank, dim)` pair. Coincidences keep the matrix family, so the
/// spin factor of dimension 4 appears as `complex`.
pub fn simple_ejas_of_rank(r: usize, dim_limit: usize) -> Vec<SimpleEjaRow> {
    let mut candidates = vec![
        SimpleEjaRow { family: EjaFamily::RealSym, rank: r, dim: r * (r + 1) / 2 },
        SimpleEjaRow { family: EjaFamily::ComplexHerm, rank: r, dim: r * r },
        SimpleEjaRow { family: EjaFamily::QuatHerm, rank: r, dim: r * (2 * r).saturating_sub(1) },
    ];
    if r == 2 {
        candidates.extend((3..=dim_limit).map(|dim| SimpleEjaRow { family: EjaFamily::SpinFactor, rank: 2, dim }));
    }
    if r == 3 {
        candidates.push(SimpleEjaRow { family: EjaFamily::Albert, rank: 3, dim: 27 });
    }
    let mut seen = BTreeSet::new();
    candidates
        .into_iter()
        .filter(|row| row.dim >= 1 && row.dim <= dim_limit && seen.insert(row.dim))
        .collect()
}

/// Whether some simple EJA has rank `r²` and dimension `N²`.
pub fn square_composite_exists(row: &SimpleEjaRow) -> bool {
    let (r2, n2) = (row.rank * row.rank, row.dim * row.dim);
    simple_ejas_of_rank(r2, n2).iter().any(|x| x.dim == n2)
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandVerdict {
    pub factor: String,
    pub rank: usize,
    pub dim: usize,
    pub rank_squared: usize,
    pub dim_squared: usize,
    pub verdict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalTomographyReport {
    pub algebra: String,
    pub summands: Vec<SummandVerdict>,
    pub verdict: bool,
}

/// `spin:1` is `ℝ ⊕ ℝ`, two rank-one summands rather than a simple factor.
fn splits_into_reals(f: SimpleFactor) -> bool {
    f == SimpleFactor::SpinFactor(1)
}

/// True exactly when every summand of rank above one admits a square
/// composite, i.e. is a complex matrix algebra.
pub fn is_locally_tomographic_self_composite(descriptor: &AlgebraDescriptor) -> LocalTomographyReport {
    let summands: Vec<SummandVerdict> = descriptor
        .factors()
        .iter()
        .map(|&f| {
            let row = SimpleEjaRow::of_factor(f);
            SummandVerdict {
                factor: f.to_string(),
                rank: row.rank,
                dim: row.dim,
                rank_squared: row.rank * row.rank,
                dim_squared: row.dim * row.dim,
                verdict: row.rank == 1 || splits_into_reals(f) || square_composite_exists(&row),
            }
        })
        .collect();
    LocalTomographyReport {
        algebra: descriptor.to_string(),
        verdict: summands.iter().all(|s| s.verdict),
        summands,
    }
}

fn complex_sizes(descriptor: &AlgebraDescriptor) -> Result<Vec<usize>> {
    descriptor
        .factors()
        .iter()
        .map(|f| match f {
            SimpleFactor::ComplexHerm(n) => Ok(*n),
            _ => Err(Error::NonComplexTensor(descriptor.to_string())),
        })
        .collect()
}

/// The composite of two direct sums of complex matrix algebras: summands
/// `complex:nᵢmⱼ` in lexicographic order.
pub fn tensor_descriptor(v: &AlgebraDescriptor, w: &AlgebraDescriptor) -> Result<AlgebraDescriptor> {
    let (ns, ms) = (complex_sizes(v)?, complex_sizes(w)?);
    AlgebraDescriptor::new(
        ns.iter()
            .flat_map(|n| ms.iter().map(move |m| SimpleFactor::ComplexHerm(n * m)))
            .collect(),
    )
}

/// `a ⊗ b`, blockwise Kronecker products.
pub fn tensor(a: &Element, b: &Element) -> Result<Element> {
    let desc = tensor_descriptor(a.descriptor(), b.descriptor())?;
    let mut blocks = Vec::with_capacity(desc.factors().len());
    for x in a.blocks() {
        for y in b.blocks() {
            match (x, y) {
                (Block::Complex(p), Block::Complex(q)) => blocks.push(Block::Complex(kron(p, q))),
                _ => return Err(Error::NonComplexTensor(a.descriptor().to_string())),
            }
        }
    }
    Element::from_blocks(&desc, blocks)
}

/// The atom onto `(1/√r) Σ vᵢ` for an orthonormal frame `vᵢ` of `ℂʳ`; it
/// overlaps every frame atom.
pub fn spread_atom(frame: &[CVec]) -> Result<Element> {
    let r = frame.len();
    let mut w = CVec::zeros(frame[0].len());
    for v in frame {
        w += v;
    }
    w /= c((r as f64).sqrt(), 0.0);
    Element::complex(outer(&w))
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorReport {
    pub n: usize,
    pub m: usize,
    pub samples: usize,
    pub eps: f64,
    /// Largest `‖(a₁⊗b₁)&(a₂⊗b₂) − (a₁&a₂)⊗(b₁&b₂)‖`.
    pub product_law_residual: f64,
    /// Largest sharpness residual of `p ⊗ q` over sampled atoms.
    pub atom_product_residual: f64,
    pub atom_products_atomic: bool,
    /// Largest compatibility defect of `c ⊗ d` against sampled effects.
    pub classical_defect: f64,
    pub identity_rank: usize,
    pub dimension: usize,
    /// Smallest `‖q & pᵢ‖` for the spread atom against its frame.
    pub spread_atom_min_overlap: f64,
    pub summand_probes: usize,
    pub summand_violations: usize,
}

impl TensorReport {
    pub fn pass(&self) -> bool {
        let nm = self.n * self.m;
        self.product_law_residual <= self.eps
            && self.atom_product_residual <= self.eps
            && self.atom_products_atomic
            && self.classical_defect <= self.eps
            && self.identity_rank == nm
            && self.dimension == nm * nm
            && self.spread_atom_min_overlap > self.eps
            && self.summand_violations == 0
    }
}

/// Build `complex:n ⊗ complex:m = complex:nm` and check the composite
/// laws on `samples` random inputs.
pub fn explicit_tensor_checks(n: usize, m: usize, samples: usize, seed: u64, tol: &Tolerances) -> Result<TensorReport> {
    explicit_tensor_checks_capped(n, m, samples, seed, tol, TENSOR_CAP)
}

pub fn explicit_tensor_checks_capped(
    n: usize,
    m: usize,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
    cap: usize,
) -> Result<TensorReport> {
    if n == 0 || m == 0 || n * m > cap {
        return Err(Error::TensorCapExceeded { n, m, cap });
    }
    let v = AlgebraDescriptor::simple(SimpleFactor::ComplexHerm(n))?;
    let w = AlgebraDescriptor::simple(SimpleFactor::ComplexHerm(m))?;
    let vw = tensor_descriptor(&v, &w)?;
    let eps = tol.eps_tier(Tier::Chained, vw.dimension(), 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut product_law_residual = 0.0f64;
    let mut atom_product_residual = 0.0f64;
    let mut atom_products_atomic = true;
    let mut classical_defect = 0.0f64;
    for _ in 0..samples {
        let (a1, a2) = (random_effect(&v, &mut rng, Profile::Generic), random_effect(&v, &mut rng, Profile::Generic));
        let (b1, b2) = (random_effect(&w, &mut rng, Profile::Generic), random_effect(&w, &mut rng, Profile::Generic));
        let lhs = seqprod::seq_prod(&tensor(&a1, &b1)?, &tensor(&a2, &b2)?, tol)?;
        let rhs = tensor(&seqprod::seq_prod(&a1, &a2, tol)?, &seqprod::seq_prod(&b1, &b2, tol)?)?;
        product_law_residual = product_law_residual.max((&lhs - &rhs).ref_norm());

        let p = random_effect(&v, &mut rng, Profile::Atomic);
        let q = random_effect(&w, &mut rng, Profile::Atomic);
        let pq = tensor(&p, &q)?;
        atom_product_residual = atom_product_residual.max(spectral::sharpness_residual(&pq, tol)?);
        atom_products_atomic &= spectral::is_atomic(&pq, tol)?;

        let cd = tensor(&Element::unit(&v).scale(rng.random()), &Element::unit(&w).scale(rng.random()))?;
        let probe = random_effect(&vw, &mut rng, Profile::Generic);
        classical_defect = classical_defect.max(seqprod::compatibility_defect(&cd, &probe, tol)?);
    }

    let one = SharpEffect::new(tensor(&Element::unit(&v), &Element::unit(&w))?, tol)?;
    let identity_rank = rank_of(&one, tol)?;

    let nm = n * m;
    let basis: Vec<CVec> = (0..nm)
        .map(|i| CVec::from_fn(nm, |k, _| if k == i { c(1.0, 0.0) } else { c(0.0, 0.0) }))
        .collect();
    let frame = random_frame_in_range(&basis, nm, &mut rng);
    let spread = spread_atom(&frame)?;
    let mut spread_atom_min_overlap = f64::INFINITY;
    for f in &frame {
        let atom = Element::complex(outer(f))?;
        spread_atom_min_overlap = spread_atom_min_overlap.min(seqprod::sharp_prod(&spread, &atom)?.ref_norm());
    }

    let (summand_probes, summand_violations) = summand_probe(n, m, samples, &mut rng, tol)?;

    Ok(TensorReport {
        n,
        m,
        samples,
        eps,
        product_law_residual,
        atom_product_residual,
        atom_products_atomic,
        classical_defect,
        identity_rank,
        dimension: vw.dimension(),
        spread_atom_min_overlap,
        summand_probes,
        summand_violations,
    })
}

/// On `(complex:n ⊕ complex:n) ⊗ complex:m`, atoms with `p & q ≠ 0` must
/// sit in the same summand. Returns `(probes, violations)`.
fn summand_probe<R: Rng + ?Sized>(n: usize, m: usize, samples: usize, rng: &mut R, tol: &Tolerances) -> Result<(usize, usize)> {
    let v: AlgebraDescriptor = AlgebraDescriptor::new(vec![SimpleFactor::ComplexHerm(n); 2])?;
    let w = AlgebraDescriptor::simple(SimpleFactor::ComplexHerm(m))?;
    let w_atom = |rng: &mut R| random_effect(&w, rng, Profile::Atomic);
    let summand_atom = |k: usize, rng: &mut R| -> Result<Element> {
        let inner = random_effect(&AlgebraDescriptor::simple(SimpleFactor::ComplexHerm(n))?, rng, Profile::Atomic);
        let mut blocks: Vec<Block> = v.factors().iter().map(|f| Block::zero(*f)).collect();
        blocks[k] = inner.blocks()[0].clone();
        Element::from_blocks(&v, blocks)
    };
    let mut violations = 0;
    for _ in 0..samples {
        let (i, j) = (rng.random_range(0..2), rng.random_range(0..2));
        let p = tensor(&summand_atom(i, rng)?, &w_atom(rng))?;
        let q = tensor(&summand_atom(j, rng)?, &w_atom(rng))?;
        let overlap = seqprod::sharp_prod(&p, &q)?.ref_norm();
        if overlap > tol.eps(p.dimension(), 1.0) && i != j {
            violations += 1;
        }
    }
    Ok((samples, violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(r: usize, limit: usize) -> Vec<usize> {
        simple_ejas_of_rank(r, limit).iter().map(|x| x.dim).collect()
    }

    #[test]
    fn rank_four_and_nine() {
        assert_eq!(dims(4, 30), vec![10, 16, 28]);
        assert_eq!(dims(9, 1000).into_iter().max(), Some(153));
        assert_eq!(dims(1, 10), vec![1]);
        assert_eq!(dims(3, 30), vec![6, 9, 15, 27]);
        let two = simple_ejas_of_rank(2, 8);
        assert_eq!(two.iter().map(|x| x.dim).collect::<Vec<_>>(), vec![3, 4, 6, 5, 7, 8]);
        assert_eq!(two[1].family, EjaFamily::ComplexHerm);
        for r in 1..12 {
            assert!(simple_ejas_of_rank(r, 2000).iter().all(SimpleEjaRow::is_consistent));
        }
    }

    #[test]
    fn square_composites() {
        let row = |f| SimpleEjaRow::of_factor(f);
        assert!(square_composite_exists(&row(SimpleFactor::ComplexHerm(2))));
        assert!(square_composite_exists(&row(SimpleFactor::ComplexHerm(3))));
        assert!(!square_composite_exists(&SimpleEjaRow { family: EjaFamily::Albert, rank: 3, dim: 27 }));
        for n in 2..6 {
            assert!(!square_composite_exists(&row(SimpleFactor::QuatHerm(n))));
            assert!(!square_composite_exists(&row(SimpleFactor::RealSym(n))));
        }
        assert!(square_composite_exists(&row(SimpleFactor::SpinFactor(3))));
        assert!(!square_composite_exists(&row(SimpleFactor::SpinFactor(5))));
    }

    #[test]
    fn verdicts() {
        let v = |s: &str| is_locally_tomographic_self_composite(&s.parse().unwrap()).verdict;
        assert!(v("complex:2+complex:3"));
        assert!(!v("real:3"));
        assert!(!v("spin:5"));
        assert!(v("real:1+complex:2"));
        assert!(!v("complex:2+quat:2"));
        assert!(v("spin:1"));
        assert!(v("spin:3"));
        assert!(!v("spin:2"));
        let r = is_locally_tomographic_self_composite(&"real:3".parse().unwrap());
        assert_eq!((r.summands[0].rank_squared, r.summands[0].dim_squared), (9, 36));
    }

    #[test]
    fn qubit_pair() {
        let t = Tolerances::default();
        let r = explicit_tensor_checks(2, 2, 20, 1, &t).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.identity_rank, 4);
        assert_eq!(r.dimension, 16);
        assert!(matches!(explicit_tensor_checks(4, 5, 1, 0, &t), Err(Error::TensorCapExceeded { .. })));
        let real: AlgebraDescriptor = "real:2".parse().unwrap();
        assert!(matches!(tensor(&Element::unit(&real), &Element::unit(&real)), Err(Error::NonComplexTensor(_))));
    }

    #[test]
    fn atom_squares_to_itself() {
        let t = Tolerances::default();
        let d: AlgebraDescriptor = "complex:2".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random_effect(&d, &mut rng, Profile::Atomic);
        let q = random_effect(&d, &mut rng, Profile::Atomic);
        let pq = tensor(&p, &q).unwrap();
        let sq = seqprod::seq_prod(&pq, &pq, &t).unwrap();
        assert!((&sq - &pq).ref_norm() < 1e-10);
    }
}
