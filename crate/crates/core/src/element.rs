//! Elements of a Euclidean Jordan algebra, stored block by block in their
//! native representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::descriptor::{AlgebraDescriptor, SimpleFactor};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMat, C64};
use crate::tolerance::Tolerances;

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Native payload of one simple factor.
///
/// Quaternionic matrices are held through their `2n x 2n` complex embedding
/// `A + B·j ↦ [[A, B], [-conj(B), conj(A)]]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    Real(DMatrix<f64>),
    Complex(CMat),
    Quat(CMat),
    Spin { v: DVector<f64>, t: f64 },
}

impl Block {
    pub fn zero(factor: SimpleFactor) -> Self {
        match factor {
            SimpleFactor::RealSym(n) => Self::Real(DMatrix::zeros(n, n)),
            SimpleFactor::ComplexHerm(n) => Self::Complex(CMat::zeros(n, n)),
            SimpleFactor::QuatHerm(n) => Self::Quat(CMat::zeros(2 * n, 2 * n)),
            SimpleFactor::SpinFactor(d) => Self::Spin {
                v: DVector::zeros(d),
                t: 0.0,
            },
        }
    }

    pub fn unit(factor: SimpleFactor) -> Self {
        match factor {
            SimpleFactor::RealSym(n) => Self::Real(DMatrix::identity(n, n)),
            SimpleFactor::ComplexHerm(n) => Self::Complex(CMat::identity(n, n)),
            SimpleFactor::QuatHerm(n) => Self::Quat(CMat::identity(2 * n, 2 * n)),
            SimpleFactor::SpinFactor(d) => Self::Spin {
                v: DVector::zeros(d),
                t: 1.0,
            },
        }
    }

    fn matches(&self, factor: SimpleFactor) -> bool {
        match (self, factor) {
            (Self::Real(m), SimpleFactor::RealSym(n)) => m.shape() == (n, n),
            (Self::Complex(m), SimpleFactor::ComplexHerm(n)) => m.shape() == (n, n),
            (Self::Quat(m), SimpleFactor::QuatHerm(n)) => m.shape() == (2 * n, 2 * n),
            (Self::Spin { v, .. }, SimpleFactor::SpinFactor(d)) => v.len() == d,
            _ => false,
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64, g: impl Fn(C64, C64) -> C64) -> Self {
        match (self, other) {
            (Self::Real(a), Self::Real(b)) => Self::Real(a.zip_map(b, f)),
            (Self::Complex(a), Self::Complex(b)) => Self::Complex(a.zip_map(b, g)),
            (Self::Quat(a), Self::Quat(b)) => Self::Quat(a.zip_map(b, g)),
            (Self::Spin { v, t }, Self::Spin { v: w, t: s }) => Self::Spin {
                v: v.zip_map(w, &f),
                t: f(*t, *s),
            },
            _ => unreachable!("blocks of one descriptor always pair up"),
        }
    }

    fn scale(&self, k: f64) -> Self {
        match self {
            Self::Real(a) => Self::Real(a * k),
            Self::Complex(a) => Self::Complex(a * c(k, 0.0)),
            Self::Quat(a) => Self::Quat(a * c(k, 0.0)),
            Self::Spin { v, t } => Self::Spin { v: v * k, t: t * k },
        }
    }

    fn jordan(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Real(a), Self::Real(b)) => Self::Real((a * b + b * a) * 0.5),
            (Self::Complex(a), Self::Complex(b)) => Self::Complex((a * b + b * a) * c(0.5, 0.0)),
            (Self::Quat(a), Self::Quat(b)) => Self::Quat((a * b + b * a) * c(0.5, 0.0)),
            (Self::Spin { v, t: s }, Self::Spin { v: w, t }) => Self::Spin {
                v: v * *t + w * *s,
                t: v.dot(w) + s * t,
            },
            _ => unreachable!("blocks of one descriptor always pair up"),
        }
    }

    fn inner(&self, other: &Self) -> f64 {
        fn re_trace(a: &CMat, b: &CMat) -> f64 {
            // Re tr(AB) for Hermitian B is Re Σ a_ij conj(b_ij)
            a.iter().zip(b.iter()).map(|(x, y)| (x * y.conj()).re).sum()
        }
        match (self, other) {
            (Self::Real(a), Self::Real(b)) => a.dot(b),
            (Self::Complex(a), Self::Complex(b)) => re_trace(a, b),
            (Self::Quat(a), Self::Quat(b)) => 0.5 * re_trace(a, b),
            (Self::Spin { v, t: s }, Self::Spin { v: w, t }) => 2.0 * (v.dot(w) + s * t),
            _ => unreachable!("blocks of one descriptor always pair up"),
        }
    }

    /// Largest deviation from (conjugate-)symmetry, plus symplectic symmetry
    /// for quaternionic blocks.
    fn asymmetry(&self) -> f64 {
        match self {
            Self::Real(a) => (a - a.transpose()).amax(),
            Self::Complex(a) => (a - a.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max),
            Self::Quat(a) => {
                let herm = (a - a.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
                let sym = (a - linalg::symplectic_conjugate(a))
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max);
                herm.max(sym)
            }
            Self::Spin { .. } => 0.0,
        }
    }

    /// Project onto the symmetric part, removing rounding drift.
    fn symmetrized(&self) -> Self {
        match self {
            Self::Real(a) => Self::Real((a + a.transpose()) * 0.5),
            Self::Complex(a) => Self::Complex((a + a.adjoint()) * c(0.5, 0.0)),
            Self::Quat(a) => {
                let h = (a + a.adjoint()) * c(0.5, 0.0);
                let s = linalg::symplectic_conjugate(&h);
                Self::Quat((h + s) * c(0.5, 0.0))
            }
            Self::Spin { .. } => self.clone(),
        }
    }

    fn magnitude(&self) -> f64 {
        match self {
            Self::Real(a) => a.amax(),
            Self::Complex(a) | Self::Quat(a) => a.iter().map(|z| z.norm()).fold(0.0, f64::max),
            Self::Spin { v, t } => v.amax().max(t.abs()),
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            Self::Real(a) => a.iter().all(|x| x.is_finite()),
            Self::Complex(a) | Self::Quat(a) => a.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            Self::Spin { v, t } => t.is_finite() && v.iter().all(|x| x.is_finite()),
        }
    }

    /// Jordan eigenvalues with multiplicity, ascending.
    pub(crate) fn spectrum(&self) -> Result<Vec<f64>> {
        match self {
            Self::Real(a) => Ok(linalg::real_eigen(a)?.0),
            Self::Complex(a) => Ok(linalg::hermitian_eigen(a)?.0),
            Self::Quat(a) => {
                let vals = linalg::hermitian_eigen(a)?.0;
                Ok(vals.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect())
            }
            Self::Spin { v, t } => {
                let r = v.norm();
                Ok(vec![t - r, t + r])
            }
        }
    }

    /// Orthonormal basis of the factor under the trace form.
    pub fn basis(factor: SimpleFactor) -> Vec<Self> {
        let mut out = Vec::with_capacity(factor.dimension());
        match factor {
            SimpleFactor::RealSym(n) => {
                for i in 0..n {
                    for j in i..n {
                        let mut m = DMatrix::zeros(n, n);
                        if i == j {
                            m[(i, i)] = 1.0;
                        } else {
                            m[(i, j)] = SQRT_HALF;
                            m[(j, i)] = SQRT_HALF;
                        }
                        out.push(Self::Real(m));
                    }
                }
            }
            SimpleFactor::ComplexHerm(n) => {
                out.extend(complex_herm_basis(n).into_iter().map(Self::Complex));
            }
            SimpleFactor::QuatHerm(n) => {
                for a in complex_herm_basis(n) {
                    let mut m = CMat::zeros(2 * n, 2 * n);
                    m.view_mut((0, 0), (n, n)).copy_from(&a);
                    m.view_mut((n, n), (n, n)).copy_from(&a.map(|z| z.conj()));
                    out.push(Self::Quat(m));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        for x in [c(SQRT_HALF, 0.0), c(0.0, SQRT_HALF)] {
                            let mut b = CMat::zeros(n, n);
                            b[(i, j)] = x;
                            b[(j, i)] = -x;
                            let mut m = CMat::zeros(2 * n, 2 * n);
                            m.view_mut((0, n), (n, n)).copy_from(&b);
                            m.view_mut((n, 0), (n, n)).copy_from(&(-b.map(|z| z.conj())));
                            out.push(Self::Quat(m));
                        }
                    }
                }
            }
            SimpleFactor::SpinFactor(d) => {
                for i in 0..d {
                    let mut v = DVector::zeros(d);
                    v[i] = SQRT_HALF;
                    out.push(Self::Spin { v, t: 0.0 });
                }
                out.push(Self::Spin {
                    v: DVector::zeros(d),
                    t: SQRT_HALF,
                });
            }
        }
        out
    }
}

fn complex_herm_basis(n: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i..n {
            let mut m = CMat::zeros(n, n);
            if i == j {
                m[(i, i)] = c(1.0, 0.0);
                out.push(m);
                continue;
            }
            m[(i, j)] = c(SQRT_HALF, 0.0);
            m[(j, i)] = c(SQRT_HALF, 0.0);
            out.push(m);
            let mut m = CMat::zeros(n, n);
            m[(i, j)] = c(0.0, SQRT_HALF);
            m[(j, i)] = c(0.0, -SQRT_HALF);
            out.push(m);
        }
    }
    out
}

fn push_hermitian_upper(a: &CMat, n: usize, out: &mut Vec<f64>) {
    for i in 0..n {
        out.push(a[(i, i)].re);
        for j in (i + 1)..n {
            out.extend([a[(i, j)].re, a[(i, j)].im]);
        }
    }
}

fn hermitian_from(n: usize, next: &mut impl FnMut() -> f64) -> CMat {
    let mut a = CMat::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = c(next(), 0.0);
        for j in (i + 1)..n {
            a[(i, j)] = c(next(), next());
            a[(j, i)] = a[(i, j)].conj();
        }
    }
    a
}

/// A point of the algebra described by `descriptor`.
#[derive(Clone, PartialEq)]
pub struct Element {
    descriptor: Arc<AlgebraDescriptor>,
    blocks: Vec<Block>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Element")
            .field("algebra", &self.descriptor.to_string())
            .field("coordinates", &self.coordinates())
            .finish()
    }
}

impl Element {
    pub fn zero(descriptor: &AlgebraDescriptor) -> Self {
        Self::from_parts(
            Arc::new(descriptor.clone()),
            descriptor.factors().iter().map(|f| Block::zero(*f)).collect(),
        )
    }

    pub fn unit(descriptor: &AlgebraDescriptor) -> Self {
        Self::from_parts(
            Arc::new(descriptor.clone()),
            descriptor.factors().iter().map(|f| Block::unit(*f)).collect(),
        )
    }

    /// Every stored block is exactly (conjugate-)symmetric, and exactly
    /// symplectic when quaternionic; symmetrizing is exact and idempotent in
    /// floating point, so this costs no precision.
    pub(crate) fn from_parts(descriptor: Arc<AlgebraDescriptor>, blocks: Vec<Block>) -> Self {
        debug_assert_eq!(descriptor.factors().len(), blocks.len());
        let blocks = blocks.iter().map(Block::symmetrized).collect();
        Self { descriptor, blocks }
    }

    /// Same algebra as `self`, new payload.
    pub(crate) fn with_blocks(&self, blocks: Vec<Block>) -> Self {
        Self::from_parts(self.descriptor.clone(), blocks)
    }

    /// Build an element from native blocks. Each block must match its factor
    /// and be symmetric up to `1e-8` relative to its magnitude; the symmetric
    /// part is kept.
    pub fn from_blocks(descriptor: &AlgebraDescriptor, blocks: Vec<Block>) -> Result<Self> {
        let factors = descriptor.factors();
        let mismatch = || Error::Parse {
            input: descriptor.to_string(),
            reason: "blocks do not match the factors".into(),
        };
        if blocks.len() != factors.len() {
            return Err(mismatch());
        }
        let mut out = Vec::with_capacity(blocks.len());
        for (block, factor) in blocks.iter().zip(factors) {
            if !block.matches(*factor) || !block.is_finite() {
                return Err(mismatch());
            }
            if block.asymmetry() > 1e-8 * block.magnitude().max(1.0) {
                return Err(Error::Parse {
                    input: descriptor.to_string(),
                    reason: format!("block for `{factor}` is not self-adjoint"),
                });
            }
            out.push(block.symmetrized());
        }
        Ok(Self::from_parts(Arc::new(descriptor.clone()), out))
    }

    /// Real symmetric element of a single `real:n` algebra.
    pub fn real(matrix: DMatrix<f64>) -> Result<Self> {
        let n = matrix.nrows();
        let d = AlgebraDescriptor::simple(SimpleFactor::RealSym(n))?;
        Self::from_blocks(&d, vec![Block::Real(matrix)])
    }

    /// Complex Hermitian element of a single `complex:n` algebra.
    pub fn complex(matrix: CMat) -> Result<Self> {
        let n = matrix.nrows();
        let d = AlgebraDescriptor::simple(SimpleFactor::ComplexHerm(n))?;
        Self::from_blocks(&d, vec![Block::Complex(matrix)])
    }

    /// Element `(v, t)` of `spin:d`.
    pub fn spin(v: DVector<f64>, t: f64) -> Result<Self> {
        let d = AlgebraDescriptor::simple(SimpleFactor::SpinFactor(v.len()))?;
        Self::from_blocks(&d, vec![Block::Spin { v, t }])
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dimension(&self) -> usize {
        self.descriptor.dimension()
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.descriptor, &other.descriptor) || self.descriptor == other.descriptor
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch {
                left: self.descriptor.to_string(),
                right: other.descriptor.to_string(),
            })
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64 + Copy, g: impl Fn(C64, C64) -> C64 + Copy) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.zip(b, f, g))
            .collect();
        self.with_blocks(blocks)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |x, y| x + y, |x, y| x + y))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |x, y| x - y, |x, y| x - y))
    }

    pub fn scale(&self, k: f64) -> Self {
        self.with_blocks(self.blocks.iter().map(|b| b.scale(k)).collect())
    }

    /// The canonical Jordan product: `½(ab + ba)` on matrix blocks and
    /// `(t·v + s·w, ⟨v, w⟩ + s·t)` on spin blocks.
    pub fn jordan_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.jordan_unchecked(other))
    }

    pub(crate) fn jordan_unchecked(&self, other: &Self) -> Self {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.jordan(b)).collect();
        self.with_blocks(blocks)
    }

    /// `a∘a`.
    pub fn square(&self) -> Self {
        self.jordan_unchecked(self)
    }

    /// Quadratic representation `U_x(y) = 2·x∘(x∘y) − (x∘x)∘y`; on matrix
    /// blocks this is `x·y·x`.
    pub fn quadratic(&self, y: &Self) -> Result<Self> {
        self.check_same(y)?;
        let xy = self.jordan_unchecked(y);
        let first = self.jordan_unchecked(&xy).scale(2.0);
        let second = self.square().jordan_unchecked(y);
        Ok(&first - &second)
    }

    /// Trace form normalized so atomic idempotents have unit norm.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> f64 {
        self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.inner(b)).sum()
    }

    /// `√⟨a, a⟩`; bounds the order-unit norm from above.
    pub fn ref_norm(&self) -> f64 {
        self.inner_unchecked(self).max(0.0).sqrt()
    }

    /// `⟨a, 1⟩`, the Jordan trace.
    pub fn trace(&self) -> f64 {
        self.inner_unchecked(&Self::from_parts(
            self.descriptor.clone(),
            self.descriptor.factors().iter().map(|f| Block::unit(*f)).collect(),
        ))
    }

    pub fn unit_like(&self) -> Self {
        self.with_blocks(self.descriptor.factors().iter().map(|f| Block::unit(*f)).collect())
    }

    pub fn zero_like(&self) -> Self {
        self.with_blocks(self.descriptor.factors().iter().map(|f| Block::zero(*f)).collect())
    }

    /// Orthonormal basis of the whole algebra, factor by factor.
    pub fn basis(descriptor: &AlgebraDescriptor) -> Vec<Self> {
        let shared = Arc::new(descriptor.clone());
        let factors = descriptor.factors();
        let mut out = Vec::with_capacity(descriptor.dimension());
        for (k, factor) in factors.iter().enumerate() {
            for b in Block::basis(*factor) {
                let blocks = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| if i == k { b.clone() } else { Block::zero(*f) })
                    .collect();
                out.push(Self::from_parts(shared.clone(), blocks));
            }
        }
        out
    }

    /// Coordinates in the orthonormal basis of [`Element::basis`].
    pub fn coordinates(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        for (block, factor) in self.blocks.iter().zip(self.descriptor.factors()) {
            out.extend(Block::basis(*factor).iter().map(|b| block.inner(b)));
        }
        out
    }

    pub fn from_coordinates(descriptor: &AlgebraDescriptor, coords: &[f64]) -> Result<Self> {
        if coords.len() != descriptor.dimension() {
            return Err(Error::CoordinateLength {
                expected: descriptor.dimension(),
                got: coords.len(),
            });
        }
        let shared = Arc::new(descriptor.clone());
        let mut blocks = Vec::with_capacity(descriptor.factors().len());
        let mut offset = 0;
        for factor in descriptor.factors() {
            let mut acc = Block::zero(*factor);
            for (k, b) in Block::basis(*factor).iter().enumerate() {
                acc = acc.zip(&b.scale(coords[offset + k]), |x, y| x + y, |x, y| x + y);
            }
            offset += factor.dimension();
            blocks.push(acc);
        }
        Ok(Self::from_parts(shared, blocks))
    }

    /// The independent entries of the stored blocks: upper triangles (real
    /// and imaginary parts off the diagonal) for matrix blocks, with the
    /// quaternionic `j`-part taken from the upper-right block, and `(v, t)`
    /// for spin blocks. [`Element::from_stored_entries`] inverts this
    /// exactly.
    pub fn stored_entries(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        for block in &self.blocks {
            match block {
                Block::Real(a) => {
                    for i in 0..a.nrows() {
                        for j in i..a.ncols() {
                            out.push(a[(i, j)]);
                        }
                    }
                }
                Block::Complex(a) => push_hermitian_upper(a, a.nrows(), &mut out),
                Block::Quat(a) => {
                    let n = a.nrows() / 2;
                    push_hermitian_upper(a, n, &mut out);
                    for i in 0..n {
                        for j in (i + 1)..n {
                            out.extend([a[(i, j + n)].re, a[(i, j + n)].im]);
                        }
                    }
                }
                Block::Spin { v, t } => {
                    out.extend(v.iter());
                    out.push(*t);
                }
            }
        }
        out
    }

    pub fn from_stored_entries(descriptor: &AlgebraDescriptor, entries: &[f64]) -> Result<Self> {
        if entries.len() != descriptor.dimension() {
            return Err(Error::CoordinateLength {
                expected: descriptor.dimension(),
                got: entries.len(),
            });
        }
        let mut it = entries.iter().copied();
        let mut next = || it.next().expect("length checked");
        let mut blocks = Vec::with_capacity(descriptor.factors().len());
        for factor in descriptor.factors() {
            blocks.push(match *factor {
                SimpleFactor::RealSym(n) => {
                    let mut a = DMatrix::zeros(n, n);
                    for i in 0..n {
                        for j in i..n {
                            a[(i, j)] = next();
                            a[(j, i)] = a[(i, j)];
                        }
                    }
                    Block::Real(a)
                }
                SimpleFactor::ComplexHerm(n) => Block::Complex(hermitian_from(n, &mut next)),
                SimpleFactor::QuatHerm(n) => {
                    let a = hermitian_from(n, &mut next);
                    let mut b = CMat::zeros(n, n);
                    for i in 0..n {
                        for j in (i + 1)..n {
                            b[(i, j)] = c(next(), next());
                            b[(j, i)] = -b[(i, j)];
                        }
                    }
                    let mut m = CMat::zeros(2 * n, 2 * n);
                    m.view_mut((0, 0), (n, n)).copy_from(&a);
                    m.view_mut((0, n), (n, n)).copy_from(&b);
                    m.view_mut((n, 0), (n, n)).copy_from(&(-b.map(|z| z.conj())));
                    m.view_mut((n, n), (n, n)).copy_from(&a.map(|z| z.conj()));
                    Block::Quat(m)
                }
                SimpleFactor::SpinFactor(d) => {
                    let v = DVector::from_iterator(d, (0..d).map(|_| next()));
                    Block::Spin { v, t: next() }
                }
            });
        }
        Ok(Self::from_parts(Arc::new(descriptor.clone()), blocks))
    }

    /// Jordan eigenvalues with multiplicity across all factors, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        let mut all = Vec::with_capacity(self.descriptor.rank());
        for b in &self.blocks {
            all.extend(b.spectrum()?);
        }
        all.sort_by(f64::total_cmp);
        Ok(all)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.spectrum()?.first().copied().unwrap_or(0.0))
    }

    /// `‖a‖ = inf{r : −r·1 ≤ a ≤ r·1}`, the largest absolute eigenvalue.
    pub fn order_unit_norm(&self) -> Result<f64> {
        Ok(self.spectrum()?.iter().fold(0.0, |m, x| m.max(x.abs())))
    }

    pub fn is_positive(&self, tol: &Tolerances) -> Result<bool> {
        Ok(self.min_eigenvalue()? >= -tol.eq_tol)
    }

    pub fn is_effect(&self, tol: &Tolerances) -> Result<bool> {
        let s = self.spectrum()?;
        let (lo, hi) = (s[0], s[s.len() - 1]);
        Ok(lo >= -tol.eq_tol && hi <= 1.0 + tol.eq_tol)
    }

    /// `1 − a`.
    pub fn complement(&self) -> Self {
        &self.unit_like() - self
    }

    pub(crate) fn require_effect(&self, tol: &Tolerances) -> Result<()> {
        let s = self.spectrum()?;
        let (lo, hi) = (s[0], s[s.len() - 1]);
        if lo >= -tol.eq_tol && hi <= 1.0 + tol.eq_tol {
            Ok(())
        } else {
            Err(Error::NotEffect { min: lo, max: hi })
        }
    }
}

impl Add for &Element {
    type Output = Element;

    /// Panics if the operands live in different algebras; use
    /// [`Element::try_add`] for a checked sum.
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("element addition across algebras")
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("element subtraction across algebras")
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Element {
    type Output = Element;

    fn mul(self, k: f64) -> Element {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;

    fn desc(s: &str) -> AlgebraDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn unit_is_jordan_identity() {
        for d in AlgebraDescriptor::default_zoo() {
            let basis = Element::basis(&d);
            let one = Element::unit(&d);
            for b in &basis {
                let r = &one.jordan_mul(b).unwrap() - b;
                assert!(r.ref_norm() < 1e-14);
            }
        }
    }

    #[test]
    fn basis_is_orthonormal_and_coordinates_round_trip() {
        for d in AlgebraDescriptor::default_zoo() {
            let basis = Element::basis(&d);
            assert_eq!(basis.len(), d.dimension());
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((a.inner(b).unwrap() - expected).abs() < 1e-14, "{d}: <{i},{j}>");
                }
            }
            let coords: Vec<f64> = (0..d.dimension()).map(|k| (k as f64 * 0.37).sin()).collect();
            let x = Element::from_coordinates(&d, &coords).unwrap();
            for (a, b) in x.coordinates().iter().zip(&coords) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn real_projection_times_offdiagonal() {
        // diag(1,0) ∘ offdiag(1) = offdiag(1/2)
        let p = Element::real(dmatrix![1.0, 0.0; 0.0, 0.0]).unwrap();
        let x = Element::real(dmatrix![0.0, 1.0; 1.0, 0.0]).unwrap();
        let expected = Element::real(dmatrix![0.0, 0.5; 0.5, 0.0]).unwrap();
        assert!((&p.jordan_mul(&x).unwrap() - &expected).ref_norm() < 1e-15);
    }

    #[test]
    fn spin_square_of_pure_vector() {
        let v = DVector::from_vec(vec![0.3, -0.4, 1.2]);
        let a = Element::spin(v.clone(), 0.0).unwrap();
        let sq = a.square();
        match &sq.blocks()[0] {
            Block::Spin { v: w, t } => {
                assert!(w.norm() < 1e-15);
                assert!((t - v.norm_squared()).abs() < 1e-15);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn unit_inner_is_rank() {
        for d in AlgebraDescriptor::default_zoo() {
            let one = Element::unit(&d);
            assert!((one.inner(&one).unwrap() - d.rank() as f64).abs() < 1e-14);
        }
        let d = desc("complex:4");
        assert_eq!(Element::unit(&d).trace(), 4.0);
    }

    #[test]
    fn order_unit_norm_examples() {
        let a = Element::real(dmatrix![0.3, 0.0; 0.0, -0.7]).unwrap();
        assert!((a.order_unit_norm().unwrap() - 0.7).abs() < 1e-15);
        let one = Element::unit(&desc("quat:2"));
        assert!((one.order_unit_norm().unwrap() - 1.0).abs() < 1e-14);
        for (v, t) in [(vec![3.0f64, 4.0], 1.0f64), (vec![3.0, 4.0], -1.0), (vec![0.6, 0.8], 0.2)] {
            let norm = (v[0] * v[0] + v[1] * v[1]).sqrt();
            let s = Element::spin(DVector::from_vec(v), t).unwrap();
            let expected = f64::max((t + norm).abs(), (t - norm).abs());
            assert!((s.order_unit_norm().unwrap() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn positivity_predicates() {
        let tol = Tolerances::default();
        let d = desc("complex:2+spin:3");
        let one = Element::unit(&d);
        assert!(one.is_effect(&tol).unwrap());
        let two = one.scale(2.0);
        assert!(two.is_positive(&tol).unwrap());
        assert!(!two.is_effect(&tol).unwrap());
        let v = DVector::from_vec(vec![0.2, -0.5, 0.1]);
        let boundary = Element::spin(v.clone(), v.norm()).unwrap();
        assert!(boundary.min_eigenvalue().unwrap().abs() < 1e-15);
        assert!(boundary.is_positive(&tol).unwrap());
        assert!(!Element::spin(v.clone(), 0.5 * v.norm()).unwrap().is_positive(&tol).unwrap());
    }

    #[test]
    fn rejects_bad_blocks() {
        let d = desc("real:2");
        let bad = Block::Real(dmatrix![1.0, 2.0; 0.0, 1.0]);
        assert!(Element::from_blocks(&d, vec![bad]).is_err());
        assert!(Element::from_blocks(&d, vec![Block::unit(SimpleFactor::RealSym(3))]).is_err());
        let other = Element::unit(&desc("real:3"));
        assert!(matches!(
            Element::unit(&d).jordan_mul(&other),
            Err(Error::DescriptorMismatch { .. })
        ));
    }

    #[test]
    fn quaternionic_basis_is_symplectic() {
        for b in Block::basis(SimpleFactor::QuatHerm(3)) {
            assert!(b.asymmetry() < 1e-15);
        }
    }
}
