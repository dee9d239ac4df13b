//! The sequential product `a & b = U_{√a}(b)`, compatibility, and the
//! left-multiplication maps it induces.

use nalgebra::{DMatrix, DVector};

use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::spectral;
use crate::tolerance::Tolerances;

/// `a & b` for positive `a` and any `b`.
pub fn seq_prod(a: &Element, b: &Element, tol: &Tolerances) -> Result<Element> {
    a.check_same(b)?;
    let root = spectral::sqrt(a, tol)?;
    root.quadratic(b)
}

/// `p & b` for an idempotent `p`, where `√p = p` and no eigensolve is needed.
/// The caller guarantees idempotency.
pub fn sharp_prod(p: &Element, b: &Element) -> Result<Element> {
    p.quadratic(b)
}

/// `a | b`: `‖a & b − b & a‖ ≤ ε` for effects `a`, `b`.
pub fn is_compatible(a: &Element, b: &Element, tol: &Tolerances) -> Result<bool> {
    Ok(compatibility_defect(a, b, tol)? <= tol.eps(a.dimension(), a.ref_norm().max(b.ref_norm())))
}

/// `‖a & b − b & a‖` after checking both inputs are effects.
pub fn compatibility_defect(a: &Element, b: &Element, tol: &Tolerances) -> Result<f64> {
    a.check_same(b)?;
    a.require_effect(tol)?;
    b.require_effect(tol)?;
    let ab = seq_prod(a, b, tol)?;
    let ba = seq_prod(b, a, tol)?;
    Ok((&ab - &ba).ref_norm())
}

/// A linear map on the algebra, as a matrix acting on orthonormal
/// coordinates (so the adjoint under the trace form is the transpose).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    descriptor: AlgebraDescriptor,
    matrix: DMatrix<f64>,
}

impl LinearMap {
    /// Tabulate `f` on the orthonormal basis.
    pub fn from_fn(descriptor: &AlgebraDescriptor, mut f: impl FnMut(&Element) -> Result<Element>) -> Result<Self> {
        let basis = Element::basis(descriptor);
        let n = basis.len();
        let mut matrix = DMatrix::zeros(n, n);
        for (k, e) in basis.iter().enumerate() {
            let image = f(e)?.coordinates();
            matrix.set_column(k, &DVector::from_vec(image));
        }
        Ok(Self {
            descriptor: descriptor.clone(),
            matrix,
        })
    }

    pub fn identity(descriptor: &AlgebraDescriptor) -> Self {
        let n = descriptor.dimension();
        Self {
            descriptor: descriptor.clone(),
            matrix: DMatrix::identity(n, n),
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.descriptor() != &self.descriptor {
            return Err(Error::DescriptorMismatch {
                left: self.descriptor.to_string(),
                right: x.descriptor().to_string(),
            });
        }
        let y = &self.matrix * DVector::from_vec(x.coordinates());
        Element::from_coordinates(&self.descriptor, y.as_slice())
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            descriptor: self.descriptor.clone(),
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            descriptor: self.descriptor.clone(),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            descriptor: self.descriptor.clone(),
            matrix: &self.matrix - &other.matrix,
        }
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        self.matrix.singular_values().iter().cloned().fold(0.0, f64::max)
    }

    /// `‖A B − B A‖`.
    pub fn commutator_norm(&self, other: &Self) -> f64 {
        self.compose(other).sub(&other.compose(self)).operator_norm()
    }

    pub fn distance_to(&self, other: &Self) -> f64 {
        self.sub(other).operator_norm()
    }
}

/// `L_a(b) = a & b` for positive `a`.
#[derive(Debug, Clone)]
pub struct LeftMultMap {
    base: Element,
    map: LinearMap,
}

impl LeftMultMap {
    pub fn base(&self) -> &Element {
        &self.base
    }

    pub fn as_linear_map(&self) -> &LinearMap {
        &self.map
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.map.apply(x)
    }
}

pub fn left_mult_map(a: &Element, tol: &Tolerances) -> Result<LeftMultMap> {
    let root = spectral::sqrt(a, tol)?;
    let map = LinearMap::from_fn(a.descriptor(), |e| root.quadratic(e))?;
    Ok(LeftMultMap { base: a.clone(), map })
}

/// The order isomorphism `Φ = L_b L_{a⁻¹}` carrying `a` to `b`, with its
/// inverse `L_a L_{b⁻¹}`.
#[derive(Debug, Clone)]
pub struct HomogeneityIso {
    pub forward: LinearMap,
    pub inverse: LinearMap,
}

impl HomogeneityIso {
    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.forward.apply(x)
    }

    pub fn apply_inverse(&self, x: &Element) -> Result<Element> {
        self.inverse.apply(x)
    }
}

pub fn homogeneity_iso(a: &Element, b: &Element, tol: &Tolerances) -> Result<HomogeneityIso> {
    a.check_same(b)?;
    let a_inv = spectral::inverse(a, tol)?;
    let b_inv = spectral::inverse(b, tol)?;
    let l = |x: &Element| left_mult_map(x, tol).map(|m| m.map);
    Ok(HomogeneityIso {
        forward: l(b)?.compose(&l(&a_inv)?),
        inverse: l(a)?.compose(&l(&b_inv)?),
    })
}
