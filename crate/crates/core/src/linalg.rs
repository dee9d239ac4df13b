//! Small dense linear algebra helpers shared by the element, spectral and
//! sampling code.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// The symplectic form `[[0, I], [-I, 0]]` of size `2n`.
pub fn symplectic_j(n: usize) -> CMat {
    let mut j = CMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = c(1.0, 0.0);
        j[(n + i, i)] = c(-1.0, 0.0);
    }
    j
}

/// `J · conj(v)`: the partner of `v` under right multiplication by the
/// quaternion unit `j` in the complex embedding.
pub fn symplectic_partner(v: &CVec) -> CVec {
    let n = v.len() / 2;
    let mut w = CVec::zeros(2 * n);
    for i in 0..n {
        w[i] = v[n + i].conj();
        w[n + i] = -v[i].conj();
    }
    w
}

/// `J · conj(M) · J⁻¹`; equals `M` exactly for embedded quaternionic matrices.
pub fn symplectic_conjugate(m: &CMat) -> CMat {
    let n = m.nrows() / 2;
    let mut out = CMat::zeros(2 * n, 2 * n);
    for r in 0..2 * n {
        for col in 0..2 * n {
            // J conj(M) J^-1 with J e_k = -e_{k+n} (k < n), J e_{k+n} = e_k.
            let (rr, sr) = if r < n { (r + n, 1.0) } else { (r - n, -1.0) };
            let (cc, sc) = if col < n { (col + n, 1.0) } else { (col - n, -1.0) };
            out[(r, col)] = m[(rr, cc)].conj() * (sr * sc);
        }
    }
    out
}

pub fn outer(v: &CVec) -> CMat {
    v * v.adjoint()
}

pub fn outer_real(v: &DVector<f64>) -> DMatrix<f64> {
    v * v.transpose()
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Eigenvalues (ascending) and matching eigenvector columns of a real
/// symmetric matrix.
pub fn real_eigen(m: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = m.nrows();
    let eig = m
        .clone()
        .try_symmetric_eigen(EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or(Error::EigenNonConvergence { size: n })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    Ok((values, vectors))
}

/// Eigenvalues (ascending) and eigenvector columns of a complex Hermitian
/// matrix.
pub fn hermitian_eigen(m: &CMat) -> Result<(Vec<f64>, CMat)> {
    let n = m.nrows();
    let eig = m
        .clone()
        .try_symmetric_eigen(EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or(Error::EigenNonConvergence { size: n })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMat::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    Ok((values, vectors))
}

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

pub fn random_real_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DVector<f64> {
    DVector::from_fn(n, |_, _| gaussian(rng))
}

pub fn random_complex_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVec {
    CVec::from_fn(n, |_, _| c(gaussian(rng), gaussian(rng)))
}

/// Orthonormalize `v` against the columns in `basis`, returning `None` when
/// nothing of `v` survives.
pub fn gram_schmidt(v: &CVec, basis: &[CVec]) -> Option<CVec> {
    let mut w = v.clone();
    // two passes keep the result orthogonal to machine precision
    for _ in 0..2 {
        for b in basis {
            let coef = b.dotc(&w);
            w -= b * coef;
        }
    }
    let norm = w.norm();
    (norm > 1e-10).then(|| w / c(norm, 0.0))
}

pub fn gram_schmidt_real(v: &DVector<f64>, basis: &[DVector<f64>]) -> Option<DVector<f64>> {
    let mut w = v.clone();
    for _ in 0..2 {
        for b in basis {
            let coef = b.dot(&w);
            w -= b * coef;
        }
    }
    let norm = w.norm();
    (norm > 1e-10).then(|| w / norm)
}

/// `k` orthonormal vectors drawn uniformly from the span of `range` (whose
/// columns must be orthonormal).
pub fn random_frame_in_range<R: Rng + ?Sized>(range: &[CVec], k: usize, rng: &mut R) -> Vec<CVec> {
    let mut out: Vec<CVec> = Vec::with_capacity(k);
    while out.len() < k {
        let mut v = CVec::zeros(range[0].len());
        for b in range {
            v += b * c(gaussian(rng), gaussian(rng));
        }
        if let Some(w) = gram_schmidt(&v, &out) {
            out.push(w);
        }
    }
    out
}

pub fn random_real_frame_in_range<R: Rng + ?Sized>(
    range: &[DVector<f64>],
    k: usize,
    rng: &mut R,
) -> Vec<DVector<f64>> {
    let mut out: Vec<DVector<f64>> = Vec::with_capacity(k);
    while out.len() < k {
        let mut v = DVector::zeros(range[0].len());
        for b in range {
            v += b * gaussian(rng);
        }
        if let Some(w) = gram_schmidt_real(&v, &out) {
            out.push(w);
        }
    }
    out
}

/// Split a `J`-invariant subspace of `C^{2n}` (orthonormal columns in
/// `range`, even count) into symplectic pairs `{v, J·conj(v)}`. Only the
/// first vector of each pair is returned.
pub fn symplectic_pairs<R: Rng + ?Sized>(range: &[CVec], rng: Option<&mut R>) -> Vec<CVec> {
    let pairs = range.len() / 2;
    let mut taken: Vec<CVec> = Vec::with_capacity(range.len());
    let mut out = Vec::with_capacity(pairs);
    let candidates: Vec<CVec> = match rng {
        Some(rng) => random_frame_in_range(range, range.len(), rng),
        None => range.to_vec(),
    };
    for cand in candidates {
        if out.len() == pairs {
            break;
        }
        if let Some(v) = gram_schmidt(&cand, &taken) {
            let w = symplectic_partner(&v);
            // w is orthogonal to v and to every earlier pair automatically
            taken.push(v.clone());
            taken.push(w);
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn partner_is_orthogonal_and_consistent_with_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let v = random_complex_vector(6, &mut rng);
        let w = symplectic_partner(&v);
        assert!(v.dotc(&w).norm() < 1e-12);
        let j = symplectic_j(3);
        let direct = &j * v.map(|z| z.conj());
        assert!((direct - &w).norm() < 1e-12);
        // symplectic conjugation of the projector onto {v, w} is itself
        let p = outer(&v) + outer(&w);
        assert!((symplectic_conjugate(&p) - &p).norm() < 1e-10);
    }

    #[test]
    fn symplectic_pairs_span_the_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let v = random_complex_vector(4, &mut rng);
        let v = &v / c(v.norm(), 0.0);
        let w = symplectic_partner(&v);
        let pairs = symplectic_pairs(&[v.clone(), w.clone()], Some(&mut rng));
        assert_eq!(pairs.len(), 1);
        let p = outer(&pairs[0]) + outer(&symplectic_partner(&pairs[0]));
        let q = outer(&v) + outer(&w);
        assert!((p - q).norm() < 1e-10);
    }

    #[test]
    fn eigen_sorted() {
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, -1.0]);
        let (vals, _) = real_eigen(&m).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0]);
    }
}
