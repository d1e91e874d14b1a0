//! Complex linear-algebra helpers shared by the backends.
//!
//! Everything operates on dynamically sized `nalgebra` matrices over
//! `Complex64`. Eigendecompositions are Hermitian-only and always returned
//! with eigenvalues sorted ascending.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// `(M + M†)/2`.
pub fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

/// Frobenius distance from `m` to its Hermitian part.
pub fn hermitian_residual(m: &CMat) -> f64 {
    (m - m.adjoint()).norm() * 0.5
}

/// Hermitian eigendecomposition with eigenvalues ascending.
///
/// Returns `(values, vectors)` where column `i` of `vectors` is a unit
/// eigenvector for `values[i]`. The input is hermitized first so callers can
/// pass results of arithmetic that picked up anti-Hermitian rounding noise.
pub fn eigh(m: &CMat) -> (Vec<f64>, CMat) {
    let d = m.nrows();
    if d == 0 {
        return (Vec::new(), CMat::zeros(0, 0));
    }
    let se = nalgebra::SymmetricEigen::new(hermitize(m));
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = CMat::zeros(d, d);
    for (k, &i) in order.iter().enumerate() {
        vectors.set_column(k, &se.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Rebuild `V diag(f(λ)) V†` from an eigendecomposition.
pub fn from_eigh(values: &[f64], vectors: &CMat) -> CMat {
    let diag = CMat::from_diagonal(&CVec::from_iterator(
        values.len(),
        values.iter().map(|&v| C64::new(v, 0.0)),
    ));
    vectors * diag * vectors.adjoint()
}

/// Positive square root of a PSD Hermitian matrix. Slightly negative
/// eigenvalues from rounding are floored at zero.
pub fn sqrt_psd(m: &CMat) -> CMat {
    let (values, vectors) = eigh(m);
    let roots: Vec<f64> = values.iter().map(|&v| v.max(0.0).sqrt()).collect();
    from_eigh(&roots, &vectors)
}

/// Largest eigenvalue magnitude violation of `0 ≤ M ≤ I`.
pub fn interval_violation(values: &[f64]) -> f64 {
    values.iter().map(|&v| (-v).max(v - 1.0).max(0.0)).fold(0.0f64, f64::max)
}

/// Rank-one projector onto the line spanned by `v` (not required to be unit).
pub fn projector(v: &CVec) -> CMat {
    let n = v.norm();
    let u = v / C64::new(n, 0.0);
    &u * u.adjoint()
}

/// Fix the representative phase of a vector: the first component of
/// magnitude above `tol` is rotated onto the positive real axis.
pub fn fix_phase(v: &CVec, tol: f64) -> CVec {
    for x in v.iter() {
        if x.norm() > tol {
            let phase = x / C64::new(x.norm(), 0.0);
            return v * phase.conj();
        }
    }
    v.clone()
}

/// Spectral norm of the commutator `AB − BA`. For Hermitian inputs the
/// commutator is skew-Hermitian, so `i(AB − BA)` is Hermitian and its
/// extreme eigenvalue magnitude is the operator norm.
pub fn commutator_norm(a: &CMat, b: &CMat) -> f64 {
    let c = (a * b - b * a) * C64::new(0.0, 1.0);
    let (values, _) = eigh(&c);
    values.iter().fold(0.0, |acc: f64, &v| acc.max(v.abs()))
}

/// Frobenius distance of `U` from unitarity, `‖U†U − I‖`.
pub fn unitarity_residual(u: &CMat) -> f64 {
    let d = u.ncols();
    (u.adjoint() * u - CMat::identity(d, d)).norm()
}

/// Single-linkage clustering of an ascending value sequence: indices are
/// grouped while consecutive gaps stay within `gap`. Returns the index
/// groups in ascending value order.
pub fn cluster_ascending(values: &[f64], gap: f64) -> Vec<Vec<usize>> {
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match clusters.last_mut() {
            Some(cluster) if v - values[*cluster.last().unwrap()] <= gap => cluster.push(i),
            _ => clusters.push(vec![i]),
        }
    }
    clusters
}

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phase absorbed into Q.
pub fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMat {
    let g = CMat::from_fn(d, d, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let diag = r[(j, j)];
        let phase = if diag.norm() > 0.0 {
            diag / C64::new(diag.norm(), 0.0)
        } else {
            C64::new(1.0, 0.0)
        };
        let col = q.column(j) * phase;
        q.set_column(j, &col);
    }
    q
}

/// Real dimension of the Hermitian d×d matrices.
fn hermitian_dim(d: usize) -> usize {
    d * d
}

/// Orthonormal (real) basis of Hermitian d×d matrices: `E_ii`, then for each
/// `i < j` the symmetric and antisymmetric pair.
fn hermitian_basis_element(d: usize, k: usize) -> CMat {
    let mut m = CMat::zeros(d, d);
    if k < d {
        m[(k, k)] = C64::new(1.0, 0.0);
        return m;
    }
    let mut idx = k - d;
    for i in 0..d {
        for j in (i + 1)..d {
            if idx == 0 {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                m[(i, j)] = C64::new(s, 0.0);
                m[(j, i)] = C64::new(s, 0.0);
                return m;
            }
            idx -= 1;
            if idx == 0 {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                m[(i, j)] = C64::new(0.0, s);
                m[(j, i)] = C64::new(0.0, -s);
                return m;
            }
            idx -= 1;
        }
    }
    unreachable!("hermitian basis index out of range")
}

/// Basis of the Hermitian solution space of `XA = AX` for every generator
/// `A`, computed as the kernel of the stacked vectorized commutator map with
/// singular values cut at `eps_rank`.
///
/// The generators must be Hermitian. The returned matrices are linearly
/// independent and orthonormal in the real parametrization.
pub fn hermitian_commutant_basis(generators: &[CMat], d: usize, eps_rank: f64) -> Vec<CMat> {
    let n = hermitian_dim(d);
    if generators.is_empty() {
        return (0..n).map(|k| hermitian_basis_element(d, k)).collect();
    }
    // Rows: 2 d^2 real components of each commutator per generator.
    let rows = generators.len() * 2 * d * d;
    let mut m = DMatrix::<f64>::zeros(rows, n);
    for (col, k) in (0..n).enumerate() {
        let h = hermitian_basis_element(d, k);
        for (g, a) in generators.iter().enumerate() {
            let c = &h * a - a * &h;
            let base = g * 2 * d * d;
            for i in 0..d {
                for j in 0..d {
                    m[(base + 2 * (i * d + j), col)] = c[(i, j)].re;
                    m[(base + 2 * (i * d + j) + 1, col)] = c[(i, j)].im;
                }
            }
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("kernel SVD requested V^T");
    let mut basis = Vec::new();
    for (row, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma <= eps_rank {
            let mut h = CMat::zeros(d, d);
            for k in 0..n {
                h += hermitian_basis_element(d, k) * C64::new(v_t[(row, k)], 0.0);
            }
            basis.push(h);
        }
    }
    // The thin SVD of a tall matrix only exposes min(rows, cols) singular
    // values; rows >= cols holds here, so every kernel direction appears.
    basis
}
