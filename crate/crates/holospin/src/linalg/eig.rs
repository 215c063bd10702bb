//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! At the dimensions this crate works with (≤ 16) the O(n³)-per-sweep cost is
//! irrelevant, convergence is quadratic, and the accumulated eigenvector
//! matrix is orthogonal by construction.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::cmatrix::{frob_distance, CMatrix};

/// Eigenvalues (ascending) and the matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

const MAX_SWEEPS: usize = 60;

/// Decompose a Hermitian matrix: `h = vectors · diag(values) · vectors†`.
///
/// Eigenvalues come out ascending. Inside a degenerate cluster the columns are
/// ordered by the index of each vector's leading component (largest magnitude,
/// first index on ties) and every column's phase is fixed so its leading
/// component is real and positive, which makes the output deterministic.
pub fn eig_hermitian(h: &CMatrix, tol: f64) -> Result<EigenSystem> {
    if !h.is_square() {
        return Err(Error::DimMismatch(format!(
            "{}x{} is not square",
            h.rows(),
            h.cols()
        )));
    }
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let herm_residual = frob_distance(h, &h.adjoint())?;
    if herm_residual > tol {
        return Err(Error::NotHermitian {
            residual: herm_residual,
            tol,
        });
    }

    let n = h.rows();
    let mut a = h.clone();
    let mut v = CMatrix::identity(n);
    let scale = a.frob_norm();
    let stop = scale * 1e-14 + f64::MIN_POSITIVE;

    let mut converged = n <= 1 || off_diagonal_norm(&a) <= stop;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= stop;
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps,
            offdiag: off_diagonal_norm(&a),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());

    let mut values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&j| (0..n).map(|i| v[(i, j)]).collect())
        .collect();

    reorder_degenerate_clusters(&mut values, &mut columns);
    for col in &mut columns {
        normalize_phase(col);
    }

    let mut vectors = CMatrix::zeros(n, n);
    for (j, col) in columns.iter().enumerate() {
        for i in 0..n {
            vectors[(i, j)] = col[i];
        }
    }
    Ok(EigenSystem { values, vectors })
}

/// One complex Jacobi rotation zeroing a[(p,q)], accumulated into v.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let babs = b.norm();
    if babs == 0.0 {
        return;
    }
    let phase = b / babs;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // tan 2ψ = 2|b| / (app − aqq); pick the smaller rotation angle
    let zeta = (app - aqq) / (2.0 * babs);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (zeta * zeta + 1.0).sqrt())
    } else {
        -1.0 / (-zeta + (zeta * zeta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.rows();
    // A ← R†AR with R[p][p]=c, R[p][q]=−s·phase, R[q][p]=s·phase*, R[q][q]=c
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk.scale(c) + phase * aqk.scale(s);
        a[(q, k)] = aqk.scale(c) - phase.conj() * apk.scale(s);
    }
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp.scale(c) + phase.conj() * akq.scale(s);
        a[(k, q)] = akq.scale(c) - phase * akp.scale(s);
    }
    // clean up what the rotation zeroed analytically
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp.scale(c) + phase.conj() * vkq.scale(s);
        v[(k, q)] = vkq.scale(c) - phase * vkp.scale(s);
    }
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn leading_index(col: &[Complex64]) -> usize {
    let mut best = 0;
    let mut best_mag = 0.0;
    for (i, z) in col.iter().enumerate() {
        let m = z.norm();
        if m > best_mag + 1e-12 {
            best = i;
            best_mag = m;
        }
    }
    best
}

fn reorder_degenerate_clusters(values: &mut [f64], columns: &mut [Vec<Complex64>]) {
    let n = values.len();
    if n < 2 {
        return;
    }
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let ctol = 1e-8 * scale;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (values[end] - values[end - 1]).abs() <= ctol {
            end += 1;
        }
        if end - start > 1 {
            let mut idx: Vec<usize> = (start..end).collect();
            idx.sort_by_key(|&j| leading_index(&columns[j]));
            let vals: Vec<f64> = idx.iter().map(|&j| values[j]).collect();
            let cols: Vec<Vec<Complex64>> = idx.iter().map(|&j| columns[j].clone()).collect();
            for (offset, (val, col)) in vals.into_iter().zip(cols).enumerate() {
                values[start + offset] = val;
                columns[start + offset] = col;
            }
        }
        start = end;
    }
}

fn normalize_phase(col: &mut [Complex64]) {
    let lead = leading_index(col);
    let z = col[lead];
    let m = z.norm();
    if m > 0.0 {
        let correction = z.conj() / m;
        for entry in col.iter_mut() {
            *entry *= correction;
        }
    }
}

/// Nearest unitary to `m` (polar factor), via the Hermitian square root of m†m.
pub fn polar_unitary(m: &CMatrix) -> Result<CMatrix> {
    let gram = m.adjoint().matmul(m);
    let eig = eig_hermitian(&gram, 1e-8 * (1.0 + gram.frob_norm()))?;
    let inv_sqrt: Vec<Complex64> = eig
        .values
        .iter()
        .map(|&l| Complex64::new(1.0 / l.max(f64::MIN_POSITIVE).sqrt(), 0.0))
        .collect();
    let root = eig
        .vectors
        .matmul(&CMatrix::diagonal(&inv_sqrt))
        .matmul(&eig.vectors.adjoint());
    Ok(m.matmul(&root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            for j in i + 1..n {
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    }

    fn reconstruction_residual(h: &CMatrix, eig: &EigenSystem) -> f64 {
        let lambda: Vec<Complex64> = eig.values.iter().map(|&l| Complex64::new(l, 0.0)).collect();
        let rebuilt = eig
            .vectors
            .matmul(&CMatrix::diagonal(&lambda))
            .matmul(&eig.vectors.adjoint());
        frob_distance(h, &rebuilt).unwrap()
    }

    #[test]
    fn pauli_z_eigenvalues() {
        let z = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        let eig = eig_hermitian(&z, 1e-12).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-15);
        assert!((eig.values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn random_8x8_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let h = random_hermitian(8, &mut rng);
            let eig = eig_hermitian(&h, 1e-10).unwrap();
            assert!(reconstruction_residual(&h, &eig) <= 1e-12 * h.frob_norm());
            assert!(eig.vectors.is_unitary(1e-12));
            for w in eig.values.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn eigenvalues_invariant_under_basis_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = random_hermitian(6, &mut rng);
        // unitary from the eigenvectors of another random Hermitian matrix
        let u = eig_hermitian(&random_hermitian(6, &mut rng), 1e-10)
            .unwrap()
            .vectors;
        let rotated = u.adjoint().matmul(&h).matmul(&u);
        let e1 = eig_hermitian(&h, 1e-10).unwrap().values;
        let e2 = eig_hermitian(&rotated, 1e-8).unwrap().values;
        for (a, b) in e1.iter().zip(&e2) {
            assert!((a - b).abs() < 1e-12 * (1.0 + h.frob_norm()));
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            eig_hermitian(&m, 1e-12),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn deterministic_on_degenerate_spectrum() {
        // identity block embedded in a diagonal matrix: fully degenerate pair
        let h = CMatrix::diagonal(&[
            Complex64::new(2.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ]);
        let a = eig_hermitian(&h, 1e-12).unwrap();
        let b = eig_hermitian(&h, 1e-12).unwrap();
        assert_eq!(a.values, b.values);
        assert!(frob_distance(&a.vectors, &b.vectors).unwrap() == 0.0);
        // leading components sit on distinct rows, ordered by index
        assert!(a.vectors[(1, 0)].norm() > 0.9);
        assert!(a.vectors[(2, 1)].norm() > 0.9);
    }

    #[test]
    fn polar_unitary_restores_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = random_hermitian(4, &mut rng);
        let u = eig_hermitian(&h, 1e-10).unwrap().vectors;
        // perturb away from unitarity
        let mut drifted = u.clone();
        drifted[(0, 0)] += Complex64::new(1e-6, -2e-6);
        let fixed = polar_unitary(&drifted).unwrap();
        assert!(fixed.is_unitary(1e-10));
        assert!(frob_distance(&fixed, &u).unwrap() < 1e-4);
    }
}
