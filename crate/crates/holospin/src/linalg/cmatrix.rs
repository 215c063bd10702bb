//! Dense complex matrices and vectors.
//!
//! Everything in this crate runs on spaces of dimension 2 through 16, so the
//! representation is a flat row-major `Vec<Complex64>` and all kernels are
//! plain O(n³) loops.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance for structural predicates (Hermiticity, unitarity).
pub const STRUCTURE_TOL: f64 = 1e-10;

/// Default tolerance for iterative convergence residuals.
pub const CONVERGENCE_TOL: f64 = 1e-12;

/// A dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

/// A dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from real entries (imaginary parts zero).
    pub fn from_real(rows: usize, cols: usize, reals: &[f64]) -> Self {
        assert_eq!(reals.len(), rows * cols);
        Self {
            rows,
            cols,
            data: reals.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        }
    }

    /// Diagonal matrix from complex entries.
    pub fn diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> CVector {
        assert!(j < self.cols);
        CVector {
            data: (0..self.rows).map(|i| self[(i, j)]).collect(),
        }
    }

    /// Assemble a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[CVector]) -> Self {
        assert!(!cols.is_empty());
        let rows = cols[0].dim();
        assert!(cols.iter().all(|c| c.dim() == rows));
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        // i-k-j loop order keeps the inner access contiguous
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &CVector) -> CVector {
        assert_eq!(self.cols, v.dim(), "inner dimensions must agree");
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += self[(i, j)] * v[j];
            }
        }
        CVector { data: out }
    }

    /// Frobenius norm.
    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute column sum (induced 1-norm).
    pub fn one_norm(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// ‖A − A†‖_F ≤ tol.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && frob_distance(self, &self.adjoint()).is_ok_and(|d| d <= tol)
    }

    /// ‖A + A†‖_F ≤ tol.
    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        self.is_square()
            && frob_distance(&self.adjoint().scale(Complex64::new(-1.0, 0.0)), self)
                .is_ok_and(|d| d <= tol)
    }

    /// ‖A†A − I‖_F ≤ tol.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && frob_distance(&self.adjoint().matmul(self), &Self::identity(self.rows))
                .is_ok_and(|d| d <= tol)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, other: &CMatrix) -> CMatrix {
        self.matmul(other)
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>9.5}{:+.5}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl CVector {
    pub fn new(data: Vec<Complex64>) -> Self {
        Self { data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![Complex64::new(0.0, 0.0); dim],
        }
    }

    /// Computational basis vector |index⟩.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut v = Self::zeros(dim);
        v.data[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ⟨self|other⟩ with the conjugation on `self`.
    pub fn inner(&self, other: &CVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |self⟩ ⊗ |other⟩.
    pub fn tensor(&self, other: &CVector) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.data {
            for b in &other.data {
                out.push(a * b);
            }
        }
        Self { data: out }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: self.data.iter().map(|c| c * factor).collect(),
        }
    }

    /// Column-matrix view of the vector.
    pub fn as_column(&self) -> CMatrix {
        CMatrix::new(self.dim(), 1, self.data.clone())
    }
}

impl std::ops::Index<usize> for CVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.data[i]
    }
}

impl Sub for &CVector {
    type Output = CVector;
    fn sub(self, other: &CVector) -> CVector {
        assert_eq!(self.dim(), other.dim());
        CVector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Kronecker product a ⊗ b.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut out = CMatrix::zeros(rows, cols);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// ‖a − b‖_F.
pub fn frob_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::DimMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Global-phase-insensitive distance between unitaries:
/// min over θ of ‖a − e^{iθ}b‖_F, with θ = arg tr(b†a).
pub fn phase_aligned_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::DimMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    for m in [a, b] {
        if !m.is_unitary(STRUCTURE_TOL) {
            let residual = frob_distance(&m.adjoint().matmul(m), &CMatrix::identity(m.rows()))
                .unwrap_or(f64::NAN);
            return Err(Error::NotUnitary {
                residual,
                tol: STRUCTURE_TOL,
            });
        }
    }
    let overlap = b.adjoint().matmul(a).trace();
    let theta = overlap.im.atan2(overlap.re);
    let phase = Complex64::from_polar(1.0, theta);
    frob_distance(a, &b.scale(phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn sigma_x() -> CMatrix {
        CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0])
    }

    fn sigma_z() -> CMatrix {
        CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0])
    }

    #[test]
    fn kron_identities() {
        let i2 = CMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), CMatrix::identity(4));

        let zz = kron(&sigma_z(), &sigma_z());
        let expected = CMatrix::diagonal(&[
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]);
        assert!(frob_distance(&zz, &expected).unwrap() < 1e-15);
    }

    #[test]
    fn kron_sigma_x_swaps_basis_states() {
        // (σx⊗σx)|a,b⟩ = |1−a, 1−b⟩ for all four basis vectors.
        let xx = kron(&sigma_x(), &sigma_x());
        for idx in 0..4 {
            let v = CVector::basis_state(4, idx);
            let out = xx.matvec(&v);
            let expect = CVector::basis_state(4, 3 - idx);
            assert!((&out - &expect).norm() < 1e-15, "basis index {idx}");
        }
    }

    #[test]
    fn frob_distance_hand_values() {
        let i2 = CMatrix::identity(2);
        assert_eq!(frob_distance(&i2, &i2).unwrap(), 0.0);

        let z = sigma_z();
        let neg_z = z.scale(Complex64::new(-1.0, 0.0));
        // ‖σz − (−σz)‖_F = ‖2σz‖_F = 2√2
        assert!((frob_distance(&z, &neg_z).unwrap() - 2.0 * SQRT_2).abs() < 1e-15);

        let wrong = CMatrix::identity(3);
        assert!(matches!(
            frob_distance(&i2, &wrong),
            Err(Error::DimMismatch(_))
        ));
    }

    #[test]
    fn phase_aligned_distance_mods_out_global_phase() {
        let h = CMatrix::from_real(2, 2, &[1.0, 1.0, 1.0, -1.0]).scale(Complex64::new(1.0 / SQRT_2, 0.0));
        let minus_h = h.scale(Complex64::new(-1.0, 0.0));
        assert!(phase_aligned_distance(&h, &minus_h).unwrap() < 1e-14);

        let i2 = CMatrix::identity(2);
        assert!(phase_aligned_distance(&i2, &i2).unwrap() < 1e-14);

        // P(π/2) vs P(π/4) stay apart even after phase alignment.
        let p = |phi: f64| {
            CMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, phi)])
        };
        assert!(phase_aligned_distance(&p(FRAC_PI_2), &p(FRAC_PI_2 / 2.0)).unwrap() > 0.1);
    }

    #[test]
    fn phase_aligned_distance_rejects_non_unitary() {
        let m = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 2.0]);
        let i2 = CMatrix::identity(2);
        assert!(matches!(
            phase_aligned_distance(&m, &i2),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn predicates() {
        assert!(sigma_z().is_hermitian(1e-14));
        assert!(sigma_x().is_unitary(1e-14));
        let anti = sigma_x().scale(Complex64::new(0.0, 1.0));
        assert!(anti.is_anti_hermitian(1e-14));
        assert!(!anti.is_hermitian(1e-14));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
            proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |vals| {
                CMatrix::new(
                    n,
                    n,
                    vals.into_iter().map(|(re, im)| Complex64::new(re, im)).collect(),
                )
            })
        }

        proptest! {
            // (a⊗b)(c⊗d) = (ac)⊗(bd)
            #[test]
            fn kron_mixed_product_2x2(
                a in arb_matrix(2), b in arb_matrix(2),
                c in arb_matrix(2), d in arb_matrix(2),
            ) {
                let lhs = kron(&a, &b).matmul(&kron(&c, &d));
                let rhs = kron(&a.matmul(&c), &b.matmul(&d));
                prop_assert!(frob_distance(&lhs, &rhs).unwrap() < 1e-13);
            }

            #[test]
            fn kron_mixed_product_4x4(
                a in arb_matrix(4), b in arb_matrix(2),
                c in arb_matrix(4), d in arb_matrix(2),
            ) {
                let lhs = kron(&a, &b).matmul(&kron(&c, &d));
                let rhs = kron(&a.matmul(&c), &b.matmul(&d));
                prop_assert!(frob_distance(&lhs, &rhs).unwrap() < 1e-12);
            }
        }
    }
}
