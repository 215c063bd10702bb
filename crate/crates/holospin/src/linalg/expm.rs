//! Matrix exponentials.
//!
//! Hermitian and anti-Hermitian arguments go through the eigendecomposition,
//! which keeps the result exactly unitary up to the orthogonality of the
//! eigenvectors. Everything else falls back to scaling-and-squaring with a
//! [13/13] Padé approximant.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::cmatrix::{CMatrix, STRUCTURE_TOL};
use crate::linalg::eig::eig_hermitian;

/// e^m for a square complex matrix.
pub fn expm(m: &CMatrix) -> Result<CMatrix> {
    if !m.is_square() {
        return Err(Error::DimMismatch(format!(
            "{}x{} is not square",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    if m.is_anti_hermitian(STRUCTURE_TOL) {
        // m = i·h with h Hermitian
        let h = m.scale(Complex64::new(0.0, -1.0));
        if m.rows() == 2 {
            return Ok(exp_i_hermitian_2x2(&h));
        }
        let eig = eig_hermitian(&h, STRUCTURE_TOL)?;
        let phases: Vec<Complex64> = eig
            .values
            .iter()
            .map(|&l| Complex64::from_polar(1.0, l))
            .collect();
        return Ok(eig
            .vectors
            .matmul(&CMatrix::diagonal(&phases))
            .matmul(&eig.vectors.adjoint()));
    }
    if m.is_hermitian(STRUCTURE_TOL) {
        let eig = eig_hermitian(m, STRUCTURE_TOL)?;
        let exps: Vec<Complex64> = eig
            .values
            .iter()
            .map(|&l| Complex64::new(l.exp(), 0.0))
            .collect();
        return Ok(eig
            .vectors
            .matmul(&CMatrix::diagonal(&exps))
            .matmul(&eig.vectors.adjoint()));
    }
    pade_expm(m)
}

/// Closed form `e^{iH}` for Hermitian 2×2 `H = aI + b⃗·σ⃗`:
/// `e^{ia}(cos|b⃗| I + i sinc|b⃗| b⃗·σ⃗)`. One rounding per entry, which keeps
/// long products of small-step exponentials (the path-ordered oracle) at the
/// f64 floor.
fn exp_i_hermitian_2x2(h: &CMatrix) -> CMatrix {
    let a = (h[(0, 0)].re + h[(1, 1)].re) / 2.0;
    let bz = (h[(0, 0)].re - h[(1, 1)].re) / 2.0;
    let bx = h[(0, 1)].re;
    let by = -h[(0, 1)].im;
    let r = (bx * bx + by * by + bz * bz).sqrt();
    // sin(r)/r, stable near r = 0
    let sinc = if r > 1e-6 {
        r.sin() / r
    } else {
        1.0 - r * r / 6.0
    };
    let cos_r = Complex64::new(r.cos(), 0.0);
    let i_sinc = Complex64::new(0.0, sinc);
    let phase = Complex64::from_polar(1.0, a);
    let mut out = CMatrix::zeros(2, 2);
    out[(0, 0)] = phase * (cos_r + i_sinc * bz);
    out[(0, 1)] = phase * i_sinc * Complex64::new(bx, -by);
    out[(1, 0)] = phase * i_sinc * Complex64::new(bx, by);
    out[(1, 1)] = phase * (cos_r - i_sinc * bz);
    out
}

const PADE13_THETA: f64 = 5.371_920_351_148_152;

const PADE13_B: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

fn pade_expm(m: &CMatrix) -> Result<CMatrix> {
    let n = m.rows();
    let norm = m.one_norm();
    let squarings = if norm > PADE13_THETA {
        (norm / PADE13_THETA).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(Complex64::new(0.5f64.powi(squarings as i32), 0.0));

    let ident = CMatrix::identity(n);
    let a2 = a.matmul(&a);
    let a4 = a2.matmul(&a2);
    let a6 = a2.matmul(&a4);

    let b = |k: usize| Complex64::new(PADE13_B[k], 0.0);
    let u_inner = &(&a6.scale(b(13)) + &a4.scale(b(11))) + &a2.scale(b(9));
    let u_poly = &(&(&a6.matmul(&u_inner) + &a6.scale(b(7))) + &a4.scale(b(5)))
        + &(&a2.scale(b(3)) + &ident.scale(b(1)));
    let u = a.matmul(&u_poly);
    let v_inner = &(&a6.scale(b(12)) + &a4.scale(b(10))) + &a2.scale(b(8));
    let v = &(&(&a6.matmul(&v_inner) + &a6.scale(b(6))) + &a4.scale(b(4)))
        + &(&a2.scale(b(2)) + &ident.scale(b(0)));

    // (V − U) F = (V + U)
    let mut f = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..squarings {
        f = f.matmul(&f);
    }
    Ok(f)
}

/// Solve AX = B by Gaussian elimination with partial pivoting.
fn solve(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let n = a.rows();
    assert!(a.is_square() && b.rows() == n);
    let mut lhs = a.clone();
    let mut rhs = b.clone();
    for col in 0..n {
        let mut pivot = col;
        let mut pivot_mag = lhs[(col, col)].norm();
        for r in col + 1..n {
            let mag = lhs[(r, col)].norm();
            if mag > pivot_mag {
                pivot = r;
                pivot_mag = mag;
            }
        }
        if pivot_mag == 0.0 {
            return Err(Error::NonFinite);
        }
        if pivot != col {
            for j in 0..n {
                let (x, y) = (lhs[(col, j)], lhs[(pivot, j)]);
                lhs[(col, j)] = y;
                lhs[(pivot, j)] = x;
            }
            for j in 0..rhs.cols() {
                let (x, y) = (rhs[(col, j)], rhs[(pivot, j)]);
                rhs[(col, j)] = y;
                rhs[(pivot, j)] = x;
            }
        }
        let inv = Complex64::new(1.0, 0.0) / lhs[(col, col)];
        for r in col + 1..n {
            let factor = lhs[(r, col)] * inv;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = lhs[(col, j)];
                lhs[(r, j)] -= factor * v;
            }
            for j in 0..rhs.cols() {
                let v = rhs[(col, j)];
                rhs[(r, j)] -= factor * v;
            }
        }
    }
    let mut x = CMatrix::zeros(n, rhs.cols());
    for j in 0..rhs.cols() {
        for i in (0..n).rev() {
            let mut acc = rhs[(i, j)];
            for k in i + 1..n {
                acc -= lhs[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / lhs[(i, i)];
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cmatrix::frob_distance;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    /// Straightforward Taylor oracle for cross-checks: converges fine at the
    /// small norms used in tests.
    fn taylor_expm(m: &CMatrix) -> CMatrix {
        let n = m.rows();
        let mut out = CMatrix::identity(n);
        let mut term = CMatrix::identity(n);
        for k in 1..60 {
            term = term.matmul(m).scale(Complex64::new(1.0 / k as f64, 0.0));
            out = &out + &term;
        }
        out
    }

    #[test]
    fn expm_zero_is_identity() {
        let z = CMatrix::zeros(3, 3);
        assert!(frob_distance(&expm(&z).unwrap(), &CMatrix::identity(3)).unwrap() < 1e-15);
    }

    #[test]
    fn expm_half_pi_sigma_x() {
        // e^{i(π/2)σx} = iσx
        let sx = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let m = sx.scale(Complex64::new(0.0, FRAC_PI_2));
        let expected = sx.scale(Complex64::new(0.0, 1.0));
        assert!(frob_distance(&expm(&m).unwrap(), &expected).unwrap() < 1e-13);
    }

    #[test]
    fn expm_diagonal_phases() {
        let m = CMatrix::diagonal(&[
            Complex64::new(0.0, -PI),
            Complex64::new(0.0, -PI),
            Complex64::new(0.0, -PI),
            Complex64::new(0.0, 0.0),
        ]);
        let expected = CMatrix::diagonal(&[
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]);
        assert!(frob_distance(&expm(&m).unwrap(), &expected).unwrap() < 1e-13);
    }

    #[test]
    fn expm_nilpotent_exact() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let expected = CMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        assert!(frob_distance(&expm(&m).unwrap(), &expected).unwrap() < 1e-14);
    }

    #[test]
    fn expm_general_matches_taylor() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for n in [2usize, 4, 6] {
            let mut m = CMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = Complex64::new(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
                }
            }
            let got = expm(&m).unwrap();
            let want = taylor_expm(&m);
            assert!(
                frob_distance(&got, &want).unwrap() < 1e-12,
                "dim {n}: {}",
                frob_distance(&got, &want).unwrap()
            );

            // e^m · e^{−m} = I also on the general (Padé) path
            let inv = expm(&m.scale(Complex64::new(-1.0, 0.0))).unwrap();
            let product = got.matmul(&inv);
            assert!(
                frob_distance(&product, &CMatrix::identity(n)).unwrap() < 1e-12,
                "dim {n}"
            );
        }
    }

    #[test]
    fn expm_anti_hermitian_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in [2usize, 4, 8, 16] {
            let mut m = CMatrix::zeros(n, n);
            for i in 0..n {
                m[(i, i)] = Complex64::new(0.0, rng.gen_range(-2.0..2.0));
                for j in i + 1..n {
                    let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                    m[(i, j)] = z;
                    m[(j, i)] = -z.conj();
                }
            }
            let u = expm(&m).unwrap();
            assert!(u.is_unitary(1e-12), "dim {n}");
            let inv = expm(&m.scale(Complex64::new(-1.0, 0.0))).unwrap();
            assert!(
                frob_distance(&u.matmul(&inv), &CMatrix::identity(n)).unwrap() < 1e-12,
                "dim {n}"
            );
        }
    }

    #[test]
    fn expm_rejects_non_finite() {
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 1)] = Complex64::new(f64::NAN, 0.0);
        assert!(matches!(expm(&m), Err(Error::NonFinite)));
    }
}
