//! Spin operators, block Hamiltonians and code bases.
//!
//! Conventions: spin 1 is the leftmost tensor factor, `|+⟩ = (1,0)ᵀ`,
//! `|−⟩ = (0,1)ᵀ`, `σz|±⟩ = ±|±⟩`. With this ordering the two-spin block
//! Hamiltonian at `B = 2J` is, in the basis `(|++⟩,|+−⟩,|−+⟩,|−−⟩)`,
//!
//! ```text
//! [[5J, 0,  0,  0 ],
//!  [0, −J,  2J, 0 ],
//!  [0,  2J, −J, 0 ],
//!  [0,  0,  0, −3J]]
//! ```
//!
//! whose spectrum is `{−3J, −3J, J, 5J}`: the doubly degenerate ground space
//! spanned by `|−,−⟩` and the singlet carries the code qubit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, CMatrix, CVector};

/// Pauli axis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// The 2×2 Pauli matrix along `axis`.
pub fn pauli(axis: Axis) -> CMatrix {
    match axis {
        Axis::X => CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]),
        Axis::Y => CMatrix::new(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        ),
        Axis::Z => CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]),
    }
}

/// Embed a single-site operator at `site` (0-based, leftmost = spin 1) into
/// the `n_spins`-spin space: `I ⊗ … ⊗ op ⊗ … ⊗ I`.
pub fn site_operator(op: &CMatrix, site: usize, n_spins: usize) -> Result<CMatrix> {
    if site >= n_spins {
        return Err(Error::IndexOutOfRange { site, n_spins });
    }
    assert_eq!((op.rows(), op.cols()), (2, 2), "site operators are 2x2");
    let mut out = CMatrix::identity(1);
    for k in 0..n_spins {
        out = if k == site {
            kron(&out, op)
        } else {
            kron(&out, &CMatrix::identity(2))
        };
    }
    Ok(out)
}

/// A spin-block Hamiltonian together with the parameters that built it.
#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub n_spins: usize,
    pub j: f64,
    pub b: f64,
    pub h: CMatrix,
}

impl BlockSystem {
    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    /// True when the field satisfies the `B = 2J` degeneracy condition.
    pub fn is_degenerate_point(&self) -> bool {
        (self.b - 2.0 * self.j).abs() <= 1e-12 * self.j.abs().max(1.0)
    }
}

/// Two-spin block `H₀ = B(σ₁z + σ₂z) + J σ⃗₁·σ⃗₂`.
pub fn build_block_h0(j: f64, b: f64) -> Result<BlockSystem> {
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let sz1 = site_operator(&pauli(Axis::Z), 0, 2)?;
    let sz2 = site_operator(&pauli(Axis::Z), 1, 2)?;
    let mut h = (&sz1 + &sz2).scale(Complex64::new(b, 0.0));
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let s1 = site_operator(&pauli(axis), 0, 2)?;
        let s2 = site_operator(&pauli(axis), 1, 2)?;
        h = &h + &s1.matmul(&s2).scale(Complex64::new(j, 0.0));
    }
    Ok(BlockSystem {
        n_spins: 2,
        j,
        b,
        h,
    })
}

/// Two non-interacting blocks at the degenerate point:
/// `H = H₀ ⊗ I₄ + I₄ ⊗ H₀` with `B = 2J` in each block.
pub fn build_two_block_h0(j: f64) -> Result<BlockSystem> {
    let block = build_block_h0(j, 2.0 * j)?;
    let i4 = CMatrix::identity(4);
    let h = &kron(&block.h, &i4) + &kron(&i4, &block.h);
    Ok(BlockSystem {
        n_spins: 4,
        j,
        b: 2.0 * j,
        h,
    })
}

/// The exact code states of a single block.
#[derive(Debug, Clone)]
pub struct CodeBasis {
    /// `|0⟩ = |−,−⟩`
    pub zero_state: CVector,
    /// `|1⟩ = (|+,−⟩ − |−,+⟩)/√2`
    pub one_state: CVector,
}

impl CodeBasis {
    /// 4×2 matrix with the code states as columns.
    pub fn as_matrix(&self) -> CMatrix {
        CMatrix::from_columns(&[self.zero_state.clone(), self.one_state.clone()])
    }
}

/// Closed-form single-block code basis. These are exact constructors, not
/// eigensolver output, so signs and phases are pinned.
pub fn code_basis() -> CodeBasis {
    let zero_state = CVector::basis_state(4, 3);
    let mut one = vec![Complex64::new(0.0, 0.0); 4];
    let amp = 1.0 / 2.0_f64.sqrt();
    one[1] = Complex64::new(amp, 0.0);
    one[2] = Complex64::new(-amp, 0.0);
    CodeBasis {
        zero_state,
        one_state: CVector::new(one),
    }
}

/// The ordered two-qubit code quadruple
/// `(|0,0⟩, |0,1⟩, |1,0⟩, |1,1⟩)` on the 16-dimensional two-block space.
pub fn two_block_code_basis() -> [CVector; 4] {
    let single = code_basis();
    let z = &single.zero_state;
    let o = &single.one_state;
    [z.tensor(z), z.tensor(o), o.tensor(z), o.tensor(o)]
}

/// Code basis as a matrix: 4×2 for one block, 16×4 for two blocks.
pub fn code_basis_matrix(n_blocks: usize) -> CMatrix {
    match n_blocks {
        1 => code_basis().as_matrix(),
        2 => CMatrix::from_columns(&two_block_code_basis()),
        other => panic!("supported block counts are 1 and 2, got {other}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eig_hermitian, frob_distance};

    #[test]
    fn pauli_algebra() {
        let expected_z = CMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        assert_eq!(pauli(Axis::Z), expected_z);
        let x2 = pauli(Axis::X).matmul(&pauli(Axis::X));
        assert!(frob_distance(&x2, &CMatrix::identity(2)).unwrap() < 1e-15);
        // σx σy = i σz
        let xy = pauli(Axis::X).matmul(&pauli(Axis::Y));
        let i_sz = pauli(Axis::Z).scale(Complex64::new(0.0, 1.0));
        assert!(frob_distance(&xy, &i_sz).unwrap() < 1e-15);
    }

    #[test]
    fn site_operator_placement() {
        let sz = pauli(Axis::Z);
        assert_eq!(site_operator(&sz, 0, 1).unwrap(), sz);

        let z2 = site_operator(&sz, 1, 2).unwrap();
        let expected = CMatrix::from_real(
            4,
            4,
            &[
                1.0, 0.0, 0.0, 0.0, //
                0.0, -1.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, -1.0,
            ],
        );
        assert!(frob_distance(&z2, &expected).unwrap() < 1e-15);

        // σx on spin 1 flips |−,−⟩ into |+,−⟩
        let x1 = site_operator(&pauli(Axis::X), 0, 2).unwrap();
        let out = x1.matvec(&CVector::basis_state(4, 3));
        assert!((&out - &CVector::basis_state(4, 1)).norm() < 1e-15);

        assert!(matches!(
            site_operator(&sz, 2, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn block_matrix_form_at_degeneracy() {
        let sys = build_block_h0(1.0, 2.0).unwrap();
        let expected = CMatrix::from_real(
            4,
            4,
            &[
                5.0, 0.0, 0.0, 0.0, //
                0.0, -1.0, 2.0, 0.0, //
                0.0, 2.0, -1.0, 0.0, //
                0.0, 0.0, 0.0, -3.0,
            ],
        );
        assert!(frob_distance(&sys.h, &expected).unwrap() < 1e-14);
        assert!(sys.h.is_hermitian(1e-12));
        assert!(sys.is_degenerate_point());
    }

    #[test]
    fn block_spectrum() {
        let sys = build_block_h0(1.0, 2.0).unwrap();
        let eig = eig_hermitian(&sys.h, 1e-12).unwrap();
        for (got, want) in eig.values.iter().zip([-3.0, -3.0, 1.0, 5.0]) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }

        // pure Heisenberg point: singlet at −3J below the triplet at J
        let free = build_block_h0(1.0, 0.0).unwrap();
        let eig = eig_hermitian(&free.h, 1e-12).unwrap();
        for (got, want) in eig.values.iter().zip([-3.0, 1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-13);
        }

        assert!(matches!(build_block_h0(0.0, 0.0), Err(Error::ZeroCoupling)));
    }

    #[test]
    fn spectrum_scales_linearly_in_j() {
        for j in [0.5, 2.0, -1.0] {
            let sys = build_block_h0(j, 2.0 * j).unwrap();
            let eig = eig_hermitian(&sys.h, 1e-12).unwrap();
            let mut expected = [-3.0 * j, -3.0 * j, j, 5.0 * j];
            expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in eig.values.iter().zip(expected) {
                assert!((got - want).abs() < 1e-12 * j.abs());
            }
        }
    }

    #[test]
    fn ground_space_matches_code_basis() {
        let sys = build_block_h0(1.0, 2.0).unwrap();
        let eig = eig_hermitian(&sys.h, 1e-12).unwrap();
        let vmat = CMatrix::from_columns(&[eig.vectors.column(0), eig.vectors.column(1)]);
        let p_eig = vmat.matmul(&vmat.adjoint());
        let cmat = code_basis_matrix(1);
        let p_code = cmat.matmul(&cmat.adjoint());
        assert!(frob_distance(&p_eig, &p_code).unwrap() < 1e-10);
    }

    #[test]
    fn two_block_ground_space() {
        let sys = build_two_block_h0(1.0).unwrap();
        assert_eq!(sys.dim(), 16);
        let eig = eig_hermitian(&sys.h, 1e-12).unwrap();
        for k in 0..4 {
            assert!((eig.values[k] + 6.0).abs() < 1e-12, "lowest four at −6J");
        }
        assert!(eig.values[4] > -6.0 + 1.0, "multiplicity exactly 4");

        // ⟨0,0|H|0,0⟩ = −6 with |0,0⟩ = |−,−,−,−⟩
        let states = two_block_code_basis();
        let h00 = states[0].inner(&sys.h.matvec(&states[0]));
        assert!((h00.re + 6.0).abs() < 1e-13 && h00.im.abs() < 1e-15);

        // spectrum scales linearly in J
        let doubled = build_two_block_h0(2.0).unwrap();
        let e2 = eig_hermitian(&doubled.h, 1e-12).unwrap().values;
        for (a, b) in eig.values.iter().zip(&e2) {
            assert!((2.0 * a - b).abs() < 1e-12);
        }

        // two-block ground projector = kron of single-block projectors
        let cmat1 = code_basis_matrix(1);
        let p1 = cmat1.matmul(&cmat1.adjoint());
        let vmat = CMatrix::from_columns(&[
            eig.vectors.column(0),
            eig.vectors.column(1),
            eig.vectors.column(2),
            eig.vectors.column(3),
        ]);
        let p_eig = vmat.matmul(&vmat.adjoint());
        assert!(frob_distance(&p_eig, &kron(&p1, &p1)).unwrap() < 1e-10);
    }

    #[test]
    fn code_states_exact_amplitudes() {
        let basis = code_basis();
        let one = &basis.one_state;
        let amp = 1.0 / 2.0_f64.sqrt();
        assert_eq!(one[0], Complex64::new(0.0, 0.0));
        assert!((one[1].re - amp).abs() < 1e-16);
        assert!((one[2].re + amp).abs() < 1e-16);
        assert_eq!(one[3], Complex64::new(0.0, 0.0));

        // |1,1⟩ carries amplitude −1/2 on |+,−,−,+⟩ (index 0b0110 = 6)
        let states = two_block_code_basis();
        assert!((states[3][6].re + 0.5).abs() < 1e-15);

        // orthonormal quadruple
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((a.inner(b) - Complex64::new(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn h0_commutes_with_total_sz() {
        let sys = build_block_h0(1.3, 2.6).unwrap();
        let sz_total = &site_operator(&pauli(Axis::Z), 0, 2).unwrap()
            + &site_operator(&pauli(Axis::Z), 1, 2).unwrap();
        let comm = &sys.h.matmul(&sz_total) - &sz_total.matmul(&sys.h);
        assert!(comm.frob_norm() < 1e-12);
    }
}
