//! Dense complex linear algebra for small matrices (dimension 2–16).

pub mod cmatrix;
pub mod eig;
pub mod expm;

pub use cmatrix::{frob_distance, kron, phase_aligned_distance, CMatrix, CVector};
pub use cmatrix::{CONVERGENCE_TOL, STRUCTURE_TOL};
pub use eig::{eig_hermitian, polar_unitary, EigenSystem};
pub use expm::expm;
