//! Holonomic quantum gates on two-spin Heisenberg blocks.
//!
//! Each code qubit lives in the doubly degenerate ground space of a two-spin
//! block with Hamiltonian `H₀ = B(σ₁z + σ₂z) + J σ⃗₁·σ⃗₂` at `B = 2J`. Loops in
//! the family of iso-spectral Hamiltonians `H(t) = e^{Xt} H₀ e^{−Xt}` produce
//! gates that combine a non-Abelian geometric factor `e^{A}` (with `A` the
//! projection of the loop generator `X` onto the code space) and a dynamical
//! phase `e^{−iE₀(1+τ)}` tuned through a pause of length `τ`.
//!
//! The crate provides:
//!
//! - [`linalg`]: dense complex matrices, Hermitian eigendecomposition, matrix
//!   exponentials;
//! - [`spinchain`]: Pauli/site operators, block Hamiltonians and their exact
//!   code bases;
//! - [`holonomy`]: degenerate-subspace extraction, projected connections,
//!   holonomies, and discretized path-ordered oracles;
//! - [`synth`]: closed-form recipes for the phase, Hadamard and
//!   controlled-phase gates, plus an inverse solver for arbitrary
//!   single-qubit targets;
//! - [`dynamics`]: exact and RK4 propagators for the time-dependent
//!   Hamiltonian, leakage and fidelity diagnostics, adiabatic sweeps;
//! - [`cli`]: the scenario/report layer behind the `holospin` command-line
//!   tool.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod holonomy;
pub mod linalg;
pub mod spinchain;
pub mod synth;

pub use error::{Error, Result};
