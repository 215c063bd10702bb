//! Spectra of the two-spin block and the two-block system, and how the
//! degenerate ground space carries a code qubit.
//!
//! ```bash
//! cargo run --example spectrum
//! ```

use holospin::holonomy::{extract_subspace, Which};
use holospin::linalg::eig_hermitian;
use holospin::spinchain::{build_block_h0, build_two_block_h0, code_basis};

fn main() {
    let j = 1.0;

    // At B = 2J the block Hamiltonian B(σ₁z+σ₂z) + J σ⃗₁·σ⃗₂ has a doubly
    // degenerate ground level at −3J.
    let sys = build_block_h0(j, 2.0 * j).unwrap();
    let eig = eig_hermitian(&sys.h, 1e-12).unwrap();
    println!("single block, J = {j}, B = 2J:");
    println!("  eigenvalues: {:?}", eig.values);

    let ground = extract_subspace(&sys, Which::Ground, 1e-9).unwrap();
    println!(
        "  ground space: dimension {} at energy {:.6}",
        ground.dim(),
        ground.energy
    );

    let basis = code_basis();
    println!("  code states (exact):");
    println!("    |0> = |-,->          amplitudes {:?}", amplitudes(&basis.zero_state));
    println!("    |1> = singlet        amplitudes {:?}", amplitudes(&basis.one_state));

    // Detuning B away from 2J splits the pair: the code space is gone.
    let detuned = build_block_h0(j, 0.5).unwrap();
    let eig = eig_hermitian(&detuned.h, 1e-12).unwrap();
    let ground = extract_subspace(&detuned, Which::Ground, 1e-9).unwrap();
    println!("\nsingle block, J = {j}, B = 0.5 (off the degeneracy point):");
    println!("  eigenvalues: {:?}", eig.values);
    println!("  ground degeneracy: {}", ground.dim());

    // Two non-interacting blocks: ground level −6J with multiplicity 4,
    // exactly the tensor product of two code qubits.
    let two = build_two_block_h0(j).unwrap();
    let ground = extract_subspace(&two, Which::Ground, 1e-9).unwrap();
    println!("\ntwo blocks, J = {j}:");
    println!(
        "  ground space: dimension {} at energy {:.6}",
        ground.dim(),
        ground.energy
    );
}

fn amplitudes(v: &holospin::linalg::CVector) -> Vec<f64> {
    v.data().iter().map(|z| z.re).collect()
}
