//! The two-qubit controlled-phase gate C(φ) on V₀⊗V₀: couple the endpoint
//! spins of two adjacent blocks with X = iφ(σ₂zσ₃z + σ₂z + σ₃z) and pause
//! until 6J(1+τ) = φ + 2mπ.
//!
//! ```bash
//! cargo run --example controlled_phase
//! ```

use std::f64::consts::PI;

use holospin::holonomy::{project_connection, LoopGenerator, Subspace};
use holospin::linalg::frob_distance;
use holospin::spinchain::build_two_block_h0;
use holospin::synth::{controlled_phase_recipe, TargetGate};

fn main() {
    let phi = PI;
    let j = 1.0;

    // The projected connection is diagonal: −iφ on |0,0⟩, |0,1⟩, |1,0⟩ and 0
    // on |1,1⟩ (the entangled |1,1⟩ component compensates exactly).
    let two = build_two_block_h0(j).unwrap();
    let sub = Subspace::code_space(&two).unwrap();
    let x = LoopGenerator::interblock_coupling(phi);
    let a = project_connection(&x, &sub).unwrap();
    println!("projected connection on (|0,0>, |0,1>, |1,0>, |1,1>):");
    print!("{a}");

    let recipe = controlled_phase_recipe(phi, j).unwrap();
    println!(
        "recipe: phi = {phi:.6}, tau = {:.12}, m = {}",
        recipe.tau(),
        recipe.winding()
    );

    let report = recipe.holonomy().unwrap();
    println!("\npredicted two-qubit gate:");
    print!("{}", report.total);
    let err = frob_distance(&report.total, &TargetGate::controlled_phase(phi).matrix).unwrap();
    println!("distance to diag(1,1,1,e^(i phi)): {err:.3e}");

    // A C(φ) for every angle, not only π
    for phi in [0.5, 1.0, 2.0] {
        let recipe = controlled_phase_recipe(phi, j).unwrap();
        let report = recipe.holonomy().unwrap();
        let err = frob_distance(&report.total, &TargetGate::controlled_phase(phi).matrix).unwrap();
        println!("C({phi}): round-trip error {err:.3e}, tau = {:.6}", recipe.tau());
    }
}
