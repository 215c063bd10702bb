//! Synthesize the Hadamard gate from one loop: axis (1/√3, 0, −√(2/3)),
//! ω₁ = (π/2)√3, ω₂ = 0, pause from 3J(1+τ) = −(π/(2√2))(√2+1) + 2mπ.
//!
//! ```bash
//! cargo run --example hadamard_gate
//! ```

use holospin::holonomy::loop_closure_defect;
use holospin::linalg::frob_distance;
use holospin::synth::{hadamard_recipe, GateRecipe, TargetGate};

fn main() {
    let j = 1.0;
    let recipe = hadamard_recipe(j).unwrap();
    let GateRecipe::SingleQubit {
        axis,
        omega1,
        omega2,
        tau,
        winding,
        ..
    } = &recipe
    else {
        unreachable!()
    };
    println!("Hadamard recipe at J = {j}:");
    println!("  axis    = [{:.10}, {:.10}, {:.10}]", axis[0], axis[1], axis[2]);
    println!("  omega1  = {omega1:.12}   (= (π/2)√3)");
    println!("  omega2  = {omega2}");
    println!("  tau     = {tau:.12}   (m = {winding})");

    let report = recipe.holonomy().unwrap();
    println!("\npredicted gate:");
    print!("{}", report.total);
    let err = frob_distance(&report.total, &TargetGate::hadamard().matrix).unwrap();
    println!("distance to H (global phase included): {err:.3e}");

    // This loop generator does not conjugate H₀ back to itself: the
    // Hamiltonian path fails to close, which the library reports rather than
    // hides. The holonomy formula above is exact regardless.
    let sys = recipe.build_system().unwrap();
    let defect = loop_closure_defect(&recipe.generator(), &sys).unwrap();
    println!("loop closure defect: {defect:.6} (strictly positive)");
}
