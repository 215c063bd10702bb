//! Exact time-dependent propagation under H(t) = e^{Xt} H₀ e^{−Xt}, checked
//! against an RK4 integration, plus leakage and the gap between the true
//! projected evolution and the holonomy formula.
//!
//! ```bash
//! cargo run --example dynamics_check
//! ```

use std::f64::consts::FRAC_PI_2;

use holospin::dynamics::{exact_propagator, rk4_propagator, run_protocol};
use holospin::linalg::frob_distance;
use holospin::synth::{hadamard_recipe, phase_gate_recipe, TargetGate};

fn main() {
    // phase gate: [X, H₀] = 0, the Hamiltonian never moves
    let recipe = phase_gate_recipe(FRAC_PI_2, 1.0).unwrap();
    let sys = recipe.build_system().unwrap();
    let x = recipe.generator();

    let exact = exact_propagator(&sys, &x, 1.0).unwrap();
    let rk4 = rk4_propagator(&sys, &x, 1.0, 20_000).unwrap();
    println!("phase gate scenario (J = 1, phi = π/2):");
    println!(
        "  exact vs RK4(20000): {:.3e}   (RK4 drift before projection {:.3e})",
        frob_distance(&exact, &rk4.unitary).unwrap(),
        rk4.drift
    );

    let run = run_protocol(&recipe, &sys).unwrap();
    println!("  leakage out of the code space: {:.3e}", run.leakage);
    let prediction = recipe.holonomy().unwrap().total;
    println!(
        "  |projected - holonomy prediction|: {:.6}",
        frob_distance(&run.projected, &prediction).unwrap()
    );
    println!(
        "  fidelity(projected, P(π/2)) mod global phase: {:.6}",
        run.fidelity_to(&TargetGate::phase(FRAC_PI_2).matrix).unwrap()
    );
    println!("  (the commuting loop carries only the dynamical phase: the");
    println!("   geometric factor of the formula is pure gauge here, so the");
    println!("   projected dynamics and the formula differ by e^A — reported,");
    println!("   not hidden; see the README limitations section)");

    // Hadamard: the loop does not close, leakage saturates
    let recipe = hadamard_recipe(1.0).unwrap();
    let sys = recipe.build_system().unwrap();
    let x = recipe.generator();
    let exact = exact_propagator(&sys, &x, 1.0).unwrap();
    let rk4 = rk4_propagator(&sys, &x, 1.0, 20_000).unwrap();
    let run = run_protocol(&recipe, &sys).unwrap();
    println!("\nhadamard scenario (J = 1):");
    println!(
        "  exact vs RK4(20000): {:.3e}",
        frob_distance(&exact, &rk4.unitary).unwrap()
    );
    println!("  leakage out of the code space: {:.6}", run.leakage);
    println!(
        "  fidelity(projected, H) mod global phase: {:.6}",
        run.fidelity_to(&TargetGate::hadamard().matrix).unwrap()
    );
    println!(
        "  pause conventions H(1) vs H0 differ by {:.3e} (non-closing loop)",
        frob_distance(&run.u_full, &run.u_full_pause_h0).unwrap()
    );
}
