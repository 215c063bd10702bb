//! Synthesize the phase gate P(φ): rotate both spins about z with
//! ω₁ = ω₂ = φ/2, then pause until 3J(1+τ) = φ + 2mπ.
//!
//! ```bash
//! cargo run --example phase_gate
//! ```

use std::f64::consts::FRAC_PI_2;

use holospin::linalg::frob_distance;
use holospin::synth::{phase_gate_recipe, GateRecipe, TargetGate};

fn main() {
    let phi = FRAC_PI_2;
    let j = 1.0;

    let recipe = phase_gate_recipe(phi, j).unwrap();
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
    println!("P(π/2) recipe at J = {j}:");
    println!("  axis    = {axis:?}");
    println!("  omega1  = {omega1:.12}");
    println!("  omega2  = {omega2:.12}");
    println!("  tau     = {tau:.12}   (m = {winding})");

    let report = recipe.holonomy().unwrap();
    println!("\nconnection A = basis† X basis:");
    print!("{}", report.connection);
    println!("geometric factor e^A:");
    print!("{}", report.geometric);
    println!(
        "dynamical phase e^(-iE0(1+tau)) = {:.12}{:+.12}i",
        report.dynamical_phase.re, report.dynamical_phase.im
    );
    println!("\npredicted gate (dynamical x geometric):");
    print!("{}", report.total);

    let target = TargetGate::phase(phi).matrix;
    let err = frob_distance(&report.total, &target).unwrap();
    println!("distance to diag(1, e^(i pi/2)): {err:.3e}");
    println!("closure defect of the loop:     {:.3e}", report.closure_defect);
}
