//! Invert arbitrary single-qubit unitaries: decompose U = e^{ig}·e^{i r⃗·σ⃗},
//! map r⃗ back to a rotation axis and frequencies, and tune the pause so the
//! holonomy reproduces U exactly, global phase included.
//!
//! ```bash
//! cargo run --example arbitrary_single_qubit
//! ```

use num_complex::Complex64;

use holospin::linalg::{frob_distance, CMatrix};
use holospin::synth::{single_qubit_recipe, GateRecipe, TargetGate};

fn main() {
    let j = 1.0;

    // the solver regenerates the closed-form Hadamard solution
    let recipe = single_qubit_recipe(&TargetGate::hadamard(), j).unwrap();
    if let GateRecipe::SingleQubit {
        axis,
        omega1,
        omega2,
        ..
    } = &recipe
    {
        println!("Hadamard, recovered by the general solver:");
        println!("  axis   = [{:.10}, {:.10}, {:.10}]", axis[0], axis[1], axis[2]);
        println!("  omega1 = {omega1:.12}, omega2 = {omega2}");
    }

    // a few handpicked targets
    let targets: Vec<(&str, CMatrix)> = vec![
        ("T gate", phase_matrix(std::f64::consts::FRAC_PI_4)),
        ("sqrt(X)", sqrt_x()),
        ("-I (branch cut)", CMatrix::identity(2).scale(Complex64::new(-1.0, 0.0))),
        ("e^{i0.3}·R_y(1.1)", phased_ry(0.3, 1.1)),
    ];
    println!("\ngeneral targets at J = {j}:");
    for (name, matrix) in targets {
        let target = TargetGate::custom(matrix.clone()).unwrap();
        let recipe = single_qubit_recipe(&target, j).unwrap();
        let realized = recipe.holonomy().unwrap().total;
        let err = frob_distance(&realized, &matrix).unwrap();
        println!(
            "  {name:<18} tau = {:.6}, m = {}, round-trip error {err:.3e}",
            recipe.tau(),
            recipe.winding()
        );
    }
}

fn phase_matrix(phi: f64) -> CMatrix {
    CMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, phi)])
}

fn sqrt_x() -> CMatrix {
    let p = Complex64::new(0.5, 0.5);
    let m = Complex64::new(0.5, -0.5);
    CMatrix::new(2, 2, vec![p, m, m, p])
}

fn phased_ry(g: f64, theta: f64) -> CMatrix {
    let phase = Complex64::from_polar(1.0, g);
    let c = Complex64::new((theta / 2.0).cos(), 0.0);
    let s = Complex64::new((theta / 2.0).sin(), 0.0);
    CMatrix::new(2, 2, vec![phase * c, -phase * s, phase * s, phase * c])
}
