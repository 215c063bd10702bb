//! Drive the scenario/report layer programmatically: the same entry points
//! the `holospin` binary dispatches to, without spawning a process.
//!
//! ```bash
//! cargo run --example cli_reports
//! ```

use holospin::cli::{cmd_spectrum, cmd_synthesize, cmd_verify, Scenario};

fn main() {
    let spectrum = cmd_spectrum(&Scenario {
        j: Some(1.0),
        b: Some(2.0),
        ..Scenario::default()
    })
    .unwrap();
    println!("spectrum report:\n{}", spectrum.to_json());

    let synthesize = cmd_synthesize(&Scenario {
        gate: Some("cphase".into()),
        phi: Some(std::f64::consts::PI),
        j: Some(1.0),
        ..Scenario::default()
    })
    .unwrap();
    println!("synthesize report:\n{}", synthesize.to_json());

    // a fast verify run: the RK4 oracle at reduced resolution
    let verify = cmd_verify(&Scenario {
        gate: Some("phase".into()),
        phi: Some(std::f64::consts::FRAC_PI_2),
        j: Some(1.0),
        rk4_steps: Some(2000),
        ..Scenario::default()
    })
    .unwrap();
    println!("verify passed: {}", verify.pass);
    for check in &verify.verification.as_ref().unwrap().checks {
        println!(
            "  {:<32} {:>12.3e} <= {:>8.0e}  {}",
            check.name,
            check.value,
            check.threshold,
            if check.pass { "PASS" } else { "FAIL" }
        );
    }
}
