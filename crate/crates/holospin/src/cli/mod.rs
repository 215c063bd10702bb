//! Command-line front end: scenario files in, machine-readable reports out.
//!
//! Exit-code contract: `0` every gated check passed, `2` input or parse
//! error, `3` a verification tolerance failed. Reports are byte-deterministic
//! across repeated runs.

pub mod report;
pub mod scenario;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::dynamics::{
    adiabatic_sweep, exact_propagator, recipe_for, rk4_propagator, run_protocol,
};
use crate::error::{Error, Result};
use crate::holonomy::{
    finite_difference_connection, loop_closure_defect, path_ordered_holonomy, total_gate, Subspace,
};
use crate::linalg::{eig_hermitian, expm, frob_distance, CMatrix};
use crate::spinchain::{build_block_h0, code_basis_matrix};
use crate::synth::GateRecipe;

pub use report::{Report, SweepRow};
pub use scenario::Scenario;

/// Default gate for the round-trip residual; `--tol` overrides it.
pub const ROUNDTRIP_TOL: f64 = 1e-10;
/// Finite-difference connection agreement at `dt = 1e−4`.
pub const FD_CONNECTION_TOL: f64 = 1e-7;
/// Path-ordered product against the closed-form holonomy, constant samples.
pub const PATH_ORDERED_TOL: f64 = 1e-12;
/// Exact propagator against the RK4 oracle.
pub const PROPAGATOR_CROSS_TOL: f64 = 1e-7;
/// Unitarity residuals for both propagators.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Leakage gate, applied only when the loop closes.
pub const LEAKAGE_TOL: f64 = 1e-12;
/// A loop counts as closed when its closure defect stays below this.
pub const CLOSURE_TOL: f64 = 1e-12;

const DEFAULT_RK4_STEPS: usize = 20_000;
const PATH_ORDERED_SAMPLES: usize = 1000;
const FD_STEP: f64 = 1e-4;

#[derive(Debug, Parser)]
#[command(
    name = "holospin",
    version,
    about = "Holonomic gates on two-spin Heisenberg blocks: synthesis and verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, degeneracies and code-space overlap of a block Hamiltonian
    Spectrum(SpectrumArgs),
    /// Solve control parameters for a target gate and report the predicted unitary
    Synthesize(GateArgs),
    /// Synthesize a gate, then run every numerical oracle against the prediction
    Verify(GateArgs),
    /// Adiabatic scaling study over a list of couplings
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Scenario file; inline flags are ignored when present
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Exchange coupling
    #[arg(long = "J", allow_hyphen_values = true)]
    pub j: Option<f64>,
    /// Magnetic field
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Write the report here as well as to stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GateArgs {
    /// Scenario file; inline flags are ignored when present
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Gate label: hadamard | phase | cphase | custom (custom needs --config)
    #[arg(long)]
    pub gate: Option<String>,
    /// Gate angle (radians unless --degrees)
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Exchange coupling
    #[arg(long = "J", allow_hyphen_values = true)]
    pub j: Option<f64>,
    /// Interpret --phi in degrees
    #[arg(long)]
    pub degrees: bool,
    /// Extra windings on top of the minimal pause
    #[arg(long)]
    pub extra_winding: Option<u32>,
    /// RK4 oracle steps (verify only)
    #[arg(long)]
    pub rk4_steps: Option<usize>,
    /// Round-trip tolerance override
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the report here as well as to stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Scenario file; inline flags are ignored when present
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Gate label: hadamard | phase | cphase
    #[arg(long)]
    pub gate: Option<String>,
    /// Gate angle (radians unless --degrees)
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Interpret --phi in degrees
    #[arg(long)]
    pub degrees: bool,
    /// Ascending couplings, comma separated
    #[arg(long = "j-list", value_delimiter = ',')]
    pub j_list: Option<Vec<f64>>,
    /// Also write the sweep as CSV
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the report here as well as to stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Rendered report plus the process exit code.
pub struct CommandOutcome {
    pub report: Report,
    pub json: String,
    pub exit_code: i32,
}

/// Run one subcommand. `Err` means an input problem (exit code 2); an `Ok`
/// outcome carries exit code 0 or 3 depending on the gated checks.
pub fn execute(command: &Command) -> Result<CommandOutcome> {
    match command {
        Command::Spectrum(args) => {
            let scenario = spectrum_scenario(args)?;
            let report = cmd_spectrum(&scenario)?;
            finish(report, args.out.as_deref())
        }
        Command::Synthesize(args) => {
            let scenario = gate_scenario(args)?;
            let report = cmd_synthesize(&scenario)?;
            finish(report, args.out.as_deref())
        }
        Command::Verify(args) => {
            let scenario = gate_scenario(args)?;
            let report = cmd_verify(&scenario)?;
            finish(report, args.out.as_deref())
        }
        Command::Sweep(args) => {
            let scenario = sweep_scenario(args)?;
            let report = cmd_sweep(&scenario)?;
            if let Some(path) = &args.csv {
                let rows = report.sweep.as_deref().unwrap_or(&[]);
                std::fs::write(path, report::sweep_csv(rows)).map_err(|e| {
                    Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            finish(report, args.out.as_deref())
        }
    }
}

fn finish(report: Report, out: Option<&std::path::Path>) -> Result<CommandOutcome> {
    let json = report.to_json();
    if let Some(path) = out {
        std::fs::write(path, &json)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
    }
    let exit_code = if report.pass { 0 } else { 3 };
    Ok(CommandOutcome {
        report,
        json,
        exit_code,
    })
}

fn spectrum_scenario(args: &SpectrumArgs) -> Result<Scenario> {
    if let Some(path) = &args.config {
        return Scenario::from_file(path);
    }
    Ok(Scenario {
        j: args.j,
        b: args.b,
        ..Scenario::default()
    })
}

fn gate_scenario(args: &GateArgs) -> Result<Scenario> {
    if let Some(path) = &args.config {
        return Scenario::from_file(path);
    }
    Ok(Scenario {
        gate: args.gate.clone(),
        phi: args.phi,
        j: args.j,
        degrees: if args.degrees { Some(true) } else { None },
        extra_winding: args.extra_winding,
        rk4_steps: args.rk4_steps,
        tol: args.tol,
        ..Scenario::default()
    })
}

fn sweep_scenario(args: &SweepArgs) -> Result<Scenario> {
    if let Some(path) = &args.config {
        return Scenario::from_file(path);
    }
    Ok(Scenario {
        gate: args.gate.clone(),
        phi: args.phi,
        degrees: if args.degrees { Some(true) } else { None },
        j_list: args.j_list.clone(),
        ..Scenario::default()
    })
}

/// Eigenvalues, level multiplicities and ground/code-space diagnostics.
pub fn cmd_spectrum(scenario: &Scenario) -> Result<Report> {
    let j = scenario.j_value()?;
    let b = scenario
        .b
        .ok_or_else(|| Error::InvalidParameter("missing field b".into()))?;
    if !b.is_finite() {
        return Err(Error::InvalidParameter(format!("b must be finite, got {b}")));
    }
    let sys = build_block_h0(j, b)?;
    let eig = eig_hermitian(&sys.h, 1e-10 * sys.h.frob_norm().max(1.0))?;

    let ctol = 1e-8 * eig.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut levels: Vec<report::Level> = Vec::new();
    for &value in &eig.values {
        match levels.last_mut() {
            Some(level) if (value - level.energy).abs() <= ctol => level.multiplicity += 1,
            _ => levels.push(report::Level {
                energy: value,
                multiplicity: 1,
            }),
        }
    }
    let ground_degeneracy = levels[0].multiplicity;
    let ground_energy = levels[0].energy;

    // tr(P_code · P_ground)/k_ground
    let code = code_basis_matrix(1);
    let p_code = code.matmul(&code.adjoint());
    let ground_cols: Vec<_> = (0..ground_degeneracy).map(|c| eig.vectors.column(c)).collect();
    let gmat = CMatrix::from_columns(&ground_cols);
    let p_ground = gmat.matmul(&gmat.adjoint());
    let overlap = p_code.matmul(&p_ground).trace().re / ground_degeneracy as f64;

    let mut report = Report::new("spectrum", scenario.clone());
    if !sys.is_degenerate_point() {
        report.warnings.push(format!(
            "B = {b} is not the degeneracy point B = 2J = {}; the two-dimensional code space is split",
            2.0 * j
        ));
    }
    report.spectrum = Some(report::SpectrumSection {
        eigenvalues: eig.values.clone(),
        levels,
        ground_energy,
        ground_degeneracy,
        code_space_overlap: overlap,
    });
    Ok(report)
}

fn solved_recipe(scenario: &Scenario) -> Result<(crate::synth::TargetGate, GateRecipe)> {
    let target = scenario.target()?;
    let j = scenario.j_value()?;
    let mut recipe = recipe_for(&target, j)?;
    if let Some(extra) = scenario.extra_winding {
        recipe = recipe.with_extra_winding(extra);
    }
    Ok((target, recipe))
}

/// Solve the recipe and report the predicted gate plus its round-trip
/// residual.
pub fn cmd_synthesize(scenario: &Scenario) -> Result<Report> {
    let (target, recipe) = solved_recipe(scenario)?;
    let holonomy = recipe.holonomy()?;
    let residual = frob_distance(&holonomy.total, &target.matrix)?;
    let tol = scenario.tol.unwrap_or(ROUNDTRIP_TOL);

    let mut report = Report::new("synthesize", scenario.clone());
    report.recipe = Some(report::RecipeSection::from_recipe(&recipe));
    report.connection = Some(scenario::MatrixData::from_cmatrix(&holonomy.connection));
    report.predicted_gate = Some(scenario::MatrixData::from_cmatrix(&holonomy.total));
    let checks = vec![report::Check::new("gate_roundtrip", residual, tol)];
    let info = vec![report::Info::new("closure_defect", holonomy.closure_defect)];
    let verification = report::VerificationSection::from_parts(checks, info);
    report.pass = verification.pass;
    report.verification = Some(verification);
    Ok(report)
}

/// Synthesize, then drive every oracle: finite-difference connection,
/// path-ordered product, exact propagator against RK4, leakage and closure
/// bookkeeping.
pub fn cmd_verify(scenario: &Scenario) -> Result<Report> {
    let (target, recipe) = solved_recipe(scenario)?;
    let holonomy = recipe.holonomy()?;
    let sys = recipe.build_system()?;
    let sub = Subspace::code_space(&sys)?;
    let generator = recipe.generator();
    let tol = scenario.tol.unwrap_or(ROUNDTRIP_TOL);
    let rk4_steps = scenario.rk4_steps.unwrap_or(DEFAULT_RK4_STEPS);

    let mut checks = Vec::new();
    let mut info = Vec::new();

    let roundtrip = frob_distance(&holonomy.total, &target.matrix)?;
    checks.push(report::Check::new("gate_roundtrip", roundtrip, tol));

    // independent oracle 1: finite-difference connection
    let fd = finite_difference_connection(&generator, &sub, 0.3, FD_STEP)?;
    let fd_residual = frob_distance(&fd, &holonomy.connection)?;
    checks.push(report::Check::new(
        "connection_finite_difference",
        fd_residual,
        FD_CONNECTION_TOL,
    ));

    // independent oracle 2: discretized path-ordered product
    let samples = vec![holonomy.connection.clone(); PATH_ORDERED_SAMPLES];
    let weights = vec![1.0 / PATH_ORDERED_SAMPLES as f64; PATH_ORDERED_SAMPLES];
    let product = path_ordered_holonomy(&samples, &weights)?;
    let po_residual = frob_distance(&product, &holonomy.geometric)?;
    checks.push(report::Check::new(
        "path_ordered_product",
        po_residual,
        PATH_ORDERED_TOL,
    ));

    // independent oracle 3: exact propagator against RK4
    let exact = exact_propagator(&sys, &generator, 1.0)?;
    let rk4 = rk4_propagator(&sys, &generator, 1.0, rk4_steps)?;
    let cross = frob_distance(&exact, &rk4.unitary)?;
    checks.push(report::Check::new(
        "propagator_cross_check",
        cross,
        PROPAGATOR_CROSS_TOL,
    ));
    let gram = exact.adjoint().matmul(&exact);
    let unitarity = frob_distance(&gram, &CMatrix::identity(gram.rows()))?;
    checks.push(report::Check::new(
        "exact_propagator_unitarity",
        unitarity,
        UNITARITY_TOL,
    ));
    checks.push(report::Check::new(
        "rk4_unitarity_drift",
        rk4.drift,
        UNITARITY_TOL,
    ));

    // full protocol: leakage and the dynamics/holonomy gap
    let run = run_protocol(&recipe, &sys)?;
    let closure = loop_closure_defect(&generator, &sys)?;
    let loop_closed = closure <= CLOSURE_TOL;
    if loop_closed {
        checks.push(report::Check::new("leakage", run.leakage, LEAKAGE_TOL));
    } else {
        info.push(report::Info::new("leakage", run.leakage));
    }
    info.push(report::Info::new("closure_defect", closure));
    info.push(report::Info::new(
        "dynamics_vs_holonomy",
        frob_distance(&run.projected, &holonomy.total)?,
    ));
    info.push(report::Info::new(
        "projected_fidelity",
        run.fidelity_to(&target.matrix)?,
    ));

    let mut report = Report::new("verify", scenario.clone());
    if !loop_closed {
        report.warnings.push(format!(
            "loop generator does not close the Hamiltonian path (closure defect {closure:.3e}); \
             leakage and the dynamics-holonomy gap are reported as information"
        ));
    }
    report.recipe = Some(report::RecipeSection::from_recipe(&recipe));
    report.connection = Some(scenario::MatrixData::from_cmatrix(&holonomy.connection));
    report.predicted_gate = Some(scenario::MatrixData::from_cmatrix(&holonomy.total));
    let verification = report::VerificationSection::from_parts(checks, info);
    report.pass = verification.pass;
    report.verification = Some(verification);
    Ok(report)
}

/// Adiabatic scaling study: one protocol run per coupling.
pub fn cmd_sweep(scenario: &Scenario) -> Result<Report> {
    let target = scenario.target()?;
    let j_list = scenario
        .j_list
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter("missing j_list".into()))?;
    if j_list.is_empty() {
        return Err(Error::InvalidParameter("j_list must not be empty".into()));
    }
    let points = adiabatic_sweep(&target, j_list)?;
    let rows: Vec<SweepRow> = points
        .iter()
        .map(|p| SweepRow {
            j: p.j,
            m: p.winding,
            tau: p.tau,
            leakage: p.leakage,
            fidelity: p.fidelity,
        })
        .collect();
    let mut report = Report::new("sweep", scenario.clone());
    report.sweep = Some(rows);
    Ok(report)
}

/// Library-level counterpart of `verify` for a raw generator: the holonomy
/// formula applied to an explicit subspace. Exposed for the examples.
pub fn holonomy_summary(
    generator: &crate::holonomy::LoopGenerator,
    sub: &Subspace,
    tau: f64,
) -> Result<(CMatrix, Complex64)> {
    let report = total_gate(generator, sub, tau)?;
    Ok((report.total, report.dynamical_phase))
}

/// The geometric factor alone, `e^{A}`.
pub fn geometric_factor(
    generator: &crate::holonomy::LoopGenerator,
    sub: &Subspace,
) -> Result<CMatrix> {
    let a = crate::holonomy::project_connection(generator, sub)?;
    expm(&a)
}
