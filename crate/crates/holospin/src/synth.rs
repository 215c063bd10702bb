//! Target gates and the inverse problem: control parameters whose
//! holonomy-plus-dynamical-phase reproduces a requested unitary exactly.
//!
//! The parameter inversion is underdetermined (three connection components
//! against four free generator parameters once `‖n̂‖ = 1`), so a canonical
//! rule picks the representative:
//!
//! - `r_x = r_y = 0`: take `n̂ = (0,0,1)`, `ω₁ = ω₂ = −r_z` (the phase-gate
//!   branch);
//! - otherwise: take `ω₂ = 0`, `ω₁ = √(2r_x² + 2r_y² + 4r_z²)`,
//!   `n̂ = (√2 r_x, −√2 r_y, −2 r_z)/ω₁`.
//!
//! Both closed-form single-qubit constructions below fall out of this rule
//! as special cases.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::holonomy::{total_gate, HolonomyReport, LoopGenerator, Subspace};
use crate::linalg::{CMatrix, STRUCTURE_TOL};
use crate::spinchain::{build_block_h0, build_two_block_h0, BlockSystem};

const TAU_SLACK: f64 = 1e-12;

/// Named gate targets.
#[derive(Debug, Clone, PartialEq)]
pub enum GateLabel {
    Hadamard,
    /// `P(φ) = diag(1, e^{iφ})`
    Phase(f64),
    /// `C(φ) = diag(1, 1, 1, e^{iφ})`
    ControlledPhase(f64),
    Custom,
}

/// A target unitary together with its label.
#[derive(Debug, Clone)]
pub struct TargetGate {
    pub label: GateLabel,
    pub matrix: CMatrix,
}

impl TargetGate {
    pub fn hadamard() -> Self {
        let s = 1.0 / 2.0_f64.sqrt();
        Self {
            label: GateLabel::Hadamard,
            matrix: CMatrix::from_real(2, 2, &[s, s, s, -s]),
        }
    }

    pub fn phase(phi: f64) -> Self {
        Self {
            label: GateLabel::Phase(phi),
            matrix: CMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, phi)]),
        }
    }

    pub fn controlled_phase(phi: f64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self {
            label: GateLabel::ControlledPhase(phi),
            matrix: CMatrix::diagonal(&[one, one, one, Complex64::from_polar(1.0, phi)]),
        }
    }

    /// Wrap an arbitrary 2×2 or 4×4 unitary.
    pub fn custom(matrix: CMatrix) -> Result<Self> {
        let n = matrix.rows();
        if !matrix.is_square() || (n != 2 && n != 4) {
            return Err(Error::DimMismatch(format!(
                "targets are 2x2 or 4x4, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_unitary(1e-12 * (n as f64)) {
            let gram = matrix.adjoint().matmul(&matrix);
            let residual =
                crate::linalg::frob_distance(&gram, &CMatrix::identity(n)).unwrap_or(f64::NAN);
            return Err(Error::NotUnitary {
                residual,
                tol: 1e-12 * (n as f64),
            });
        }
        Ok(Self {
            label: GateLabel::Custom,
            matrix,
        })
    }
}

/// Exact matrix for a named label.
pub fn target_matrix(label: GateLabel) -> Result<TargetGate> {
    match label {
        GateLabel::Hadamard => Ok(TargetGate::hadamard()),
        GateLabel::Phase(phi) => Ok(TargetGate::phase(phi)),
        GateLabel::ControlledPhase(phi) => Ok(TargetGate::controlled_phase(phi)),
        GateLabel::Custom => Err(Error::InvalidParameter(
            "custom targets need an explicit matrix; use TargetGate::custom".into(),
        )),
    }
}

/// Solved control parameters realizing one gate.
#[derive(Debug, Clone, PartialEq)]
pub enum GateRecipe {
    SingleQubit {
        /// Unit rotation axis n̂.
        axis: [f64; 3],
        omega1: f64,
        omega2: f64,
        /// Pause duration in loop-parameter units.
        tau: f64,
        /// Winding integer in the phase condition.
        winding: u32,
        j: f64,
    },
    TwoQubit {
        phi: f64,
        tau: f64,
        winding: u32,
        j: f64,
    },
}

impl GateRecipe {
    pub fn tau(&self) -> f64 {
        match self {
            Self::SingleQubit { tau, .. } | Self::TwoQubit { tau, .. } => *tau,
        }
    }

    pub fn winding(&self) -> u32 {
        match self {
            Self::SingleQubit { winding, .. } | Self::TwoQubit { winding, .. } => *winding,
        }
    }

    pub fn j(&self) -> f64 {
        match self {
            Self::SingleQubit { j, .. } | Self::TwoQubit { j, .. } => *j,
        }
    }

    /// The loop generator this recipe drives.
    pub fn generator(&self) -> LoopGenerator {
        match self {
            Self::SingleQubit {
                axis,
                omega1,
                omega2,
                ..
            } => LoopGenerator::single_qubit_rotation(*axis, *omega1, *omega2),
            Self::TwoQubit { phi, .. } => LoopGenerator::interblock_coupling(*phi),
        }
    }

    /// The block system the recipe acts on (one block at `B = 2J`, or two).
    pub fn build_system(&self) -> Result<BlockSystem> {
        match self {
            Self::SingleQubit { j, .. } => build_block_h0(*j, 2.0 * j),
            Self::TwoQubit { j, .. } => build_two_block_h0(*j),
        }
    }

    /// Holonomy prediction for this recipe: loop, then pause.
    pub fn holonomy(&self) -> Result<HolonomyReport> {
        let sys = self.build_system()?;
        let sub = Subspace::code_space(&sys)?;
        total_gate(&self.generator(), &sub, self.tau())
    }

    /// Same recipe with `extra` additional windings: the gate is unchanged,
    /// the pause grows by `2π·extra / (3J or 6J)`.
    pub fn with_extra_winding(&self, extra: u32) -> Self {
        let mut out = self.clone();
        match &mut out {
            Self::SingleQubit {
                tau, winding, j, ..
            } => {
                *tau += 2.0 * std::f64::consts::PI * extra as f64 / (3.0 * *j);
                *winding += extra;
            }
            Self::TwoQubit {
                tau, winding, j, ..
            } => {
                *tau += 2.0 * std::f64::consts::PI * extra as f64 / (6.0 * *j);
                *winding += extra;
            }
        }
        out
    }
}

/// Smallest integer `m ≥ 0` and the `τ ≥ 0` solving
/// `scale·(1+τ) = phase + 2πm`.
fn solve_pause(phase: f64, scale: f64) -> (f64, u32) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut m = ((scale - phase) / two_pi).ceil().max(0.0) as u32;
    loop {
        let tau = (phase + two_pi * m as f64) / scale - 1.0;
        if tau >= -TAU_SLACK {
            return (tau.max(0.0), m);
        }
        m += 1;
    }
}

fn require_positive_j(j: f64) -> Result<()> {
    if j > 0.0 && j.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "exchange coupling J must be positive and finite, got {j}"
        )))
    }
}

fn require_finite_angle(phi: f64) -> Result<()> {
    if phi.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "gate angle must be finite, got {phi}"
        )))
    }
}

/// Phase gate `P(φ)`: rotate both spins about z with `ω₁ = ω₂ = φ/2` and
/// pause until `3J(1+τ) = φ + 2mπ`.
pub fn phase_gate_recipe(phi: f64, j: f64) -> Result<GateRecipe> {
    require_positive_j(j)?;
    require_finite_angle(phi)?;
    let (tau, winding) = solve_pause(phi, 3.0 * j);
    Ok(GateRecipe::SingleQubit {
        axis: [0.0, 0.0, 1.0],
        omega1: phi / 2.0,
        omega2: phi / 2.0,
        tau,
        winding,
        j,
    })
}

/// Hadamard gate: `n̂ = (1/√3, 0, −√(2/3))`, `ω₁ = (π/2)√3`, `ω₂ = 0`, pause
/// from `3J(1+τ) = −(π/(2√2))(√2+1) + 2mπ`.
pub fn hadamard_recipe(j: f64) -> Result<GateRecipe> {
    require_positive_j(j)?;
    let sqrt2 = 2.0_f64.sqrt();
    let phase = -(std::f64::consts::PI / (2.0 * sqrt2)) * (sqrt2 + 1.0);
    let (tau, winding) = solve_pause(phase, 3.0 * j);
    Ok(GateRecipe::SingleQubit {
        axis: [(1.0f64 / 3.0).sqrt(), 0.0, -(2.0f64 / 3.0).sqrt()],
        omega1: std::f64::consts::FRAC_PI_2 * 3.0_f64.sqrt(),
        omega2: 0.0,
        tau,
        winding,
        j,
    })
}

/// Controlled phase `C(φ)` on two adjacent blocks: couple the endpoint spins
/// with strength `φ` and pause until `6J(1+τ) = φ + 2mπ`.
pub fn controlled_phase_recipe(phi: f64, j: f64) -> Result<GateRecipe> {
    require_positive_j(j)?;
    require_finite_angle(phi)?;
    let (tau, winding) = solve_pause(phi, 6.0 * j);
    Ok(GateRecipe::TwoQubit {
        phi,
        tau,
        winding,
        j,
    })
}

/// Invert an arbitrary 2×2 unitary into control parameters.
///
/// The target is decomposed as `e^{ig}·e^{i r⃗·σ⃗}` with `‖r⃗‖ ≤ π` (principal
/// branch). Of the two equivalent `(g, r⃗)` representatives the solver keeps
/// the one whose generator axis has a positive first nonzero component; at
/// the `‖r⃗‖ = π` cut the axis is pinned to `+ẑ`. The pause then matches the
/// identity phase: `r_z + 3J(1+τ) ≡ g (mod 2π)`.
pub fn single_qubit_recipe(target: &TargetGate, j: f64) -> Result<GateRecipe> {
    require_positive_j(j)?;
    let u = &target.matrix;
    if u.rows() != 2 || u.cols() != 2 {
        return Err(Error::DimMismatch(format!(
            "single-qubit targets are 2x2, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    if !u.is_unitary(STRUCTURE_TOL) {
        let gram = u.adjoint().matmul(u);
        let residual =
            crate::linalg::frob_distance(&gram, &CMatrix::identity(2)).unwrap_or(f64::NAN);
        return Err(Error::NotUnitary {
            residual,
            tol: STRUCTURE_TOL,
        });
    }

    let (g, r) = principal_log(u);

    // canonical inversion of the connection components
    let (axis, omega1, omega2) = if r[0].abs() <= 1e-12 && r[1].abs() <= 1e-12 {
        ([0.0, 0.0, 1.0], -r[2], -r[2])
    } else {
        let omega1 = (2.0 * r[0] * r[0] + 2.0 * r[1] * r[1] + 4.0 * r[2] * r[2]).sqrt();
        let sqrt2 = 2.0_f64.sqrt();
        (
            [
                sqrt2 * r[0] / omega1,
                -sqrt2 * r[1] / omega1,
                -2.0 * r[2] / omega1,
            ],
            omega1,
            0.0,
        )
    };

    let (tau, winding) = solve_pause(g - r[2], 3.0 * j);
    Ok(GateRecipe::SingleQubit {
        axis,
        omega1,
        omega2,
        tau,
        winding,
        j,
    })
}

/// `U = e^{ig}·e^{i r⃗·σ⃗}` with `‖r⃗‖ ≤ π`, branch picked so the generator
/// axis `(√2 r_x, −√2 r_y, −2 r_z)` has a positive first nonzero component.
fn principal_log(u: &CMatrix) -> (f64, [f64; 3]) {
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    let g0 = det.im.atan2(det.re) / 2.0;
    let inv_phase = Complex64::from_polar(1.0, -g0);
    let v00 = inv_phase * u[(0, 0)];
    let v01 = inv_phase * u[(0, 1)];
    let v10 = inv_phase * u[(1, 0)];
    let v11 = inv_phase * u[(1, 1)];

    let cos_theta = ((v00 + v11).re / 2.0).clamp(-1.0, 1.0);
    let theta = cos_theta.acos();
    let sin_theta = theta.sin();

    if sin_theta <= 1e-9 {
        if cos_theta > 0.0 {
            // V ≈ I
            return (g0, [0.0, 0.0, 0.0]);
        }
        // V ≈ −I: the branch cut, axis pinned to +ẑ
        return (g0, [0.0, 0.0, std::f64::consts::PI]);
    }

    let mut k = [
        (v01 + v10).im / (2.0 * sin_theta),
        (v01 - v10).re / (2.0 * sin_theta),
        (v00 - v11).im / (2.0 * sin_theta),
    ];
    let norm = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
    for c in &mut k {
        *c /= norm;
    }
    let mut g = g0;
    let mut r = [theta * k[0], theta * k[1], theta * k[2]];

    // generator-axis direction up to normalization
    let axis_sign = [r[0], -r[1], -r[2]];
    if let Some(&lead) = axis_sign.iter().find(|c| c.abs() > 1e-12) {
        if lead < 0.0 {
            // switch to the other (g, r⃗) representative
            g = g0 - std::f64::consts::PI;
            let flipped_theta = std::f64::consts::PI - theta;
            r = [
                -flipped_theta * k[0],
                -flipped_theta * k[1],
                -flipped_theta * k[2],
            ];
        }
    }
    (g, r)
}
