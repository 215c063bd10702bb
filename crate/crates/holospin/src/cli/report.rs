//! Machine-readable reports. Field order is fixed by the struct layout and
//! every float serializes as the shortest decimal that round-trips
//! bit-identically, so identical inputs produce byte-identical reports.

use serde::Serialize;

use crate::cli::scenario::{MatrixData, Scenario};
use crate::synth::GateRecipe;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Scenario,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connection: Option<MatrixData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_gate: Option<MatrixData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Vec<SweepRow>>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Scenario) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            spectrum: None,
            recipe: None,
            connection: None,
            predicted_gate: None,
            verification: None,
            sweep: None,
            warnings: Vec::new(),
            pass: true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSection {
    pub eigenvalues: Vec<f64>,
    pub levels: Vec<Level>,
    pub ground_energy: f64,
    pub ground_degeneracy: usize,
    /// tr(P_code · P_ground)/dim(ground): 1 when the ground space sits
    /// inside the code space.
    pub code_space_overlap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Level {
    pub energy: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecipeSection {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    pub tau: f64,
    pub m: u32,
    pub j: f64,
}

impl RecipeSection {
    pub fn from_recipe(recipe: &GateRecipe) -> Self {
        match recipe {
            GateRecipe::SingleQubit {
                axis,
                omega1,
                omega2,
                tau,
                winding,
                j,
            } => Self {
                kind: "single_qubit".into(),
                axis: Some(*axis),
                omega1: Some(*omega1),
                omega2: Some(*omega2),
                phi: None,
                tau: *tau,
                m: *winding,
                j: *j,
            },
            GateRecipe::TwoQubit {
                phi,
                tau,
                winding,
                j,
            } => Self {
                kind: "two_qubit".into(),
                axis: None,
                omega1: None,
                omega2: None,
                phi: Some(*phi),
                tau: *tau,
                m: *winding,
                j: *j,
            },
        }
    }
}

/// One gated comparison: `value ≤ threshold` must hold for a PASS.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, value: f64, threshold: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            threshold,
            pass: value.is_finite() && value <= threshold,
        }
    }
}

/// A reported quantity that carries no pass/fail judgement.
#[derive(Debug, Clone, Serialize)]
pub struct Info {
    pub name: String,
    pub value: f64,
}

impl Info {
    pub fn new(name: &str, value: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSection {
    pub checks: Vec<Check>,
    pub info: Vec<Info>,
    pub pass: bool,
}

impl VerificationSection {
    pub fn from_parts(checks: Vec<Check>, info: Vec<Info>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self { checks, info, pass }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub j: f64,
    pub m: u32,
    pub tau: f64,
    pub leakage: f64,
    pub fidelity: f64,
}

/// Fixed-column CSV rendering of a sweep: `J,m,tau,leakage,fidelity`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("J,m,tau,leakage,fidelity\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.j, row.m, row.tau, row.leakage, row.fidelity
        ));
    }
    out
}
