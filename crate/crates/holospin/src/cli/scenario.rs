//! Scenario files: the strict key-value input format shared by every
//! subcommand. Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::synth::TargetGate;
use num_complex::Complex64;

/// Complex matrix in wire form: row-major `[re, im]` entry pairs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixData {
    pub fn from_cmatrix(m: &CMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_cmatrix(&self) -> Result<CMatrix> {
        if self.entries.len() != self.rows * self.cols {
            return Err(Error::DimMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                self.rows,
                self.cols,
                self.rows * self.cols,
                self.entries.len()
            )));
        }
        let data = self
            .entries
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Ok(CMatrix::new(self.rows, self.cols, data))
    }
}

/// One parameter record, parsed from `--config <file>` or assembled from
/// inline flags. Which fields are required depends on the subcommand.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Gate label: `hadamard`, `phase`, `cphase` or `custom`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gate: Option<String>,
    /// Gate angle, radians unless `degrees` is set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    /// Exchange coupling.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<f64>,
    /// Magnetic field (spectrum command only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    /// Explicit target for `gate = "custom"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixData>,
    /// Extra windings on top of the minimal solution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_winding: Option<u32>,
    /// Couplings for a sweep, strictly ascending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_list: Option<Vec<f64>>,
    /// Round-trip tolerance override.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    /// Interpret `phi` in degrees.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<bool>,
    /// Step count for the RK4 oracle (verify command).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rk4_steps: Option<usize>,
}

impl Scenario {
    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::InvalidParameter(format!("malformed scenario {}: {e}", path.display())))
    }

    /// Angle in radians after the optional degree conversion.
    pub fn phi_radians(&self) -> Option<f64> {
        self.phi.map(|phi| {
            if self.degrees.unwrap_or(false) {
                phi.to_radians()
            } else {
                phi
            }
        })
    }

    pub fn j_value(&self) -> Result<f64> {
        let j = self
            .j
            .ok_or_else(|| Error::InvalidParameter("missing coupling j".into()))?;
        if !j.is_finite() {
            return Err(Error::InvalidParameter(format!("j must be finite, got {j}")));
        }
        Ok(j)
    }

    /// Resolve the target gate for synthesize/verify/sweep.
    pub fn target(&self) -> Result<TargetGate> {
        let label = self
            .gate
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("missing gate label".into()))?;
        match label {
            "hadamard" => Ok(TargetGate::hadamard()),
            "phase" => {
                let phi = self.phi_radians().ok_or_else(|| {
                    Error::InvalidParameter("phase gate needs phi".into())
                })?;
                if !phi.is_finite() {
                    return Err(Error::InvalidParameter(format!("phi must be finite, got {phi}")));
                }
                Ok(TargetGate::phase(phi))
            }
            "cphase" => {
                let phi = self.phi_radians().ok_or_else(|| {
                    Error::InvalidParameter("cphase gate needs phi".into())
                })?;
                if !phi.is_finite() {
                    return Err(Error::InvalidParameter(format!("phi must be finite, got {phi}")));
                }
                Ok(TargetGate::controlled_phase(phi))
            }
            "custom" => {
                let data = self.matrix.as_ref().ok_or_else(|| {
                    Error::InvalidParameter("custom gate needs a matrix".into())
                })?;
                TargetGate::custom(data.to_cmatrix()?)
            }
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}
