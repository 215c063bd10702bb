//! Degenerate subspaces, projected connections and holonomies.
//!
//! For the iso-spectral family `H(t) = e^{Xt} H₀ e^{−Xt}` the connection on
//! the degenerate subspace is constant and equals the projection of the loop
//! generator: `A = P X P` restricted to the code basis. The holonomy is then
//! `Γ = e^{A}` and the total gate after the loop plus a pause of length `τ`
//! is `U = e^{−iE₀(1+τ)} e^{A}`.
//!
//! Two independent oracles live here as well: a central-difference estimate
//! of `⟨i(t)| d/dt |j(t)⟩` over the rotated frame `|i(t)⟩ = e^{Xt}|i⟩`, and a
//! discretized path-ordered product for general (non-constant) connection
//! samples.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{expm, frob_distance, CMatrix, STRUCTURE_TOL};
use crate::spinchain::{code_basis_matrix, pauli, site_operator, Axis, BlockSystem};

/// A degenerate eigenspace: energy, orthonormal basis columns and the
/// Hamiltonian it was extracted from.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub energy: f64,
    /// n×k matrix whose k columns span the subspace.
    pub basis: CMatrix,
    /// The Hamiltonian this subspace belongs to (used for closure defects).
    pub source_h: CMatrix,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// The exact analytic code space of a block system at the degenerate
    /// point `B = 2J`: energy −3J for one block, −6J for two.
    ///
    /// The basis comes from the closed-form constructors, not the
    /// eigensolver, so downstream connection matrices carry no residual
    /// gauge freedom.
    pub fn code_space(sys: &BlockSystem) -> Result<Self> {
        let (n_blocks, energy) = match sys.n_spins {
            2 => (1, -3.0 * sys.j),
            4 => (2, -6.0 * sys.j),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "code spaces exist for 2- or 4-spin systems, got {other} spins"
                )))
            }
        };
        let basis = code_basis_matrix(n_blocks);
        // H·basis = E₀·basis must hold, which also rejects B ≠ 2J.
        let residual = frob_distance(
            &sys.h.matmul(&basis),
            &basis.scale(Complex64::new(energy, 0.0)),
        )?;
        let scale = sys.h.frob_norm().max(1.0);
        if residual > 1e-10 * scale {
            return Err(Error::InvalidParameter(format!(
                "system is not at the degenerate point B = 2J (residual {residual:e}); \
                 the code space is not an eigenspace"
            )));
        }
        Ok(Self {
            energy,
            basis,
            source_h: sys.h.clone(),
        })
    }
}

/// Which eigenvalue cluster to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Ground,
}

/// Extract the eigenvalue cluster nearest the bottom of the spectrum.
///
/// The cluster is every eigenvalue within `cluster_tol` of the minimum; its
/// energy is the cluster mean. Fails with [`Error::GapTooSmall`] unless the
/// gap to the rest of the spectrum exceeds `10 × cluster_tol`.
pub fn extract_subspace(sys: &BlockSystem, which: Which, cluster_tol: f64) -> Result<Subspace> {
    let Which::Ground = which;
    let scale = sys.h.frob_norm().max(1.0);
    let eig = crate::linalg::eig_hermitian(&sys.h, 1e-10 * scale)?;
    let bottom = eig.values[0];
    let k = eig
        .values
        .iter()
        .take_while(|&&v| v - bottom <= cluster_tol)
        .count();
    if k < eig.values.len() {
        let gap = eig.values[k] - eig.values[k - 1];
        if gap <= 10.0 * cluster_tol {
            return Err(Error::GapTooSmall {
                gap,
                tol: cluster_tol,
            });
        }
    }
    let energy = eig.values[..k].iter().sum::<f64>() / k as f64;
    let cols: Vec<_> = (0..k).map(|j| eig.vectors.column(j)).collect();
    Ok(Subspace {
        energy,
        basis: CMatrix::from_columns(&cols),
        source_h: sys.h.clone(),
    })
}

/// Structured description of a loop generator.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorKind {
    /// `X = i n̂·(ω₁ σ⃗₁ + ω₂ σ⃗₂)` — rotates the two spins of one block.
    SingleQubitRotation {
        axis: [f64; 3],
        omega1: f64,
        omega2: f64,
    },
    /// `X = iφ (σ₂z σ₃z + σ₂z + σ₃z)` — couples the endpoint spins of two
    /// neighboring blocks.
    InterblockCoupling { phi: f64 },
    /// An explicitly supplied anti-Hermitian matrix.
    Raw,
}

/// An anti-Hermitian loop generator with its assembled matrix.
#[derive(Debug, Clone)]
pub struct LoopGenerator {
    kind: GeneratorKind,
    matrix: CMatrix,
}

impl LoopGenerator {
    pub fn single_qubit_rotation(axis: [f64; 3], omega1: f64, omega2: f64) -> Self {
        let n_dot_sigma = assemble_axis_dot_sigma(axis);
        let i2 = CMatrix::identity(2);
        let on_spin1 = crate::linalg::kron(&n_dot_sigma, &i2);
        let on_spin2 = crate::linalg::kron(&i2, &n_dot_sigma);
        let matrix = (&on_spin1.scale(Complex64::new(omega1, 0.0))
            + &on_spin2.scale(Complex64::new(omega2, 0.0)))
            .scale(Complex64::new(0.0, 1.0));
        Self {
            kind: GeneratorKind::SingleQubitRotation {
                axis,
                omega1,
                omega2,
            },
            matrix,
        }
    }

    pub fn interblock_coupling(phi: f64) -> Self {
        let sz = pauli(Axis::Z);
        let s2z = site_operator(&sz, 1, 4).expect("site 1 of 4");
        let s3z = site_operator(&sz, 2, 4).expect("site 2 of 4");
        let matrix = (&(&s2z.matmul(&s3z) + &s2z) + &s3z).scale(Complex64::new(0.0, phi));
        Self {
            kind: GeneratorKind::InterblockCoupling { phi },
            matrix,
        }
    }

    /// Wrap an explicit matrix, validating anti-Hermiticity.
    pub fn raw(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimMismatch(format!(
                "{}x{} is not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_anti_hermitian(1e-12 * matrix.frob_norm().max(1.0)) {
            let residual = frob_distance(
                &matrix.adjoint().scale(Complex64::new(-1.0, 0.0)),
                &matrix,
            )?;
            return Err(Error::NotAntiHermitian {
                residual,
                tol: 1e-12,
            });
        }
        Ok(Self {
            kind: GeneratorKind::Raw,
            matrix,
        })
    }

    /// The zero generator on an `ambient_dim`-dimensional space.
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            kind: GeneratorKind::Raw,
            matrix: CMatrix::zeros(ambient_dim, ambient_dim),
        }
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.rows()
    }
}

fn assemble_axis_dot_sigma(axis: [f64; 3]) -> CMatrix {
    let mut out = CMatrix::zeros(2, 2);
    for (component, pauli_axis) in axis.iter().zip([Axis::X, Axis::Y, Axis::Z]) {
        out = &out + &pauli(pauli_axis).scale(Complex64::new(*component, 0.0));
    }
    out
}

/// Project the loop generator onto the subspace: `A = basis† · X · basis`.
pub fn project_connection(x: &LoopGenerator, sub: &Subspace) -> Result<CMatrix> {
    if x.ambient_dim() != sub.ambient_dim() {
        return Err(Error::DimMismatch(format!(
            "generator dim {} vs subspace ambient dim {}",
            x.ambient_dim(),
            sub.ambient_dim()
        )));
    }
    Ok(sub
        .basis
        .adjoint()
        .matmul(x.matrix())
        .matmul(&sub.basis))
}

/// Closed-form connection components for a single-qubit rotation generator:
///
/// ```text
/// r_x =  (ω₁ − ω₂) n_x / √2
/// r_y = −(ω₁ − ω₂) n_y / √2
/// r_z = −(ω₁ + ω₂) n_z / 2
/// ```
///
/// so that the projected connection is `i(r_x σx + r_y σy + r_z σz + r_z I)`
/// on the code basis.
pub fn connection_r_vector(x: &LoopGenerator) -> Result<[f64; 3]> {
    match x.kind() {
        GeneratorKind::SingleQubitRotation {
            axis,
            omega1,
            omega2,
        } => {
            let sqrt2 = 2.0_f64.sqrt();
            Ok([
                (omega1 - omega2) * axis[0] / sqrt2,
                -(omega1 - omega2) * axis[1] / sqrt2,
                -(omega1 + omega2) * axis[2] / 2.0,
            ])
        }
        _ => Err(Error::WrongKind {
            expected: "single_qubit_rotation",
        }),
    }
}

/// Everything the constant-connection holonomy produces for one loop.
#[derive(Debug, Clone)]
pub struct HolonomyReport {
    /// k×k anti-Hermitian connection `A`.
    pub connection: CMatrix,
    /// Geometric factor `Γ = e^{A}`.
    pub geometric: CMatrix,
    /// `e^{−iE₀(1+τ)}`.
    pub dynamical_phase: Complex64,
    /// `total = dynamical_phase · geometric`.
    pub total: CMatrix,
    pub tau: f64,
    /// `‖e^{X} H₀ e^{−X} − H₀‖_F / ‖H₀‖_F` for the source Hamiltonian.
    pub closure_defect: f64,
}

/// The gate predicted for one traversal of the loop (parameter normalized to
/// `T = 1`) followed by a pause of length `tau`.
pub fn total_gate(x: &LoopGenerator, sub: &Subspace, tau: f64) -> Result<HolonomyReport> {
    if tau < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "pause duration must be non-negative, got {tau}"
        )));
    }
    let connection = project_connection(x, sub)?;
    let geometric = expm(&connection)?;
    let dynamical_phase = Complex64::from_polar(1.0, -sub.energy * (1.0 + tau));
    let total = geometric.scale(dynamical_phase);
    let closure_defect = closure_defect_against(x, &sub.source_h)?;
    Ok(HolonomyReport {
        connection,
        geometric,
        dynamical_phase,
        total,
        tau,
        closure_defect,
    })
}

/// Central-difference estimate of `⟨i(t)| d/dt |j(t)⟩` over the rotated frame
/// `|i(t)⟩ = e^{Xt}|i⟩`; converges to [`project_connection`] at O(dt²).
pub fn finite_difference_connection(
    x: &LoopGenerator,
    sub: &Subspace,
    t: f64,
    dt: f64,
) -> Result<CMatrix> {
    if dt <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "step dt must be positive, got {dt}"
        )));
    }
    if x.ambient_dim() != sub.ambient_dim() {
        return Err(Error::DimMismatch(format!(
            "generator dim {} vs subspace ambient dim {}",
            x.ambient_dim(),
            sub.ambient_dim()
        )));
    }
    let frame = |s: f64| -> Result<CMatrix> {
        Ok(expm(&x.matrix().scale(Complex64::new(s, 0.0)))?.matmul(&sub.basis))
    };
    let at_t = frame(t)?;
    let forward = frame(t + dt)?;
    let backward = frame(t - dt)?;
    Ok(at_t
        .adjoint()
        .matmul(&(&forward - &backward))
        .scale(Complex64::new(1.0 / (2.0 * dt), 0.0)))
}

/// Discretized path-ordered exponential: `Π_m e^{A(t_m)·Δt_m}` with later
/// samples applied on the left. The empty product is the 0×0 identity.
pub fn path_ordered_holonomy(samples: &[CMatrix], weights: &[f64]) -> Result<CMatrix> {
    if samples.len() != weights.len() {
        return Err(Error::DimMismatch(format!(
            "{} samples vs {} weights",
            samples.len(),
            weights.len()
        )));
    }
    if samples.is_empty() {
        return Ok(CMatrix::identity(0));
    }
    let k = samples[0].rows();
    for s in samples {
        if !s.is_square() || s.rows() != k {
            return Err(Error::DimMismatch(format!(
                "all samples must be {k}x{k}, found {}x{}",
                s.rows(),
                s.cols()
            )));
        }
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidWeights { sum });
    }
    let mut factors: Vec<CMatrix> = samples
        .iter()
        .zip(weights)
        .map(|(a, &w)| expm(&a.scale(Complex64::new(w, 0.0))))
        .collect::<Result<_>>()?;
    // pairwise reduction keeps the round-off depth logarithmic while
    // preserving the time ordering
    while factors.len() > 1 {
        let mut next = Vec::with_capacity(factors.len() / 2 + 1);
        let mut iter = factors.chunks(2);
        for chunk in &mut iter {
            match chunk {
                [earlier, later] => next.push(later.matmul(earlier)),
                [single] => next.push(single.clone()),
                _ => unreachable!(),
            }
        }
        factors = next;
    }
    Ok(factors.pop().expect("non-empty product"))
}

/// How far `e^{X} H₀ e^{−X}` is from `H₀`, relative to `‖H₀‖_F`. Zero means
/// the parameter path is a genuinely closed loop in Hamiltonian space.
pub fn loop_closure_defect(x: &LoopGenerator, sys: &BlockSystem) -> Result<f64> {
    closure_defect_against(x, &sys.h)
}

fn closure_defect_against(x: &LoopGenerator, h: &CMatrix) -> Result<f64> {
    if x.ambient_dim() != h.rows() {
        return Err(Error::DimMismatch(format!(
            "generator dim {} vs Hamiltonian dim {}",
            x.ambient_dim(),
            h.rows()
        )));
    }
    let ex = expm(x.matrix())?;
    let conjugated = ex.matmul(h).matmul(&ex.adjoint());
    Ok(frob_distance(&conjugated, h)? / h.frob_norm())
}

/// Shared sanity tolerance for connection anti-Hermiticity checks.
pub fn connection_is_anti_hermitian(a: &CMatrix) -> bool {
    a.is_anti_hermitian(STRUCTURE_TOL.min(1e-12 * a.frob_norm().max(1.0)).max(1e-14))
}
