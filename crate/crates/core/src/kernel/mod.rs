//! Pair-propagation kernels of a ferromagnetic superconductor near `T_c`.
//!
//! Each kernel is a sum over positive Matsubara frequencies
//! `ω_n = (2n+1)πT_c`, `n = 0..=n_max`. Coordinate-space terms are the
//! singlet amplitude `a(t) = cos(2Jt/ħ)` transported along classical
//! trajectories: ballistic (`t = R/v_F`, clean limit) or diffusive (dirty
//! limit, time integrated against the diffusion propagator).
//!
//! The momentum-space sums diverge logarithmically without a cutoff, so
//! every cross-check in this module is made term by term.

mod correlator;
mod montecarlo;
mod transforms;

pub use correlator::{
    classical_correlator, pair_correlation_f, Correlator, DeltaShell, FourTermDecomposition,
    PairCorrelation,
};
pub use montecarlo::{
    analytic_bin_density, mc_diffusion_correlator, radial_density, DiffusionHistogram,
    HistogramBin, McConfig,
};
pub use transforms::{
    laplace_term, laplace_term_estimate, radial_fourier_term, radial_fourier_term_estimate,
};

pub use crate::quadrature::QuadratureConfig;

use std::f64::consts::PI;

use crate::error::{require, Result};
use crate::evolution::{singlet_amplitude, FieldParams};

/// Clean or dirty limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Limit {
    Clean,
    Dirty,
}

impl Limit {
    pub fn as_str(&self) -> &'static str {
        match self {
            Limit::Clean => "clean",
            Limit::Dirty => "dirty",
        }
    }
}

/// Ballistic (impurity-free) parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CleanParams {
    /// Density of states at the Fermi level, `N(0)`.
    pub n0: f64,
    /// Magnitude of the pairing interaction, `|g|`.
    pub g_abs: f64,
    pub t_c: f64,
    /// Fermi velocity.
    pub v_f: f64,
    /// Exchange field.
    pub j: f64,
    pub hbar: f64,
}

/// Diffusive parameters; `d = v_F l / 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirtyParams {
    pub n0: f64,
    pub g_abs: f64,
    pub t_c: f64,
    pub j: f64,
    pub hbar: f64,
    pub d: f64,
}

fn validate_common(n0: f64, g_abs: f64, t_c: f64, j: f64, hbar: f64) -> Result<()> {
    require(n0 > 0.0 && n0.is_finite(), "N0", "positive", n0)?;
    require(g_abs > 0.0 && g_abs.is_finite(), "g", "positive", g_abs)?;
    require(t_c > 0.0 && t_c.is_finite(), "Tc", "positive", t_c)?;
    require(j >= 0.0 && j.is_finite(), "J", "non-negative", j)?;
    require(hbar > 0.0 && hbar.is_finite(), "hbar", "positive", hbar)
}

impl CleanParams {
    pub fn validate(&self) -> Result<()> {
        validate_common(self.n0, self.g_abs, self.t_c, self.j, self.hbar)?;
        require(
            self.v_f > 0.0 && self.v_f.is_finite(),
            "vF",
            "positive",
            self.v_f,
        )
    }

    /// `N(0)|g|T_c`.
    pub fn coupling(&self) -> f64 {
        self.n0 * self.g_abs * self.t_c
    }

    pub fn field(&self) -> FieldParams {
        FieldParams {
            j: self.j,
            hbar: self.hbar,
        }
    }
}

impl DirtyParams {
    pub fn validate(&self) -> Result<()> {
        validate_common(self.n0, self.g_abs, self.t_c, self.j, self.hbar)?;
        require(self.d > 0.0 && self.d.is_finite(), "D", "positive", self.d)
    }

    pub fn coupling(&self) -> f64 {
        self.n0 * self.g_abs * self.t_c
    }

    pub fn field(&self) -> FieldParams {
        FieldParams {
            j: self.j,
            hbar: self.hbar,
        }
    }

    /// `(√(ω² + J²) − ω, √(ω² + J²) + ω)` scaled to inverse lengths by
    /// `√(ħD)`: returns `(q, κ)` such that the coordinate term is
    /// `cos(qR)·e^{−κR}/R`.
    fn wave_numbers(&self, omega: f64) -> (f64, f64) {
        let rho = omega.hypot(self.j);
        // ρ − ω = J²/(ρ + ω) without cancellation
        let lower = self.j * self.j / (rho + omega);
        let scale = (self.hbar * self.d).sqrt();
        (lower.sqrt() / scale, (rho + omega).sqrt() / scale)
    }
}

/// Either parameter bundle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelParams {
    Clean(CleanParams),
    Dirty(DirtyParams),
}

impl KernelParams {
    pub fn limit(&self) -> Limit {
        match self {
            KernelParams::Clean(_) => Limit::Clean,
            KernelParams::Dirty(_) => Limit::Dirty,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            KernelParams::Clean(p) => p.validate(),
            KernelParams::Dirty(p) => p.validate(),
        }
    }

    pub fn t_c(&self) -> f64 {
        match self {
            KernelParams::Clean(p) => p.t_c,
            KernelParams::Dirty(p) => p.t_c,
        }
    }

    pub fn hbar(&self) -> f64 {
        match self {
            KernelParams::Clean(p) => p.hbar,
            KernelParams::Dirty(p) => p.hbar,
        }
    }

    pub fn coupling(&self) -> f64 {
        match self {
            KernelParams::Clean(p) => p.coupling(),
            KernelParams::Dirty(p) => p.coupling(),
        }
    }

    pub fn field(&self) -> FieldParams {
        match self {
            KernelParams::Clean(p) => p.field(),
            KernelParams::Dirty(p) => p.field(),
        }
    }
}

impl From<CleanParams> for KernelParams {
    fn from(p: CleanParams) -> Self {
        KernelParams::Clean(p)
    }
}

impl From<DirtyParams> for KernelParams {
    fn from(p: DirtyParams) -> Self {
        KernelParams::Dirty(p)
    }
}

/// Upper end of the Matsubara sum, `n = 0..=n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatsubaraCutoff {
    pub n_max: u32,
}

impl MatsubaraCutoff {
    pub fn new(n_max: u32) -> Self {
        Self { n_max }
    }

    pub fn terms(&self) -> impl Iterator<Item = u32> {
        0..=self.n_max
    }
}

/// `ω_n = (2n+1)πT_c`.
pub fn matsubara_freq(n: u32, t_c: f64) -> f64 {
    (2 * n + 1) as f64 * PI * t_c
}

fn require_positive_length(r: f64) -> Result<()> {
    require(r > 0.0 && r.is_finite(), "R", "positive", r)
}

/// `cos(2RJ/(ħv_F))`, the clean-limit image of `a(t)` at `t = R/v_F`.
pub fn clean_amplitude_factor(r: f64, p: &CleanParams) -> f64 {
    singlet_amplitude(&p.field(), r / p.v_f)
}

pub(crate) fn clean_term_r_unchecked(r: f64, n: u32, p: &CleanParams) -> f64 {
    let t = r / p.v_f;
    let omega = matsubara_freq(n, p.t_c);
    let a = singlet_amplitude(&p.field(), t);
    p.coupling() / (p.hbar * p.v_f * r * r) * a * (-2.0 * omega * t / p.hbar).exp()
}

/// One Matsubara term of the clean coordinate kernel,
/// `N(0)|g|T_c/(ħv_F R²) · cos(2RJ/(ħv_F)) · exp(−2ω_n R/(ħv_F))`.
pub fn clean_kernel_term_r(r: f64, n: u32, p: &CleanParams) -> Result<f64> {
    p.validate()?;
    require_positive_length(r)?;
    Ok(clean_term_r_unchecked(r, n, p))
}

pub fn clean_kernel_r(r: f64, p: &CleanParams, cutoff: MatsubaraCutoff) -> Result<f64> {
    p.validate()?;
    require_positive_length(r)?;
    Ok(cutoff
        .terms()
        .map(|n| clean_term_r_unchecked(r, n, p))
        .sum())
}

/// One Matsubara term of the clean momentum kernel,
/// `2πN(0)|g|T_c/(p v_F) · [atan((p v_F − 2J)/2ω_n) + atan((p v_F + 2J)/2ω_n)]`.
pub fn clean_kernel_term_p(momentum: f64, n: u32, p: &CleanParams) -> Result<f64> {
    p.validate()?;
    require(
        momentum > 0.0 && momentum.is_finite(),
        "p",
        "positive",
        momentum,
    )?;
    let omega = matsubara_freq(n, p.t_c);
    let pv = momentum * p.v_f;
    let two_omega = 2.0 * omega;
    let brackets = ((pv - 2.0 * p.j) / two_omega).atan() + ((pv + 2.0 * p.j) / two_omega).atan();
    Ok(2.0 * PI * p.coupling() / pv * brackets)
}

pub fn clean_kernel_p(momentum: f64, p: &CleanParams, cutoff: MatsubaraCutoff) -> Result<f64> {
    cutoff
        .terms()
        .map(|n| clean_kernel_term_p(momentum, n, p))
        .sum()
}

pub(crate) fn dirty_term_r_unchecked(r: f64, n: u32, p: &DirtyParams) -> f64 {
    let omega = matsubara_freq(n, p.t_c);
    let (q, kappa) = p.wave_numbers(omega);
    p.coupling() / (p.hbar * r * p.d) * (q * r).cos() * (-kappa * r).exp()
}

/// One Matsubara term of the dirty coordinate kernel,
/// `N(0)|g|T_c/(ħRD) · cos(R√(√(ω_n²+J²) − ω_n)/√(ħD)) · exp(−R√(√(ω_n²+J²) + ω_n)/√(ħD))`.
pub fn dirty_kernel_term_r(r: f64, n: u32, p: &DirtyParams) -> Result<f64> {
    p.validate()?;
    require_positive_length(r)?;
    Ok(dirty_term_r_unchecked(r, n, p))
}

pub fn dirty_kernel_r(r: f64, p: &DirtyParams, cutoff: MatsubaraCutoff) -> Result<f64> {
    p.validate()?;
    require_positive_length(r)?;
    Ok(cutoff
        .terms()
        .map(|n| dirty_term_r_unchecked(r, n, p))
        .sum())
}

/// One Matsubara term of the dirty momentum kernel,
/// `4πN(0)|g|T_c · X / (X² + 4J²)` with `X = 2ω_n + Dp²/ħ`.
///
/// The prefactor makes this the exact three-dimensional Fourier partner of
/// [`dirty_kernel_term_r`] under the same convention that pairs the clean
/// kernels, and makes the clean and dirty kernels coincide at `p → 0`,
/// `J = 0`.
pub fn dirty_kernel_term_p(momentum: f64, n: u32, p: &DirtyParams) -> Result<f64> {
    p.validate()?;
    require(
        momentum >= 0.0 && momentum.is_finite(),
        "p",
        "non-negative",
        momentum,
    )?;
    let omega = matsubara_freq(n, p.t_c);
    let x = 2.0 * omega + p.d * momentum * momentum / p.hbar;
    Ok(4.0 * PI * p.coupling() * x / (x * x + 4.0 * p.j * p.j))
}

pub fn dirty_kernel_p(momentum: f64, p: &DirtyParams, cutoff: MatsubaraCutoff) -> Result<f64> {
    cutoff
        .terms()
        .map(|n| dirty_kernel_term_p(momentum, n, p))
        .sum()
}

/// Per-term coordinate kernel for either limit.
pub fn kernel_term_r(r: f64, n: u32, params: &KernelParams) -> Result<f64> {
    match params {
        KernelParams::Clean(p) => clean_kernel_term_r(r, n, p),
        KernelParams::Dirty(p) => dirty_kernel_term_r(r, n, p),
    }
}

/// Per-term momentum kernel for either limit.
pub fn kernel_term_p(momentum: f64, n: u32, params: &KernelParams) -> Result<f64> {
    match params {
        KernelParams::Clean(p) => clean_kernel_term_p(momentum, n, p),
        KernelParams::Dirty(p) => dirty_kernel_term_p(momentum, n, p),
    }
}
