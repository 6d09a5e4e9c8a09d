//! Exact spin dynamics of a two-electron singlet in a static homogeneous
//! exchange or magnetic field, and the superconducting pair-propagation
//! kernels that follow from it.
//!
//! The crate is organised bottom-up:
//!
//! * [`spinor`]: 2×2 / 4×4 complex algebra, SU(2) rotations and
//!   antiunitary operators (time reversal).
//! * [`singlet`]: singlet and `S_z = 0` triplet states in vector and
//!   metric-spinor (matrix) form.
//! * [`evolution`]: pair evolution operator, singlet/triplet amplitudes,
//!   Heisenberg-picture time reversal and the trace formulas for `a(t)`.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration.
//! * [`kernel`]: clean/dirty kernels in coordinate and momentum space,
//!   their reconstruction as time Laplace transforms of classical
//!   correlators, radial Fourier transforms and a Monte Carlo diffusion
//!   oracle.

pub mod error;
pub mod evolution;
pub mod kernel;
pub mod quadrature;
pub mod singlet;
pub mod spinor;

pub use error::{Error, Result};
pub use evolution::{AmplitudePair, Branch, FieldParams};
pub use kernel::{
    CleanParams, DirtyParams, KernelParams, Limit, MatsubaraCutoff, McConfig, QuadratureConfig,
};
pub use num_complex::Complex64;
pub use singlet::{MetricSpinor, OrthonormalBasis};
pub use spinor::{
    AntiunitaryOp, Axis, ComplexMatrix2, ComplexMatrix4, RotationSpec, Spinor, TwoSpinState,
};

/// Absolute tolerance for algebraic identities.
pub const DEFAULT_TOL: f64 = 1e-12;
