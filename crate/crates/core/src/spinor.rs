//! Dense complex algebra for one- and two-spin operators.
//!
//! Two-spin vectors use the index convention `2*i + j`, where `i` labels the
//! z-basis state of spin 1 (the left tensor factor) and `j` that of spin 2.
//! The same convention is used by [`kron_product`], [`kron_vec`] and
//! [`reshape_to_matrix`].

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Cartesian direction used to select Pauli matrices and eigenspinors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

/// Single-spin state `(c0, c1)` in the z basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor(pub [Complex64; 2]);

impl Spinor {
    pub const fn new(c0: Complex64, c1: Complex64) -> Self {
        Self([c0, c1])
    }

    pub fn c0(&self) -> Complex64 {
        self.0[0]
    }

    pub fn c1(&self) -> Complex64 {
        self.0[1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Spinor) -> Complex64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    pub fn conj(&self) -> Spinor {
        Spinor([self.0[0].conj(), self.0[1].conj()])
    }

    pub fn scale(&self, s: Complex64) -> Spinor {
        Spinor([self.0[0] * s, self.0[1] * s])
    }

    pub fn max_abs_diff(&self, other: &Spinor) -> f64 {
        (0..2)
            .map(|k| (self.0[k] - other.0[k]).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

/// Two-spin state with amplitudes `(c00, c01, c10, c11)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinState(pub [Complex64; 4]);

impl TwoSpinState {
    pub fn from_real(v: [f64; 4]) -> Self {
        Self(v.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &TwoSpinState) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn conj(&self) -> TwoSpinState {
        TwoSpinState(self.0.map(|c| c.conj()))
    }

    pub fn scale(&self, s: Complex64) -> TwoSpinState {
        TwoSpinState(self.0.map(|c| c * s))
    }

    /// Exchanges the tensor factors: `Ψ(1,2) → Ψ(2,1)`.
    pub fn swap_spins(&self) -> TwoSpinState {
        let [c00, c01, c10, c11] = self.0;
        TwoSpinState([c00, c10, c01, c11])
    }

    pub fn max_abs_diff(&self, other: &TwoSpinState) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `| |⟨self|other⟩| − 1 |`: zero iff the unit states differ only by a
    /// global phase.
    pub fn phase_defect(&self, other: &TwoSpinState) -> f64 {
        (self.inner(other).norm() - 1.0).abs()
    }
}

impl Add for TwoSpinState {
    type Output = TwoSpinState;
    fn add(self, rhs: TwoSpinState) -> TwoSpinState {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        TwoSpinState(out)
    }
}

impl Sub for TwoSpinState {
    type Output = TwoSpinState;
    fn sub(self, rhs: TwoSpinState) -> TwoSpinState {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        TwoSpinState(out)
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2(pub [[Complex64; 2]; 2]);

impl ComplexMatrix2 {
    pub const fn zeros() -> Self {
        Self([[ZERO; 2]; 2])
    }

    pub const fn identity() -> Self {
        Self([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn from_real(rows: [[f64; 2]; 2]) -> Self {
        Self(rows.map(|r| r.map(|x| Complex64::new(x, 0.0))))
    }

    pub const fn diag(d0: Complex64, d1: Complex64) -> Self {
        Self([[d0, ZERO], [ZERO, d1]])
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|r| r.map(|c| c.conj())))
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.map(|r| r.map(|c| c * s)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `‖M†M − I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self - Self::identity()).max_abs()
    }

    /// `‖M − M†‖_max`.
    pub fn hermiticity_defect(&self) -> f64 {
        (*self - self.adjoint()).max_abs()
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = &self.0;
        Spinor([
            m[0][0] * v.0[0] + m[0][1] * v.0[1],
            m[1][0] * v.0[0] + m[1][1] * v.0[1],
        ])
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        ComplexMatrix2(out)
    }
}

impl Mul<Spinor> for ComplexMatrix2 {
    type Output = Spinor;
    fn mul(self, rhs: Spinor) -> Spinor {
        self.apply(&rhs)
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn add(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        let mut out = self.0;
        for (row, rhs_row) in out.iter_mut().zip(rhs.0.iter()) {
            for (x, y) in row.iter_mut().zip(rhs_row) {
                *x += y;
            }
        }
        ComplexMatrix2(out)
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn sub(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        self + (-rhs)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn neg(self) -> ComplexMatrix2 {
        ComplexMatrix2(self.0.map(|r| r.map(|c| -c)))
    }
}

/// 4×4 complex matrix acting on two-spin states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4(pub [[Complex64; 4]; 4]);

impl ComplexMatrix4 {
    pub const fn zeros() -> Self {
        Self([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for k in 0..4 {
            m.0[k][k] = ONE;
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut out = [[ZERO; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = self.0[j][i].conj();
            }
        }
        Self(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.map(|r| r.map(|c| c * s)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self - Self::identity()).max_abs()
    }

    pub fn apply(&self, v: &TwoSpinState) -> TwoSpinState {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.0[i][k] * v.0[k]).sum();
        }
        TwoSpinState(out)
    }

    /// `⟨bra|M|ket⟩`.
    pub fn matrix_element(&self, bra: &TwoSpinState, ket: &TwoSpinState) -> Complex64 {
        bra.inner(&self.apply(ket))
    }
}

impl Mul for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn mul(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = [[ZERO; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        ComplexMatrix4(out)
    }
}

impl Mul<TwoSpinState> for ComplexMatrix4 {
    type Output = TwoSpinState;
    fn mul(self, rhs: TwoSpinState) -> TwoSpinState {
        self.apply(&rhs)
    }
}

impl Add for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn add(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = self.0;
        for (row, rhs_row) in out.iter_mut().zip(rhs.0.iter()) {
            for (x, y) in row.iter_mut().zip(rhs_row) {
                *x += y;
            }
        }
        ComplexMatrix4(out)
    }
}

impl Sub for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn sub(self, rhs: ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = self.0;
        for (row, rhs_row) in out.iter_mut().zip(rhs.0.iter()) {
            for (x, y) in row.iter_mut().zip(rhs_row) {
                *x -= y;
            }
        }
        ComplexMatrix4(out)
    }
}

pub fn pauli_matrix(axis: Axis) -> ComplexMatrix2 {
    match axis {
        Axis::X => ComplexMatrix2([[ZERO, ONE], [ONE, ZERO]]),
        Axis::Y => ComplexMatrix2([[ZERO, -I], [I, ZERO]]),
        Axis::Z => ComplexMatrix2([[ONE, ZERO], [ZERO, -ONE]]),
    }
}

/// `m·σ` for a real 3-vector `m`.
pub fn pauli_dot(m: [f64; 3]) -> ComplexMatrix2 {
    ComplexMatrix2([
        [Complex64::new(m[2], 0.0), Complex64::new(m[0], -m[1])],
        [Complex64::new(m[0], m[1]), Complex64::new(-m[2], 0.0)],
    ])
}

/// Kronecker product `A ⊗ B`; `A` acts on spin 1.
pub fn kron_product(a: &ComplexMatrix2, b: &ComplexMatrix2) -> ComplexMatrix4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    ComplexMatrix4(out)
}

/// `u ⊗ v`, component `2i + j` equal to `u_i v_j`.
pub fn kron_vec(u: &Spinor, v: &Spinor) -> TwoSpinState {
    TwoSpinState([
        u.0[0] * v.0[0],
        u.0[0] * v.0[1],
        u.0[1] * v.0[0],
        u.0[1] * v.0[1],
    ])
}

/// Matrix form of a two-spin state: element `[i][j]` is component `2i + j`.
pub fn reshape_to_matrix(state: &TwoSpinState) -> ComplexMatrix2 {
    let [c00, c01, c10, c11] = state.0;
    ComplexMatrix2([[c00, c01], [c10, c11]])
}

pub fn reshape_from_matrix(m: &ComplexMatrix2) -> TwoSpinState {
    TwoSpinState([m.0[0][0], m.0[0][1], m.0[1][0], m.0[1][1]])
}

/// Inner product of two-spin states in matrix form, `Sp(Φ† Ψ)`.
pub fn matrix_inner(phi: &ComplexMatrix2, psi: &ComplexMatrix2) -> Complex64 {
    (phi.adjoint() * *psi).trace()
}

/// Rotation by `angle` about the unit vector `axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationSpec {
    pub axis: [f64; 3],
    pub angle: f64,
}

impl RotationSpec {
    pub fn new(axis: [f64; 3], angle: f64) -> Result<Self> {
        let spec = Self { axis, angle };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let norm = self.axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > DEFAULT_TOL || !self.angle.is_finite() {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(())
    }

    /// Haar-distributed SU(2) element written as axis and angle.
    ///
    /// A uniform point `(q0, q)` on the 3-sphere gives
    /// `D = q0·I + i·q·σ`, i.e. `cos(φ/2) = q0` and `sin(φ/2)·m = q`.
    pub fn haar_random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let q = unit_quaternion(rng);
        let vnorm = (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        let angle = 2.0 * vnorm.atan2(q[0]);
        let axis = if vnorm > 0.0 {
            [q[1] / vnorm, q[2] / vnorm, q[3] / vnorm]
        } else {
            [0.0, 0.0, 1.0]
        };
        // renormalise so the axis passes the unit check to the last bit
        let n = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        Self {
            axis: axis.map(|x| x / n),
            angle,
        }
    }
}

fn unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> [f64; 4] {
    loop {
        let q: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-8 {
            return q.map(|x| x / n);
        }
    }
}

/// Haar-random element of U(2).
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    let q = unit_quaternion(rng);
    let a = Complex64::new(q[0], q[3]);
    let b = Complex64::new(q[2], q[1]);
    let su2 = ComplexMatrix2([[a, -b.conj()], [b, a.conj()]]);
    let phase = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    su2.scale(phase)
}

/// `D(m; φ) = exp(i(φ/2) m·σ) = cos(φ/2) I + i sin(φ/2) m·σ`.
pub fn rotation_matrix(spec: &RotationSpec) -> Result<ComplexMatrix2> {
    spec.validate()?;
    let half = 0.5 * spec.angle;
    let (s, c) = half.sin_cos();
    Ok(ComplexMatrix2::identity().scale(Complex64::new(c, 0.0))
        + pauli_dot(spec.axis).scale(Complex64::new(0.0, s)))
}

/// `exp(−i H τ)` for Hermitian `H`, evaluated in closed form.
///
/// With `H = h0 I + h·σ`, the exponential is
/// `e^{−i h0 τ} [cos(|h|τ) I − i sin(|h|τ) (ĥ·σ)]`. Only the Hermitian part
/// of `h` is read.
pub fn unitary_exp(h: &ComplexMatrix2, tau: f64) -> ComplexMatrix2 {
    let m = &h.0;
    let h0 = 0.5 * (m[0][0].re + m[1][1].re);
    let hz = 0.5 * (m[0][0].re - m[1][1].re);
    let hx = 0.5 * (m[0][1].re + m[1][0].re);
    let hy = 0.5 * (m[1][0].im - m[0][1].im);
    let norm = (hx * hx + hy * hy + hz * hz).sqrt();
    let (s, c) = (norm * tau).sin_cos();
    let rot = if norm > 0.0 {
        ComplexMatrix2::identity().scale(Complex64::new(c, 0.0))
            + pauli_dot([hx / norm, hy / norm, hz / norm]).scale(Complex64::new(0.0, -s))
    } else {
        ComplexMatrix2::identity()
    };
    rot.scale(Complex64::from_polar(1.0, -h0 * tau))
}

/// Antiunitary operator `ψ ↦ U · conj(ψ)`.
///
/// Composition of two antiunitaries is linear and is returned as a plain
/// matrix by [`AntiunitaryOp::compose`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiunitaryOp {
    pub unitary_part: ComplexMatrix2,
}

/// Canonical time reversal `K = iσ_y C`, so that `KΨ_z+ = −Ψ_z−` and
/// `KΨ_z− = Ψ_z+`.
pub fn time_reversal() -> AntiunitaryOp {
    AntiunitaryOp {
        unitary_part: ComplexMatrix2::from_real([[0.0, 1.0], [-1.0, 0.0]]),
    }
}

impl AntiunitaryOp {
    pub fn new(unitary_part: ComplexMatrix2) -> Self {
        Self { unitary_part }
    }

    pub fn apply(&self, psi: &Spinor) -> Spinor {
        self.unitary_part.apply(&psi.conj())
    }

    /// Applies `A` column by column to a matrix of spinors: `M · conj(X)`.
    pub fn apply_matrix(&self, x: &ComplexMatrix2) -> ComplexMatrix2 {
        self.unitary_part * x.conj()
    }

    /// The linear operator `A H A⁺ = M conj(H) M†`.
    pub fn sandwich(&self, h: &ComplexMatrix2) -> Result<ComplexMatrix2> {
        let deviation = h.hermiticity_defect();
        if deviation > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(self.sandwich_unchecked(h))
    }

    /// `A X A⁺` for any (not necessarily Hermitian) linear `X`.
    pub fn sandwich_unchecked(&self, x: &ComplexMatrix2) -> ComplexMatrix2 {
        self.unitary_part * x.conj() * self.unitary_part.adjoint()
    }

    /// `A⁺ = A⁻¹`, with unitary part `Mᵀ`.
    pub fn adjoint(&self) -> AntiunitaryOp {
        AntiunitaryOp {
            unitary_part: self.unitary_part.transpose(),
        }
    }

    /// `self ∘ other` as a linear operator: `M₁ · conj(M₂)`.
    pub fn compose(&self, other: &AntiunitaryOp) -> ComplexMatrix2 {
        self.unitary_part * other.unitary_part.conj()
    }

    /// `U ∘ self`, still antiunitary.
    pub fn after(&self, u: &ComplexMatrix2) -> AntiunitaryOp {
        AntiunitaryOp {
            unitary_part: *u * self.unitary_part,
        }
    }

    /// `self ∘ U`, still antiunitary.
    pub fn before(&self, u: &ComplexMatrix2) -> AntiunitaryOp {
        AntiunitaryOp {
            unitary_part: self.unitary_part * u.conj(),
        }
    }

    /// `A ∘ A` as a linear operator.
    pub fn squared(&self) -> ComplexMatrix2 {
        self.compose(self)
    }
}
