//! Singlet and `S_z = 0` triplet states of two spins.
//!
//! States are unit normalized with a `1/√2` prefactor on every two-term
//! combination. The canonical z-basis singlet is `(0, 1, −1, 0)/√2` and its
//! matrix form is `g/√2`, with `g` the metric spinor.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spinor::{
    kron_product, kron_vec, pauli_matrix, reshape_from_matrix, reshape_to_matrix, rotation_matrix,
    time_reversal, Axis, ComplexMatrix2, ComplexMatrix4, RotationSpec, Spinor, TwoSpinState,
};
use crate::DEFAULT_TOL;

const INV_SQRT2: Complex64 = Complex64::new(FRAC_1_SQRT_2, 0.0);

/// Eigenvalue sign of a Pauli eigenspinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Ψ_z+ = (1,0)`, `Ψ_z− = (0,1)`, `Ψ_x± = (1,±1)/√2`, `Ψ_y± = (1,±i)/√2`.
pub fn eigenspinor(axis: Axis, sign: Sign) -> Spinor {
    let s = match sign {
        Sign::Plus => 1.0,
        Sign::Minus => -1.0,
    };
    match (axis, sign) {
        (Axis::Z, Sign::Plus) => Spinor::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        (Axis::Z, Sign::Minus) => Spinor::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
        (Axis::X, _) => Spinor::new(INV_SQRT2, Complex64::new(s * FRAC_1_SQRT_2, 0.0)),
        (Axis::Y, _) => Spinor::new(INV_SQRT2, Complex64::new(0.0, s * FRAC_1_SQRT_2)),
    }
}

/// An orthonormal pair `(ψ₊, ψ₋)` of single-spin states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthonormalBasis {
    pub plus: Spinor,
    pub minus: Spinor,
}

impl OrthonormalBasis {
    pub fn new(plus: Spinor, minus: Spinor) -> Result<Self> {
        let basis = Self { plus, minus };
        let deviation = basis.orthonormality_defect();
        if deviation > DEFAULT_TOL {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(basis)
    }

    pub fn pauli(axis: Axis) -> Self {
        Self {
            plus: eigenspinor(axis, Sign::Plus),
            minus: eigenspinor(axis, Sign::Minus),
        }
    }

    /// Image of the z basis under a unitary `u`.
    pub fn rotated_z(u: &ComplexMatrix2) -> Result<Self> {
        let z = Self::pauli(Axis::Z);
        Self::new(*u * z.plus, *u * z.minus)
    }

    pub fn orthonormality_defect(&self) -> f64 {
        let a = (self.plus.norm_sqr() - 1.0).abs();
        let b = (self.minus.norm_sqr() - 1.0).abs();
        let c = self.plus.inner(&self.minus).norm();
        a.max(b).max(c)
    }
}

/// `(1/√2)(Ψ_α+ ⊗ Ψ_α− − Ψ_α− ⊗ Ψ_α+)`.
pub fn traditional_singlet(axis: Axis) -> TwoSpinState {
    let b = OrthonormalBasis::pauli(axis);
    (kron_vec(&b.plus, &b.minus) - kron_vec(&b.minus, &b.plus)).scale(INV_SQRT2)
}

/// `(1/√2)(KΨ₋ ⊗ Ψ₋ + KΨ₊ ⊗ Ψ₊)`.
///
/// Independent of the basis and of the phases of its vectors: the sum is
/// `vec(iσ_y)` by completeness, i.e. `(0, 1, −1, 0)/√2`.
pub fn generalized_singlet(basis: &OrthonormalBasis) -> Result<TwoSpinState> {
    let deviation = basis.orthonormality_defect();
    if deviation > DEFAULT_TOL {
        return Err(Error::NotOrthonormal { deviation });
    }
    let k = time_reversal();
    let minus = kron_vec(&k.apply(&basis.minus), &basis.minus);
    let plus = kron_vec(&k.apply(&basis.plus), &basis.plus);
    Ok((minus + plus).scale(INV_SQRT2))
}

/// Canonical singlet `(0, 1, −1, 0)/√2`.
pub fn singlet() -> TwoSpinState {
    TwoSpinState::from_real([0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0])
}

/// `S_z = 0` triplet component `(0, 1, 1, 0)/√2`.
pub fn triplet_z0() -> TwoSpinState {
    TwoSpinState::from_real([0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0])
}

/// The metric spinor `g = [[0, 1], [−1, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSpinor(pub ComplexMatrix2);

impl MetricSpinor {
    pub fn matrix(&self) -> ComplexMatrix2 {
        self.0
    }

    /// Largest deviation among `g† = −g`, `g⁻¹ = −g` (via `g·(−g) = I`) and
    /// `gᵀ = −g`.
    pub fn identity_defect(&self) -> f64 {
        let g = self.0;
        let adj = (g.adjoint() + g).max_abs();
        let inv = (g * -g - ComplexMatrix2::identity()).max_abs();
        let tr = (g.transpose() + g).max_abs();
        adj.max(inv).max(tr)
    }
}

pub fn metric_spinor() -> MetricSpinor {
    MetricSpinor(ComplexMatrix2::from_real([[0.0, 1.0], [-1.0, 0.0]]))
}

/// `Ψ_S = g/√2`.
pub fn singlet_matrix_form() -> ComplexMatrix2 {
    metric_spinor().matrix().scale(INV_SQRT2)
}

/// `σ_z/√2`. Reshapes to `(1, 0, 0, −1)/√2`, which is the `S_z = 0` triplet
/// only in x-quantization labels; see [`triplet_z0`] for the z-labeled form.
pub fn triplet_matrix_form() -> ComplexMatrix2 {
    pauli_matrix(Axis::Z).scale(INV_SQRT2)
}

/// Applies `D(m;φ) ⊗ D(m;φ)`.
pub fn rotate_two_spin(state: &TwoSpinState, spec: &RotationSpec) -> Result<TwoSpinState> {
    let d = rotation_matrix(spec)?;
    Ok(kron_product(&d, &d).apply(state))
}

/// Matrix-form equivalent of [`rotate_two_spin`]: `D Ψ Dᵀ`.
pub fn rotate_two_spin_matrix(
    state: &ComplexMatrix2,
    spec: &RotationSpec,
) -> Result<ComplexMatrix2> {
    let d = rotation_matrix(spec)?;
    Ok(d * *state * d.transpose())
}

/// Same as [`rotate_two_spin`] but routed through the matrix form.
pub fn rotate_two_spin_via_matrix(
    state: &TwoSpinState,
    spec: &RotationSpec,
) -> Result<TwoSpinState> {
    rotate_two_spin_matrix(&reshape_to_matrix(state), spec).map(|m| reshape_from_matrix(&m))
}

/// Total spin squared `S² = Σ_α ((σ_α⊗I + I⊗σ_α)/2)²`.
pub fn total_spin_squared() -> ComplexMatrix4 {
    let id = ComplexMatrix2::identity();
    let half = Complex64::new(0.5, 0.0);
    Axis::ALL
        .iter()
        .map(|&a| {
            let s = pauli_matrix(a);
            (kron_product(&s, &id) + kron_product(&id, &s)).scale(half)
        })
        .fold(ComplexMatrix4::zeros(), |acc, s| acc + s * s)
}

/// `S_z = (σ_z⊗I + I⊗σ_z)/2`.
pub fn total_spin_z() -> ComplexMatrix4 {
    let id = ComplexMatrix2::identity();
    let z = pauli_matrix(Axis::Z);
    (kron_product(&z, &id) + kron_product(&id, &z)).scale(Complex64::new(0.5, 0.0))
}
