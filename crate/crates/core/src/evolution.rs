//! Time evolution of the spin singlet in a static field along z.
//!
//! The single-spin Hamiltonian is `H = −J σ_z`. Because the two spins of the
//! singlet are in mutually time-reversed states, spin 1 evolves with
//! `U(t) = exp(−iHt/ħ)` and spin 2 with the reversed propagator
//! `U_rev(t) = K U(−t) K⁺ = exp(−i(KHK⁺)t/ħ)`. The resulting pair propagator
//! `U(t) ⊗ U_rev(t)` is generated by `H⊗I + I⊗KHK⁺`, which, unlike the
//! independent-spin generator `H⊗I + I⊗H`, rotates the singlet into the
//! `S_z = 0` triplet:
//!
//! ```text
//! Ψ(t) = a(t) Ψ_S + b(t) Ψ_T,   a = cos(2Jt/ħ),   b = i sin(2Jt/ħ)
//! ```
//!
//! Amplitudes are always projections onto the fixed pair
//! `Ψ_S = (0,1,−1,0)/√2`, `Ψ_T = (0,1,1,0)/√2`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::singlet::{self, eigenspinor, metric_spinor, OrthonormalBasis, Sign};
use crate::spinor::{
    kron_product, kron_vec, matrix_inner, pauli_matrix, time_reversal, unitary_exp, AntiunitaryOp,
    Axis, ComplexMatrix2, ComplexMatrix4, TwoSpinState,
};
use crate::DEFAULT_TOL;

/// Default threshold on `|a(t)|` below which [`branch`] reports a node.
pub const DEFAULT_NODE_TOL: f64 = 1e-9;

/// Static field along z.
///
/// `j` is the exchange-field value, or `−g μ_B H_z` for a magnetic field.
/// Negative `j` reverses the field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldParams {
    pub j: f64,
    pub hbar: f64,
}

impl FieldParams {
    pub fn new(j: f64, hbar: f64) -> Result<Self> {
        let p = Self { j, hbar };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        crate::error::require(self.j.is_finite(), "J", "finite", self.j)?;
        crate::error::require(
            self.hbar > 0.0 && self.hbar.is_finite(),
            "hbar",
            "positive and finite",
            self.hbar,
        )
    }

    /// Phase `2Jt/ħ` accumulated by the singlet amplitude.
    pub fn pair_phase(&self, t: f64) -> f64 {
        2.0 * self.j * t / self.hbar
    }
}

impl Default for FieldParams {
    fn default() -> Self {
        Self { j: 1.0, hbar: 1.0 }
    }
}

/// Singlet and triplet amplitudes `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    pub a: Complex64,
    pub b: Complex64,
}

impl AmplitudePair {
    pub fn p_singlet(&self) -> f64 {
        self.a.norm_sqr()
    }

    pub fn p_triplet(&self) -> f64 {
        self.b.norm_sqr()
    }

    pub fn max_abs_diff(&self, other: &AmplitudePair) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }
}

/// Which spin ordering of the singlet the state is in.
///
/// `Singlet21` marks the interval after a spin permutation, where
/// `a(t) < 0` and the state reads `|a| Ψ_S(2,1) + b Ψ_T(2,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Singlet12,
    Singlet21,
    Node,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Singlet12 => "Singlet12",
            Branch::Singlet21 => "Singlet21",
            Branch::Node => "Node",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `H = −J σ_z`.
pub fn hamiltonian(p: &FieldParams) -> ComplexMatrix2 {
    pauli_matrix(Axis::Z).scale(Complex64::new(-p.j, 0.0))
}

/// `KHK⁺` for the canonical time reversal; equals `+J σ_z`.
pub fn reversed_hamiltonian(p: &FieldParams) -> ComplexMatrix2 {
    time_reversal().sandwich_unchecked(&hamiltonian(p))
}

/// `U(t) = exp(−iHt/ħ) = diag(e^{iJt/ħ}, e^{−iJt/ħ})`.
pub fn single_evolution(p: &FieldParams, t: f64) -> ComplexMatrix2 {
    unitary_exp(&hamiltonian(p), t / p.hbar)
}

fn reversed_evolution_exp(p: &FieldParams, t: f64) -> ComplexMatrix2 {
    unitary_exp(&reversed_hamiltonian(p), t / p.hbar)
}

/// `U_rev(t)`, computed both as the antiunitary composition `K U(−t) K⁺` and
/// as `exp(−i(KHK⁺)t/ħ)`. The two must agree to `1e-12`.
pub fn reversed_evolution(p: &FieldParams, t: f64) -> Result<ComplexMatrix2> {
    let k = time_reversal();
    let composed = k.before(&single_evolution(p, -t)).compose(&k.adjoint());
    let exponentiated = reversed_evolution_exp(p, t);
    let deviation = composed.max_abs_diff(&exponentiated);
    if deviation > DEFAULT_TOL {
        return Err(Error::ConsistencyFailure {
            check: "K U(-t) K+ vs exp(-i KHK+ t/hbar)",
            deviation,
        });
    }
    Ok(exponentiated)
}

/// Pair propagator `U(t) ⊗ U_rev(t)`: spin 1 carries `U`, spin 2 the
/// time-reversed propagator.
pub fn pair_evolution(p: &FieldParams, t: f64) -> ComplexMatrix4 {
    kron_product(&single_evolution(p, t), &reversed_evolution_exp(p, t))
}

/// Independent-spin and correlated two-spin generators built from `H`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairGenerators {
    /// `H⊗I + I⊗H`.
    pub independent: ComplexMatrix4,
    /// `H⊗I + I⊗KHK⁺`, the generator of [`pair_evolution`].
    pub correlated: ComplexMatrix4,
}

pub fn pair_generators(h: &ComplexMatrix2) -> Result<PairGenerators> {
    let reversed = time_reversal().sandwich(h)?;
    let id = ComplexMatrix2::identity();
    Ok(PairGenerators {
        independent: kron_product(h, &id) + kron_product(&id, h),
        correlated: kron_product(h, &id) + kron_product(&id, &reversed),
    })
}

/// Finite-difference step `1e-6·ħ/max(|J|, 1)`.
pub fn generator_step(p: &FieldParams) -> f64 {
    1e-6 * p.hbar / p.j.abs().max(1.0)
}

/// `iħ dU/dt` at `t = 0` by central difference.
pub fn numerical_pair_generator(p: &FieldParams) -> ComplexMatrix4 {
    let h = generator_step(p);
    let diff = pair_evolution(p, h) - pair_evolution(p, -h);
    diff.scale(Complex64::new(0.0, p.hbar / (2.0 * h)))
}

/// `U(t) ⊗ U_rev(t)` applied to the canonical singlet. No re-phasing.
pub fn evolve_singlet(p: &FieldParams, t: f64) -> TwoSpinState {
    pair_evolution(p, t).apply(&singlet::singlet())
}

/// Builds the evolved state spin by spin from an orthonormal basis,
/// `(1/√2) Σ_± U(t)Ψ_± ⊗ U_rev(t)KΨ_±`.
///
/// This ordering puts `Ψ_±` on spin 1, which is `Ψ_S(2,1) = −Ψ_S(1,2)`, so
/// the result equals `−`[`evolve_singlet`] for every basis.
pub fn evolve_singlet_in_basis(
    p: &FieldParams,
    t: f64,
    basis: &OrthonormalBasis,
) -> Result<TwoSpinState> {
    let deviation = basis.orthonormality_defect();
    if deviation > DEFAULT_TOL {
        return Err(Error::NotOrthonormal { deviation });
    }
    let k = time_reversal();
    let u = single_evolution(p, t);
    let u_rev = reversed_evolution_exp(p, t);
    let term = |psi| kron_vec(&(u * psi), &(u_rev * k.apply(&psi)));
    let half = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Ok((term(basis.plus) + term(basis.minus)).scale(half))
}

/// Projections `a = ⟨Ψ_S|ψ⟩`, `b = ⟨Ψ_T|ψ⟩`.
pub fn amplitudes(state: &TwoSpinState) -> Result<AmplitudePair> {
    let norm_sq = state.norm_sqr();
    if (norm_sq - 1.0).abs() > DEFAULT_TOL {
        return Err(Error::NotNormalized { norm_sq });
    }
    Ok(AmplitudePair {
        a: singlet::singlet().inner(state),
        b: singlet::triplet_z0().inner(state),
    })
}

/// `a(t) = cos(2Jt/ħ)`.
pub fn singlet_amplitude(p: &FieldParams, t: f64) -> f64 {
    p.pair_phase(t).cos()
}

/// `(cos(2Jt/ħ), i sin(2Jt/ħ))`.
pub fn amplitudes_closed_form(p: &FieldParams, t: f64) -> AmplitudePair {
    let (s, c) = p.pair_phase(t).sin_cos();
    AmplitudePair {
        a: Complex64::new(c, 0.0),
        b: Complex64::new(0.0, s),
    }
}

pub fn branch(p: &FieldParams, t: f64, node_tol: f64) -> Branch {
    let a = singlet_amplitude(p, t);
    if a > node_tol {
        Branch::Singlet12
    } else if a < -node_tol {
        Branch::Singlet21
    } else {
        Branch::Node
    }
}

/// `k`-th zero of `a(t)` on the positive time axis, `(2k+1)πħ/(4|J|)`.
pub fn node_time(p: &FieldParams, k: u32) -> Result<f64> {
    if p.j == 0.0 {
        return Err(Error::NoOscillation);
    }
    Ok((2 * k + 1) as f64 * PI * p.hbar / (4.0 * p.j.abs()))
}

/// `πħ/|J|`.
pub fn period(p: &FieldParams) -> Result<f64> {
    if p.j == 0.0 {
        return Err(Error::NoOscillation);
    }
    Ok(PI * p.hbar / p.j.abs())
}

/// Complex conjugate of [`evolve_singlet`]; amplitudes `(a, b*)`.
pub fn conjugate_evolution(p: &FieldParams, t: f64) -> TwoSpinState {
    evolve_singlet(p, t).conj()
}

/// `K(t) = exp(iHt/ħ) ∘ K(0) ∘ exp(iHt/ħ)`.
///
/// The same sign in both exponents comes from moving the right-hand factor
/// through the antilinear `K(0)`. The unitary part is
/// `E · M₀ · conj(E)` with `E = exp(iHt/ħ)`.
pub fn heisenberg_time_reversal(p: &FieldParams, t: f64) -> AntiunitaryOp {
    let e = single_evolution(p, -t);
    time_reversal().before(&e).after(&e)
}

/// `a(t)` from the time-reversal correlator, `(1/2) Sp[K(t) K⁺(0)]`,
/// cross-checked against `(1/2) Sp[K(−t) K⁺(0)]`.
pub fn amplitude_via_trace(p: &FieldParams, t: f64) -> Result<f64> {
    let forward = trace_correlator(p, t);
    let reversed = trace_correlator(p, -t);
    let deviation = (forward - reversed)
        .norm()
        .max(forward.im.abs())
        .max(reversed.im.abs());
    if deviation > DEFAULT_TOL {
        return Err(Error::ConsistencyFailure {
            check: "Sp[K(t)K+(0)] vs Sp[K(-t)K+(0)]",
            deviation,
        });
    }
    Ok(forward.re)
}

fn trace_correlator(p: &FieldParams, t: f64) -> Complex64 {
    let k0_adj = time_reversal().adjoint();
    heisenberg_time_reversal(p, t).compose(&k0_adj).trace() * 0.5
}

/// Matrix form `(1/√2) U(t) g U_rev(t)ᵀ`, row index = spin 1.
pub fn matrix_form_evolution(p: &FieldParams, t: f64) -> ComplexMatrix2 {
    let g = metric_spinor().matrix();
    let u = single_evolution(p, t);
    let u_rev = reversed_evolution_exp(p, t);
    (u * g * u_rev.transpose()).scale(Complex64::new(FRAC_1_SQRT_2, 0.0))
}

/// Conjugate matrix form `(1/√2) U_rev(t) g U(t)ᵀ`.
pub fn conjugate_matrix_form_evolution(p: &FieldParams, t: f64) -> ComplexMatrix2 {
    let g = metric_spinor().matrix();
    let u = single_evolution(p, t);
    let u_rev = reversed_evolution_exp(p, t);
    (u_rev * g * u.transpose()).scale(Complex64::new(FRAC_1_SQRT_2, 0.0))
}

/// `a(t)` evaluated four independent ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeRoutes {
    /// `⟨Ψ_S|U_{12}(t)Ψ_S⟩` on state vectors.
    pub projection: Complex64,
    /// `(1/2) Sp[K(t) K⁺(0)]`.
    pub trace_forward: Complex64,
    /// `(1/2) Sp[K(−t) K⁺(0)]`.
    pub trace_reversed: Complex64,
    /// `Sp[Ψ_S† Ψ(t)]` in matrix form.
    pub matrix_form: Complex64,
}

impl AmplitudeRoutes {
    pub fn values(&self) -> [Complex64; 4] {
        [
            self.projection,
            self.trace_forward,
            self.trace_reversed,
            self.matrix_form,
        ]
    }

    pub fn max_pairwise_deviation(&self) -> f64 {
        let v = self.values();
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                worst = worst.max((v[i] - v[j]).norm());
            }
        }
        worst
    }
}

pub fn amplitude_routes(p: &FieldParams, t: f64) -> AmplitudeRoutes {
    let psi_s = singlet::singlet_matrix_form();
    AmplitudeRoutes {
        projection: singlet::singlet().inner(&evolve_singlet(p, t)),
        trace_forward: trace_correlator(p, t),
        trace_reversed: trace_correlator(p, -t),
        matrix_form: matrix_inner(&psi_s, &matrix_form_evolution(p, t)),
    }
}

/// `|⟨Ψ_x−|U(t)|Ψ_x+⟩|²`, equal to `sin²(Jt/ħ)`.
pub fn flip_probability(p: &FieldParams, t: f64) -> f64 {
    let up = eigenspinor(Axis::X, Sign::Plus);
    let down = eigenspinor(Axis::X, Sign::Minus);
    down.inner(&(single_evolution(p, t) * up)).norm_sqr()
}

/// Probability of a definite spin orientation, `|1/2 − sin²(Jt/ħ)| = |a(t)|/2`.
pub fn orientation_probability(p: &FieldParams, t: f64) -> f64 {
    let s = (p.j * t / p.hbar).sin();
    (0.5 - s * s).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::reshape_from_matrix;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn unit() -> FieldParams {
        FieldParams::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(
            hamiltonian(&unit()),
            ComplexMatrix2::from_real([[-1.0, 0.0], [0.0, 1.0]])
        );
        let zero = FieldParams::new(0.0, 1.0).unwrap();
        assert_eq!(hamiltonian(&zero).max_abs(), 0.0);
        let p = FieldParams::new(2.5, 1.0).unwrap();
        let h = hamiltonian(&p);
        assert_eq!((h.0[0][0].re, h.0[1][1].re), (-2.5, 2.5));
    }

    #[test]
    fn params_validation() {
        assert!(FieldParams::new(1.0, 0.0).is_err());
        assert!(FieldParams::new(f64::NAN, 1.0).is_err());
        assert!(FieldParams::new(-3.0, 0.5).is_ok());
    }

    #[test]
    fn single_evolution_examples() {
        let p = unit();
        assert_eq!(single_evolution(&p, 0.0), ComplexMatrix2::identity());
        let u = single_evolution(&p, PI);
        assert!(u.max_abs_diff(&-ComplexMatrix2::identity()) < 1e-15);
        let t = 0.37;
        let prod = single_evolution(&p, t) * single_evolution(&p, -t);
        assert!(prod.max_abs_diff(&ComplexMatrix2::identity()) < 1e-14);
    }

    #[test]
    fn reversed_evolution_is_backward_propagator() {
        let p = FieldParams::new(1.0, 1.0).unwrap();
        assert_eq!(
            reversed_evolution(&p, 0.0).unwrap(),
            ComplexMatrix2::identity()
        );
        for t in [0.1, 0.9, 2.3, -4.0] {
            let expect = ComplexMatrix2::diag(
                Complex64::from_polar(1.0, -t),
                Complex64::from_polar(1.0, t),
            );
            assert!(reversed_evolution(&p, t).unwrap().max_abs_diff(&expect) < 1e-15);
        }
    }

    #[test]
    fn pair_evolution_identity_and_node() {
        let p = FieldParams::new(0.8, 1.3).unwrap();
        assert_eq!(pair_evolution(&p, 0.0), ComplexMatrix4::identity());
        let t = node_time(&p, 0).unwrap();
        let psi = evolve_singlet(&p, t);
        assert!(singlet::singlet().inner(&psi).norm() < 1e-12);
    }

    #[test]
    fn generators_for_z_field() {
        let j = 0.7;
        let p = FieldParams::new(j, 1.0).unwrap();
        let gens = pair_generators(&hamiltonian(&p)).unwrap();
        let s = singlet::singlet();
        assert!(gens.independent.apply(&s).norm_sqr() < 1e-30);
        let c = gens.correlated;
        let expect = [0.0, -2.0 * j, 2.0 * j, 0.0];
        for (k, e) in expect.iter().enumerate() {
            assert!((c.0[k][k] - Complex64::new(*e, 0.0)).norm() < 1e-15);
        }
        // correlated Ψ_S = −2J Ψ_T
        let out = c.apply(&s);
        let target = singlet::triplet_z0().scale(Complex64::new(-2.0 * j, 0.0));
        assert!(out.max_abs_diff(&target) < 1e-15);

        let zero = pair_generators(&ComplexMatrix2::zeros()).unwrap();
        assert_eq!(zero.independent.max_abs(), 0.0);
        assert_eq!(zero.correlated.max_abs(), 0.0);
    }

    #[test]
    fn numerical_generator_matches_correlated() {
        for (j, hbar) in [(1.0, 1.0), (2.7, 0.5), (-0.3, 2.0)] {
            let p = FieldParams::new(j, hbar).unwrap();
            let numeric = numerical_pair_generator(&p);
            let exact = pair_generators(&hamiltonian(&p)).unwrap().correlated;
            assert!(numeric.max_abs_diff(&exact) < 1e-10, "J={j}");
        }
    }

    #[test]
    fn evolve_singlet_examples() {
        let p = unit();
        assert_eq!(evolve_singlet(&p, 0.0), singlet::singlet());
        let s = FRAC_1_SQRT_2;
        let quarter = evolve_singlet(&p, FRAC_PI_4);
        let expect = TwoSpinState([
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, s),
            Complex64::new(0.0, s),
            Complex64::new(0.0, 0.0),
        ]);
        assert!(quarter.max_abs_diff(&expect) < 1e-15);
        let amp = amplitudes(&quarter).unwrap();
        assert!(
            amp.max_abs_diff(&AmplitudePair {
                a: Complex64::new(0.0, 0.0),
                b: Complex64::new(0.0, 1.0),
            }) < 1e-15
        );
        let half = evolve_singlet(&p, FRAC_PI_2);
        let minus_s = singlet::singlet().scale(Complex64::new(-1.0, 0.0));
        assert!(half.max_abs_diff(&minus_s) < 1e-15);
    }

    #[test]
    fn amplitudes_reject_unnormalized() {
        let s = singlet::singlet().scale(Complex64::new(2.0, 0.0));
        assert!(matches!(amplitudes(&s), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn amplitudes_closed_form_examples() {
        let p = unit();
        let a0 = amplitudes_closed_form(&p, 0.0);
        assert_eq!(a0.a, Complex64::new(1.0, 0.0));
        assert_eq!(a0.b.norm(), 0.0);
        let q = amplitudes_closed_form(&p, FRAC_PI_4);
        assert!(q.a.norm() < 1e-16);
        assert!((q.b - Complex64::new(0.0, 1.0)).norm() < 1e-16);
    }

    #[test]
    fn branch_node_and_period() {
        let p = unit();
        assert_eq!(branch(&p, 0.1, DEFAULT_NODE_TOL), Branch::Singlet12);
        assert_eq!(branch(&p, FRAC_PI_4, DEFAULT_NODE_TOL), Branch::Node);
        assert_eq!(branch(&p, 1.0, DEFAULT_NODE_TOL), Branch::Singlet21);
        let p2 = FieldParams::new(2.0, 0.5).unwrap();
        assert!((node_time(&p2, 0).unwrap() - PI * 0.5 / 8.0).abs() < 1e-16);
        assert!((node_time(&p2, 1).unwrap() - 3.0 * PI * 0.5 / 8.0).abs() < 1e-16);
        assert!((period(&p2).unwrap() - PI * 0.5 / 2.0).abs() < 1e-16);
        let zero = FieldParams::new(0.0, 1.0).unwrap();
        assert_eq!(period(&zero), Err(Error::NoOscillation));
        assert_eq!(node_time(&zero, 0), Err(Error::NoOscillation));
    }

    #[test]
    fn conjugate_branch() {
        let p = unit();
        assert_eq!(conjugate_evolution(&p, 0.0), singlet::singlet());
        let amp = amplitudes(&conjugate_evolution(&p, FRAC_PI_4)).unwrap();
        assert!((amp.b - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        let t = 0.613;
        let direct = amplitudes(&evolve_singlet(&p, t)).unwrap();
        let conj = amplitudes(&conjugate_evolution(&p, t)).unwrap();
        assert!((direct.p_singlet() - conj.p_singlet()).abs() < 1e-14);
        assert!((direct.p_triplet() - conj.p_triplet()).abs() < 1e-14);
    }

    #[test]
    fn heisenberg_time_reversal_properties() {
        let p = FieldParams::new(1.7, 0.9).unwrap();
        assert_eq!(heisenberg_time_reversal(&p, 0.0), time_reversal());
        for t in [0.2, 1.3, 7.9] {
            let k = heisenberg_time_reversal(&p, t);
            assert!(k.unitary_part.unitarity_defect() < 1e-13);
            // K(t)K⁺(0) = U(−2t)
            let c = k.compose(&time_reversal().adjoint());
            assert!(c.max_abs_diff(&single_evolution(&p, -2.0 * t)) < 1e-13);
        }
    }

    #[test]
    fn trace_amplitude_examples() {
        let p = unit();
        assert!((amplitude_via_trace(&p, 0.0).unwrap() - 1.0).abs() < 1e-16);
        assert!((amplitude_via_trace(&p, FRAC_PI_2).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_form_examples() {
        let p = FieldParams::new(0.4, 1.1).unwrap();
        let g = metric_spinor()
            .matrix()
            .scale(Complex64::new(FRAC_1_SQRT_2, 0.0));
        assert_eq!(matrix_form_evolution(&p, 0.0), g);
        let t = 2.2;
        let via_matrix = reshape_from_matrix(&matrix_form_evolution(&p, t));
        assert!(via_matrix.max_abs_diff(&evolve_singlet(&p, t)) < 1e-15);
        let conj = reshape_from_matrix(&conjugate_matrix_form_evolution(&p, t));
        assert!(conj.max_abs_diff(&conjugate_evolution(&p, t)) < 1e-15);
    }

    #[test]
    fn flip_and_orientation() {
        let p = unit();
        assert_eq!(flip_probability(&p, 0.0), 0.0);
        assert_eq!(orientation_probability(&p, 0.0), 0.5);
        assert!((flip_probability(&p, FRAC_PI_2) - 1.0).abs() < 1e-15);
        assert!(orientation_probability(&p, FRAC_PI_4) < 1e-15);
    }

    #[test]
    fn basis_construction_is_minus_canonical() {
        let p = FieldParams::new(0.9, 1.0).unwrap();
        let t = 0.77;
        let from_x = evolve_singlet_in_basis(&p, t, &OrthonormalBasis::pauli(Axis::X)).unwrap();
        let canonical = evolve_singlet(&p, t);
        assert!(from_x.max_abs_diff(&canonical.scale(Complex64::new(-1.0, 0.0))) < 1e-15);
    }
}
