use std::f64::consts::PI;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singlet_core::evolution::{
    amplitude_routes, amplitudes, evolve_singlet, pair_evolution, period, single_evolution,
};
use singlet_core::singlet::{generalized_singlet, rotate_two_spin, singlet};
use singlet_core::spinor::{haar_unitary, time_reversal};
use singlet_core::{Complex64, FieldParams, OrthonormalBasis, RotationSpec, Spinor};

fn field() -> impl Strategy<Value = FieldParams> {
    (-5.0..5.0_f64, 0.2..3.0_f64).prop_map(|(j, hbar)| FieldParams { j, hbar })
}

fn spinor() -> impl Strategy<Value = Spinor> {
    prop::array::uniform4(-1.0..1.0_f64)
        .prop_map(|v| Spinor([Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn evolution_is_unitary(p in field(), t in -20.0..20.0_f64) {
        prop_assert!(single_evolution(&p, t).unitarity_defect() < 1e-12);
        prop_assert!(pair_evolution(&p, t).unitarity_defect() < 1e-12);
    }

    #[test]
    fn probabilities_conserved(p in field(), t in -20.0..20.0_f64) {
        let amp = amplitudes(&evolve_singlet(&p, t)).unwrap();
        prop_assert!((amp.p_singlet() + amp.p_triplet() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn amplitude_routes_agree(p in field(), t in -10.0..10.0_f64) {
        prop_assert!(amplitude_routes(&p, t).max_pairwise_deviation() < 1e-12);
    }

    #[test]
    fn periodic_up_to_phase(p in field(), t in 0.0..10.0_f64) {
        prop_assume!(p.j.abs() > 0.05);
        let tp = period(&p).unwrap();
        let a = evolve_singlet(&p, t);
        let b = evolve_singlet(&p, t + tp);
        prop_assert!(a.phase_defect(&b) < 1e-10);
    }

    #[test]
    fn time_reversal_is_antilinear(psi in spinor(), phi in spinor(), re in -2.0..2.0_f64, im in -2.0..2.0_f64) {
        let k = time_reversal();
        let c = Complex64::new(re, im);
        let lhs = k.apply(&(psi.scale(c) + phi));
        let rhs = k.apply(&psi).scale(c.conj()) + k.apply(&phi);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
        // norm preserved, K² = −1
        prop_assert!((k.apply(&psi).norm_sqr() - psi.norm_sqr()).abs() < 1e-14);
        prop_assert!(k.apply(&k.apply(&psi)).max_abs_diff(&psi.scale(Complex64::new(-1.0, 0.0))) < 1e-14);
    }

    #[test]
    fn singlet_rotation_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = RotationSpec::haar_random(&mut rng);
        let rotated = rotate_two_spin(&singlet(), &spec).unwrap();
        prop_assert!(rotated.max_abs_diff(&singlet()) < 1e-13);
    }

    #[test]
    fn singlet_basis_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = OrthonormalBasis::rotated_z(&haar_unitary(&mut rng)).unwrap();
        let s = generalized_singlet(&basis).unwrap();
        prop_assert!(s.max_abs_diff(&singlet()) < 1e-13);
    }
}

#[test]
fn quarter_period_swaps_singlet_for_triplet() {
    let p = FieldParams { j: 1.0, hbar: 1.0 };
    let amp = amplitudes(&evolve_singlet(&p, PI / 4.0)).unwrap();
    assert!(amp.p_singlet() < 1e-30);
    assert!((amp.b - Complex64::new(0.0, 1.0)).norm() < 1e-15);
}
