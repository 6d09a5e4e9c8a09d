//! Classical propagation of a pair and its spin-weighted correlation
//! function `f(R, t) = 2⟨δδ⟩·a(t)`.

use std::f64::consts::PI;

use crate::error::{require, Error, Result};
use crate::evolution::{singlet_amplitude, FieldParams};

use super::KernelParams;

/// Ballistic propagator `(1/4π)R⁻²δ(R − v_F t)`.
///
/// A distribution, so it is kept symbolic: only integrals against it are
/// ever evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaShell {
    /// `v_F·t`.
    pub radius: f64,
    /// `1/(4πR²)` at the observation point `R`.
    pub surface_weight: f64,
    /// Shell speed `v_F`.
    pub speed: f64,
}

impl DeltaShell {
    /// Time at which the shell passes through `r`.
    pub fn arrival_time(&self, r: f64) -> f64 {
        r / self.speed
    }

    /// `|d(R − v_F t)/dt|⁻¹`, the weight picked up when the delta function
    /// is integrated over time.
    pub fn time_jacobian(&self) -> f64 {
        1.0 / self.speed
    }

    /// `∫dt g(t)·δ(R − v_F t)/(4πR²)` for the observation point the shell
    /// was built for.
    pub fn integrate_over_time<G: Fn(f64) -> f64>(&self, r: f64, g: G) -> f64 {
        g(self.arrival_time(r)) * self.surface_weight * self.time_jacobian()
    }
}

/// Density-density correlator `⟨δ(r − r(t)) δ(r′ − r(0))⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Correlator {
    /// Diffusion propagator `(4πDt)^{−3/2}e^{−R²/4Dt}`.
    Density(f64),
    Shell(DeltaShell),
}

fn require_positive_time(t: f64) -> Result<()> {
    require(t > 0.0 && t.is_finite(), "t", "positive", t)
}

/// `(4πDt)^{−3/2}·exp(−R²/(4Dt))`, no validation.
pub(crate) fn diffusion_density(r: f64, t: f64, d: f64) -> f64 {
    let four_dt = 4.0 * d * t;
    (PI * four_dt).powf(-1.5) * (-r * r / four_dt).exp()
}

pub fn classical_correlator(params: &KernelParams, r: f64, t: f64) -> Result<Correlator> {
    params.validate()?;
    require_positive_time(t)?;
    require(r > 0.0 && r.is_finite(), "R", "positive", r)?;
    Ok(match params {
        KernelParams::Clean(p) => Correlator::Shell(DeltaShell {
            radius: p.v_f * t,
            surface_weight: 1.0 / (4.0 * PI * r * r),
            speed: p.v_f,
        }),
        KernelParams::Dirty(p) => Correlator::Density(diffusion_density(r, t, p.d)),
    })
}

/// The four classical contributions of a pair: both spins carried forward,
/// and the time-reversed pairs, each weighted by `(|a|/2)·sign a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourTermDecomposition {
    pub terms: [f64; 4],
}

impl FourTermDecomposition {
    /// `x` is the correlator weight; the reversed pairs use `a(−t)`.
    pub fn new(x: f64, field: &FieldParams, t: f64) -> Self {
        let weight = |a: f64| x * (0.5 * a.abs()).copysign(a);
        let forward = weight(singlet_amplitude(field, t));
        let backward = weight(singlet_amplitude(field, -t));
        Self {
            terms: [forward, forward, backward, backward],
        }
    }

    pub fn sum(&self) -> f64 {
        let [t1, t2, t3, t4] = self.terms;
        (t1 + t2) + (t3 + t4)
    }
}

/// `f(R, t)`; for the clean limit the shell is kept and `factor = 2a(t)`
/// multiplies it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairCorrelation {
    Density(f64),
    Shell { shell: DeltaShell, factor: f64 },
}

/// Economical form checked against the four-term sum; the two must agree
/// bitwise unless the terms are subnormal.
pub(crate) fn economical_with_check(x: f64, field: &FieldParams, t: f64) -> Result<f64> {
    let a = singlet_amplitude(field, t);
    let economical = 2.0 * x * a;
    let decomposed = FourTermDecomposition::new(x, field, t).sum();
    let underflow = economical.abs() < 8.0 * f64::MIN_POSITIVE
        && (economical - decomposed).abs() <= 8.0 * f64::MIN_POSITIVE;
    if economical != decomposed && !underflow {
        return Err(Error::ConsistencyFailure {
            check: "four-term decomposition",
            deviation: (economical - decomposed).abs(),
        });
    }
    Ok(economical)
}

pub fn pair_correlation_f(params: &KernelParams, r: f64, t: f64) -> Result<PairCorrelation> {
    let field = params.field();
    match classical_correlator(params, r, t)? {
        Correlator::Density(x) => Ok(PairCorrelation::Density(economical_with_check(
            x, &field, t,
        )?)),
        Correlator::Shell(shell) => Ok(PairCorrelation::Shell {
            shell,
            factor: economical_with_check(1.0, &field, t)?,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{CleanParams, DirtyParams};
    use crate::quadrature::{integrate, uniform_breakpoints, QuadratureConfig};

    fn dirty(j: f64, d: f64) -> KernelParams {
        KernelParams::Dirty(DirtyParams {
            n0: 1.0,
            g_abs: 1.0,
            t_c: 1.0,
            j,
            hbar: 1.0,
            d,
        })
    }

    fn clean(j: f64, v_f: f64) -> KernelParams {
        KernelParams::Clean(CleanParams {
            n0: 1.0,
            g_abs: 1.0,
            t_c: 1.0,
            v_f,
            j,
            hbar: 1.0,
        })
    }

    #[test]
    fn diffusion_propagator_is_normalized() {
        let (d, t) = (0.7_f64, 1.3);
        let width = (4.0 * d * t).sqrt();
        let cfg = QuadratureConfig {
            abs_tol: 0.0,
            ..Default::default()
        };
        let total = integrate(
            |r| 4.0 * PI * r * r * diffusion_density(r, t, d),
            &uniform_breakpoints(0.0, 8.0 * width, 8),
            &cfg,
        )
        .unwrap();
        assert!((total.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn diffusion_peak_at_origin() {
        let (d, t) = (0.5, 2.0);
        let peak = (4.0 * PI * d * t).powf(-1.5);
        assert!((diffusion_density(0.0, t, d) - peak).abs() < 1e-16);
        match classical_correlator(&dirty(0.0, d), 1e-9, t).unwrap() {
            Correlator::Density(v) => assert!((v - peak).abs() < 1e-15 * peak),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shell_radius() {
        match classical_correlator(&clean(0.0, 3.0), 1.0, 2.0).unwrap() {
            Correlator::Shell(s) => {
                assert_eq!(s.radius, 6.0);
                assert_eq!(s.surface_weight, 1.0 / (4.0 * PI));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_non_positive_time() {
        assert!(classical_correlator(&dirty(0.0, 1.0), 1.0, 0.0).is_err());
        assert!(pair_correlation_f(&clean(0.0, 1.0), 1.0, -1.0).is_err());
    }

    fn density(f: PairCorrelation) -> f64 {
        match f {
            PairCorrelation::Density(v) => v,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn node_destroys_correlation() {
        let j = 0.8;
        let t = PI / (4.0 * j);
        let f = density(pair_correlation_f(&dirty(j, 1.0), 0.5, t).unwrap());
        assert!(f.abs() < 1e-16);
    }

    #[test]
    fn sign_change_between_nodes() {
        let j = 1.0;
        for k in 1..20 {
            let t = PI / 4.0 + k as f64 * (PI / 2.0) / 20.0;
            let f = density(pair_correlation_f(&dirty(j, 1.0), 0.5, t).unwrap());
            assert!(f < 0.0, "t = {t}");
        }
        let f = density(pair_correlation_f(&dirty(j, 1.0), 0.5, 0.1).unwrap());
        assert!(f > 0.0);
    }

    #[test]
    fn no_field_doubles_correlator() {
        let p = dirty(0.0, 1.0);
        let x = diffusion_density(0.7, 0.4, 1.0);
        let f = density(pair_correlation_f(&p, 0.7, 0.4).unwrap());
        assert_eq!(f, 2.0 * x);
        match pair_correlation_f(&clean(0.0, 1.0), 0.7, 0.4).unwrap() {
            PairCorrelation::Shell { factor, .. } => assert_eq!(factor, 2.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decomposition_matches_economical_form() {
        let field = FieldParams { j: 1.7, hbar: 0.9 };
        for i in 0..500 {
            let t = 0.013 * i as f64 + 1e-3;
            let x = (0.37 * i as f64).sin().abs() + 1e-3;
            let a = singlet_amplitude(&field, t);
            let dec = FourTermDecomposition::new(x, &field, t);
            assert_eq!(dec.sum(), 2.0 * x * a);
            for term in dec.terms {
                assert_eq!(term.signum(), a.signum());
            }
        }
    }

    #[test]
    fn shell_time_integral() {
        let shell = DeltaShell {
            radius: 2.0,
            surface_weight: 1.0 / (4.0 * PI * 4.0),
            speed: 2.0,
        };
        let v = shell.integrate_over_time(2.0, |t| t * 3.0);
        assert!((v - 3.0 / (4.0 * PI * 4.0) / 2.0).abs() < 1e-16);
    }
}
