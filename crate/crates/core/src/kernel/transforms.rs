//! Numerical routes to the kernel terms: the time integral over classical
//! trajectories, and the radial Fourier transform between coordinate and
//! momentum space.

use std::cell::Cell;
use std::f64::consts::PI;

use crate::error::{require, Error, Result};
use crate::quadrature::{integrate, uniform_breakpoints, Estimate, QuadratureConfig};

use super::correlator::{diffusion_density, economical_with_check};
use super::{
    clean_term_r_unchecked, dirty_term_r_unchecked, matsubara_freq, pair_correlation_f,
    KernelParams, PairCorrelation,
};

const INITIAL_PANELS: usize = 16;

/// Multiplies an integral (or the partial result carried by a
/// non-convergence error) by `factor`.
fn scaled(result: Result<Estimate>, factor: f64) -> Result<Estimate> {
    match result {
        Ok(e) => Ok(Estimate {
            value: factor * e.value,
            error: factor.abs() * e.error,
            intervals: e.intervals,
        }),
        Err(Error::QuadratureNonConvergence {
            estimate,
            error_estimate,
            intervals,
        }) => Err(Error::QuadratureNonConvergence {
            estimate: factor * estimate,
            error_estimate: factor.abs() * error_estimate,
            intervals,
        }),
        Err(e) => Err(e),
    }
}

/// `(2πN(0)|g|T_c/ħ)·∫₀^∞ dt e^{−2ω_n t/ħ}·f(R, t)`.
pub fn laplace_term(params: &KernelParams, r: f64, n: u32, quad: &QuadratureConfig) -> Result<f64> {
    laplace_term_estimate(params, r, n, quad).map(|e| e.value)
}

/// As [`laplace_term`], with the quadrature error estimate. The clean limit
/// is exact and reports zero error and zero intervals.
pub fn laplace_term_estimate(
    params: &KernelParams,
    r: f64,
    n: u32,
    quad: &QuadratureConfig,
) -> Result<Estimate> {
    params.validate()?;
    quad.validate()?;
    require(r > 0.0 && r.is_finite(), "R", "positive", r)?;
    let hbar = params.hbar();
    let omega = matsubara_freq(n, params.t_c());
    let prefactor = 2.0 * PI * params.coupling() / hbar;
    let damping = |t: f64| (-2.0 * omega * t / hbar).exp();

    match params {
        KernelParams::Clean(p) => {
            let t_star = r / p.v_f;
            let (shell, factor) = match pair_correlation_f(params, r, t_star)? {
                PairCorrelation::Shell { shell, factor } => (shell, factor),
                PairCorrelation::Density(_) => unreachable!("clean limit propagates on a shell"),
            };
            let value = prefactor * shell.integrate_over_time(r, |t| factor * damping(t));
            Ok(Estimate {
                value,
                error: 0.0,
                intervals: 0,
            })
        }
        KernelParams::Dirty(p) => {
            let field = p.field();
            let c = r * r / (4.0 * p.d);
            let alpha = 2.0 * omega / hbar;
            // t = e^u; log of t·(envelope of f) without the oscillating factor
            let log_env = |u: f64| -0.5 * u - c * (-u).exp() - alpha * u.exp();
            let y_peak = 2.0 * c / (0.5 + (0.25 + 4.0 * alpha * c).sqrt());
            let u_peak = y_peak.ln();
            let level = log_env(u_peak) - quad.cut_efolds();
            let u_lo = crossing(&log_env, u_peak, -1.0, level);
            let u_hi = crossing(&log_env, u_peak, 1.0, level);

            let failure: Cell<Option<Error>> = Cell::new(None);
            let integrand = |u: f64| {
                let t = u.exp();
                let x = diffusion_density(r, t, p.d);
                match economical_with_check(x, &field, t) {
                    Ok(f) => t * damping(t) * f,
                    Err(e) => {
                        failure.set(Some(e));
                        0.0
                    }
                }
            };
            let est = integrate(
                integrand,
                &uniform_breakpoints(u_lo, u_hi, INITIAL_PANELS),
                quad,
            );
            if let Some(e) = failure.take() {
                return Err(e);
            }
            scaled(est, prefactor)
        }
    }
}

/// Point where a concave `g` falls to `level`, searching from its maximum
/// at `start` in direction `dir`.
fn crossing<G: Fn(f64) -> f64>(g: &G, start: f64, dir: f64, level: f64) -> f64 {
    let mut inner = start;
    let mut step = 1.0;
    let mut outer = start + dir * step;
    while g(outer) > level {
        inner = outer;
        step *= 2.0;
        outer = start + dir * step;
    }
    for _ in 0..100 {
        let mid = 0.5 * (inner + outer);
        if mid == inner || mid == outer {
            break;
        }
        if g(mid) > level {
            inner = mid;
        } else {
            outer = mid;
        }
    }
    outer
}

/// `K(p) = (4πħ/p)·∫₀^∞ dR R·sin(pR/ħ)·K_n(R)` of the coordinate term.
pub fn radial_fourier_term(
    params: &KernelParams,
    n: u32,
    momentum: f64,
    quad: &QuadratureConfig,
) -> Result<f64> {
    radial_fourier_term_estimate(params, n, momentum, quad).map(|e| e.value)
}

pub fn radial_fourier_term_estimate(
    params: &KernelParams,
    n: u32,
    momentum: f64,
    quad: &QuadratureConfig,
) -> Result<Estimate> {
    params.validate()?;
    quad.validate()?;
    require(
        momentum > 0.0 && momentum.is_finite(),
        "p",
        "positive",
        momentum,
    )?;
    let hbar = params.hbar();
    let k = momentum / hbar;
    let omega = matsubara_freq(n, params.t_c());
    // decay rate of the envelope and the spatial frequency of the field factor
    let (decay, field_wave) = match params {
        KernelParams::Clean(p) => (2.0 * omega / (p.hbar * p.v_f), 2.0 * p.j / (p.hbar * p.v_f)),
        KernelParams::Dirty(p) => {
            let rho = omega.hypot(p.j);
            let scale = (p.hbar * p.d).sqrt();
            (
                (rho + omega).sqrt() / scale,
                (p.j * p.j / (rho + omega)).sqrt() / scale,
            )
        }
    };
    let r_cut = quad.cut_efolds() / decay;
    let half_waves = (r_cut * (k + field_wave) / PI).ceil() as usize;
    let panels = half_waves.max(INITIAL_PANELS);

    let breakpoints = uniform_breakpoints(0.0, r_cut, panels);
    let est = match params {
        KernelParams::Clean(p) => integrate(
            |r: f64| r * (k * r).sin() * clean_term_r_unchecked(r, n, p),
            &breakpoints,
            quad,
        ),
        KernelParams::Dirty(p) => integrate(
            |r: f64| r * (k * r).sin() * dirty_term_r_unchecked(r, n, p),
            &breakpoints,
            quad,
        ),
    };
    scaled(est, 4.0 * PI * hbar / momentum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{
        clean_kernel_term_p, clean_kernel_term_r, dirty_kernel_term_p, dirty_kernel_term_r,
        CleanParams, DirtyParams,
    };

    fn quad() -> QuadratureConfig {
        QuadratureConfig {
            abs_tol: 0.0,
            ..Default::default()
        }
    }

    fn clean(j: f64) -> CleanParams {
        CleanParams {
            n0: 1.0,
            g_abs: 1.0,
            t_c: 1.0,
            v_f: 1.0,
            j,
            hbar: 1.0,
        }
    }

    fn dirty(j: f64) -> DirtyParams {
        DirtyParams {
            n0: 1.0,
            g_abs: 1.0,
            t_c: 1.0,
            j,
            hbar: 1.0,
            d: 1.0,
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn clean_shell_collapse_is_exact() {
        let p = CleanParams {
            v_f: 1.7,
            j: 0.9,
            hbar: 0.8,
            ..clean(0.0)
        };
        for r in [0.01, 0.2, 1.0, 3.3] {
            for n in [0, 1, 2, 5] {
                let a = laplace_term(&p.into(), r, n, &quad()).unwrap();
                let b = clean_kernel_term_r(r, n, &p).unwrap();
                assert!(rel(a, b) < 1e-14, "R={r} n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn dirty_laplace_without_field() {
        let p = DirtyParams {
            d: 0.6,
            ..dirty(0.0)
        };
        for r in [0.05, 0.5, 2.0] {
            for n in 0..3 {
                let a = laplace_term(&p.into(), r, n, &quad()).unwrap();
                let w = matsubara_freq(n, p.t_c);
                let b = 1.0 / (r * p.d) * (-r * (2.0 * w / p.d).sqrt()).exp();
                assert!(rel(a, b) < 1e-8, "R={r} n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn laplace_identity_by_quadrature() {
        // ∫₀^∞ t^{−3/2} e^{−at−b/t} dt = √(π/b)·e^{−2√(ab)}
        let (a, b) = (2.0_f64, 0.3_f64);
        let est = integrate(
            |u: f64| {
                let t = u.exp();
                t.powf(-0.5) * (-a * t - b / t).exp()
            },
            &uniform_breakpoints(-10.0, 5.0, 16),
            &quad(),
        )
        .unwrap();
        let exact = (PI / b).sqrt() * (-2.0 * (a * b).sqrt()).exp();
        assert!(rel(est.value, exact) < 1e-10);
    }

    #[test]
    fn dirty_laplace_with_field() {
        let p = dirty(1.3);
        for r in [0.07, 0.6, 1.9, 4.0] {
            for n in 0..3 {
                let a = laplace_term(&p.into(), r, n, &quad()).unwrap();
                let b = dirty_kernel_term_r(r, n, &p).unwrap();
                assert!(rel(a, b) < 1e-8, "R={r} n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn clean_fourier_pairs() {
        for j in [0.0, 0.5, 2.0] {
            let p = clean(j);
            for k in [0.05, 1.0, 7.0, 50.0] {
                for n in [0, 1, 5] {
                    let a = radial_fourier_term(&p.into(), n, k, &quad()).unwrap();
                    let b = clean_kernel_term_p(k, n, &p).unwrap();
                    assert!(rel(a, b) < 1e-6, "J={j} p={k} n={n}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn dirty_fourier_pairs() {
        for j in [0.0, 1.0, 2.0] {
            let p = dirty(j);
            for k in [0.05, 1.0, 7.0, 50.0] {
                for n in [0, 2] {
                    let a = radial_fourier_term(&p.into(), n, k, &quad()).unwrap();
                    let b = dirty_kernel_term_p(k, n, &p).unwrap();
                    assert!(rel(a, b) < 1e-6, "J={j} p={k} n={n}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn impossible_tolerance_fails_with_estimate() {
        let cfg = QuadratureConfig {
            rel_tol: 1e-20,
            max_intervals: 200,
            ..quad()
        };
        match radial_fourier_term(&clean(0.5).into(), 0, 1.0, &cfg) {
            Err(Error::QuadratureNonConvergence { estimate, .. }) => {
                let exact = clean_kernel_term_p(1.0, 0, &clean(0.5)).unwrap();
                assert!(rel(estimate, exact) < 1e-6);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
