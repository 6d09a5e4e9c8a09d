//! The verification suites behind `--command verify`.
//!
//! Every suite runs on fixed reference parameters (`ħ = T_c = N(0) = |g| =
//! v_F = D = 1`); only the random seed and the quadrature tolerance come from
//! the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use singlet_core::evolution::{
    amplitude_routes, amplitudes, amplitudes_closed_form, evolve_singlet, hamiltonian, node_time,
    numerical_pair_generator, pair_evolution, pair_generators, period, singlet_amplitude,
};
use singlet_core::kernel::{
    analytic_bin_density, clean_kernel_term_r, dirty_kernel_term_r, kernel_term_p, laplace_term,
    mc_diffusion_correlator, radial_fourier_term,
};
use singlet_core::singlet::{generalized_singlet, rotate_two_spin, singlet, triplet_z0};
use singlet_core::spinor::haar_unitary;
use singlet_core::{
    CleanParams, Complex64, DirtyParams, FieldParams, KernelParams, McConfig, OrthonormalBasis,
    QuadratureConfig, RotationSpec,
};

use crate::output::json_number;

/// One tolerance comparison; passes iff `max_deviation ≤ tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            samples: 0,
            max_deviation: 0.0,
            tolerance,
        }
    }

    fn record(&mut self, deviation: f64) {
        self.samples += 1;
        // NaN must fail
        if deviation.is_nan() {
            self.max_deviation = f64::INFINITY;
        } else if deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
    }

    pub fn passed(&self) -> bool {
        self.samples > 0 && self.max_deviation <= self.tolerance
    }

    fn json(&self) -> Value {
        json!({
            "name": self.name,
            "samples": self.samples,
            "max_deviation": json_number(self.max_deviation),
            "tolerance": json_number(self.tolerance),
            "passed": self.passed(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: Vec<Check>,
    /// Set when a computation inside the suite failed outright.
    pub error: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    fn json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::json).collect::<Vec<_>>(),
        });
        if let Some(e) = &self.error {
            v["error"] = Value::String(e.clone());
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub rel_tol: f64,
}

fn suite<F>(name: &'static str, body: F) -> SuiteResult
where
    F: FnOnce(&mut Vec<Check>) -> singlet_core::Result<()>,
{
    let mut checks = Vec::new();
    let error = body(&mut checks).err().map(|e| e.to_string());
    SuiteResult {
        name,
        checks,
        error,
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// `count` log-spaced points on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|k| match k {
            0 => lo,
            k if k == count - 1 => hi,
            k => (a + (b - a) * k as f64 / (count - 1) as f64).exp(),
        })
        .collect()
}

fn unit_clean(j: f64) -> CleanParams {
    CleanParams {
        n0: 1.0,
        g_abs: 1.0,
        t_c: 1.0,
        v_f: 1.0,
        j,
        hbar: 1.0,
    }
}

fn unit_dirty(j: f64) -> DirtyParams {
    DirtyParams {
        n0: 1.0,
        g_abs: 1.0,
        t_c: 1.0,
        j,
        hbar: 1.0,
        d: 1.0,
    }
}

const FIELDS: [f64; 3] = [0.0, 0.5, 2.0];
const EVOLUTION_FIELDS: [f64; 3] = [0.3, 1.0, 2.7];

pub fn singlet_invariance(seed: u64) -> SuiteResult {
    suite("singlet_invariance", |checks| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rot = Check::new("haar_rotations", 1e-13);
        for _ in 0..1000 {
            let spec = RotationSpec::haar_random(&mut rng);
            rot.record(rotate_two_spin(&singlet(), &spec)?.max_abs_diff(&singlet()));
        }
        let mut basis = Check::new("random_bases", 1e-13);
        for _ in 0..1000 {
            let b = OrthonormalBasis::rotated_z(&haar_unitary(&mut rng))?;
            basis.record(generalized_singlet(&b)?.max_abs_diff(&singlet()));
        }
        checks.push(rot);
        checks.push(basis);
        Ok(())
    })
}

pub fn amplitude_routes_suite() -> SuiteResult {
    suite("amplitude_routes", |checks| {
        let mut closed = Check::new("projection_vs_closed_form", 1e-12);
        let mut routes = Check::new("four_routes_pairwise", 1e-12);
        for j in EVOLUTION_FIELDS {
            let p = FieldParams::new(j, 1.0)?;
            let stop = 2.0 * period(&p)?;
            for k in 0..1000 {
                let t = stop * k as f64 / 999.0;
                let amp = amplitudes(&evolve_singlet(&p, t))?;
                closed.record(amp.max_abs_diff(&amplitudes_closed_form(&p, t)));
                routes.record(amplitude_routes(&p, t).max_pairwise_deviation());
            }
        }
        checks.push(closed);
        checks.push(routes);
        Ok(())
    })
}

pub fn generators() -> SuiteResult {
    suite("generators", |checks| {
        let mut numeric = Check::new("finite_difference_vs_correlated", 1e-10);
        let mut annihilate = Check::new("independent_annihilates_singlet", 1e-12);
        let mut drive = Check::new("correlated_drives_triplet", 1e-12);
        let mut slope = Check::new("db_dt_at_zero", 1e-8);
        for (j, hbar) in [(0.3, 1.0), (1.0, 1.0), (2.7, 1.0), (-1.4, 0.6)] {
            let p = FieldParams::new(j, hbar)?;
            let gens = pair_generators(&hamiltonian(&p))?;
            numeric.record(numerical_pair_generator(&p).max_abs_diff(&gens.correlated));
            annihilate.record((gens.independent * singlet()).norm_sqr().sqrt());
            let target = triplet_z0().scale(Complex64::new(-2.0 * j, 0.0));
            drive.record((gens.correlated * singlet()).max_abs_diff(&target));
            let h = singlet_core::evolution::generator_step(&p);
            let plus = amplitudes(&evolve_singlet(&p, h))?;
            let minus = amplitudes(&evolve_singlet(&p, -h))?;
            let db = (plus.b - minus.b) / (2.0 * h);
            let da = (plus.a - minus.a) / (2.0 * h);
            slope.record(
                (db - Complex64::new(0.0, 2.0 * j / hbar))
                    .norm()
                    .max(da.norm()),
            );
        }
        checks.extend([numeric, annihilate, drive, slope]);
        Ok(())
    })
}

pub fn nodes_and_period() -> SuiteResult {
    suite("nodes_and_period", |checks| {
        let mut nodes = Check::new("amplitude_at_nodes", 1e-12);
        let mut periodic = Check::new("state_after_one_period", 1e-12);
        for j in EVOLUTION_FIELDS {
            let p = FieldParams::new(j, 1.0)?;
            for k in 0..8 {
                nodes.record(singlet_amplitude(&p, node_time(&p, k)?).abs());
                nodes.record(amplitudes(&evolve_singlet(&p, node_time(&p, k)?))?.a.norm());
            }
            let tp = period(&p)?;
            for k in 0..100 {
                let t = 0.0371 * k as f64;
                periodic.record(evolve_singlet(&p, t).phase_defect(&evolve_singlet(&p, t + tp)));
            }
        }
        checks.push(nodes);
        checks.push(periodic);
        Ok(())
    })
}

pub fn unitarity_conservation(seed: u64) -> SuiteResult {
    suite("unitarity_conservation", |checks| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut unitary = Check::new("pair_propagator_unitarity", 1e-12);
        let mut norm = Check::new("probability_conservation", 1e-12);
        for _ in 0..10_000 {
            let p = FieldParams::new(rng.random_range(-5.0..5.0), rng.random_range(0.2..3.0))?;
            let t = rng.random_range(-20.0..20.0);
            unitary.record(pair_evolution(&p, t).unitarity_defect());
            let amp = amplitudes(&evolve_singlet(&p, t))?;
            norm.record((amp.p_singlet() + amp.p_triplet() - 1.0).abs());
        }
        checks.push(unitary);
        checks.push(norm);
        Ok(())
    })
}

pub fn clean_shell_collapse(quad: &QuadratureConfig) -> SuiteResult {
    suite("clean_shell_collapse", |checks| {
        let mut c = Check::new("laplace_vs_closed_form", 1e-14);
        for j in FIELDS {
            let p = unit_clean(j);
            let kp = KernelParams::Clean(p);
            for r in log_grid(0.05, 5.0, 50) {
                for n in [0, 1, 2, 5] {
                    let exact = clean_kernel_term_r(r, n, &p)?;
                    c.record(rel_err(laplace_term(&kp, r, n, quad)?, exact));
                }
            }
        }
        checks.push(c);
        Ok(())
    })
}

pub fn dirty_laplace(quad: &QuadratureConfig) -> SuiteResult {
    suite("dirty_laplace", |checks| {
        let mut c = Check::new("laplace_vs_closed_form", 1e-8);
        for j in FIELDS {
            let p = unit_dirty(j);
            let kp = KernelParams::Dirty(p);
            for r in log_grid(0.05, 5.0, 30) {
                for n in [0, 1, 2] {
                    let exact = dirty_kernel_term_r(r, n, &p)?;
                    c.record(rel_err(laplace_term(&kp, r, n, quad)?, exact));
                }
            }
        }
        checks.push(c);
        Ok(())
    })
}

pub fn fourier_partnership(quad: &QuadratureConfig) -> SuiteResult {
    suite("fourier_partnership", |checks| {
        let mut clean = Check::new("clean_transform_vs_closed_form", 1e-6);
        let mut dirty = Check::new("dirty_transform_vs_closed_form", 1e-6);
        for j in FIELDS {
            for (params, check) in [
                (KernelParams::Clean(unit_clean(j)), &mut clean),
                (KernelParams::Dirty(unit_dirty(j)), &mut dirty),
            ] {
                for k in log_grid(0.05, 50.0, 20) {
                    for n in [0, 1, 2, 5] {
                        let exact = kernel_term_p(k, n, &params)?;
                        check.record(rel_err(radial_fourier_term(&params, n, k, quad)?, exact));
                    }
                }
            }
        }
        checks.push(clean);
        checks.push(dirty);
        Ok(())
    })
}

pub const MC_PATHS: usize = 100_000;

pub fn monte_carlo(seed: u64, quad: &QuadratureConfig) -> SuiteResult {
    suite("monte_carlo", |checks| {
        let (t, p) = (1.0, unit_dirty(0.0));
        let mc = McConfig {
            n_paths: MC_PATHS,
            n_steps: 4,
            seed,
            bin_edges: McConfig::uniform_bins(0.0, 5.5, 22),
        };
        let hist = mc_diffusion_correlator(t, &p, &mc)?;
        let mut outside = 0_usize;
        for b in &hist.bins {
            let exact = analytic_bin_density(b.lo, b.hi, p.d, t, quad)?;
            if (b.density - exact).abs() > 3.0 * b.std_error {
                outside += 1;
            }
        }
        let mut bins = Check::new("fraction_of_bins_beyond_3_sigma", 0.05);
        bins.samples = hist.bins.len();
        bins.max_deviation = outside as f64 / hist.bins.len() as f64;
        let mut msd = Check::new("msd_deviation_in_sigma", 3.0);
        msd.record((hist.mean_sq_displacement - 6.0 * p.d * t).abs() / hist.msd_std_error);
        checks.push(bins);
        checks.push(msd);
        Ok(())
    })
}

pub fn run_suites(opts: &VerifyOptions) -> Vec<SuiteResult> {
    let quad = QuadratureConfig {
        rel_tol: opts.rel_tol,
        abs_tol: 0.0,
        ..Default::default()
    };
    vec![
        singlet_invariance(opts.seed),
        amplitude_routes_suite(),
        generators(),
        nodes_and_period(),
        unitarity_conservation(opts.seed),
        clean_shell_collapse(&quad),
        dirty_laplace(&quad),
        fourier_partnership(&quad),
        monte_carlo(opts.seed, &quad),
    ]
}

pub fn report(opts: &VerifyOptions, suites: &[SuiteResult]) -> Value {
    json!({
        "schema_version": 1,
        "command": "verify",
        "seed": opts.seed,
        "rel_tol": json_number(opts.rel_tol),
        "passed": suites.iter().all(SuiteResult::passed),
        "suites": suites.iter().map(SuiteResult::json).collect::<Vec<_>>(),
    })
}
