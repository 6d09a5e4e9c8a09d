//! Brownian-motion sampling of the diffusion propagator.
//!
//! Every path draws from its own ChaCha stream (the path index), so the
//! histogram does not depend on how paths are spread over threads.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use crate::error::{require, Error, Result};
use crate::quadrature::{integrate, QuadratureConfig};

use super::DirtyParams;

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub n_paths: usize,
    pub n_steps: usize,
    pub seed: u64,
    /// Radial bin edges, strictly increasing, non-negative.
    pub bin_edges: Vec<f64>,
}

impl McConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_paths == 0 {
            return Err(Error::InvalidMcConfig("n_paths must be at least 1"));
        }
        if self.n_steps == 0 {
            return Err(Error::InvalidMcConfig("n_steps must be at least 1"));
        }
        if self.bin_edges.len() < 2 {
            return Err(Error::InvalidMcConfig("need at least two bin edges"));
        }
        if !self.bin_edges.iter().all(|e| e.is_finite()) || self.bin_edges[0] < 0.0 {
            return Err(Error::InvalidMcConfig(
                "bin edges must be finite and non-negative",
            ));
        }
        if self.bin_edges.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidMcConfig(
                "bin edges must be strictly increasing",
            ));
        }
        Ok(())
    }

    /// `count` equal-width bins on `[lo, hi]`.
    pub fn uniform_bins(lo: f64, hi: f64, count: usize) -> Vec<f64> {
        crate::quadrature::uniform_breakpoints(lo, hi, count)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    /// Radial probability density averaged over the bin.
    pub density: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionHistogram {
    pub bins: Vec<HistogramBin>,
    pub n_paths: usize,
    /// Paths that ended outside all bins.
    pub outside: u64,
    pub mean_sq_displacement: f64,
    pub msd_std_error: f64,
}

/// `4πR²·(4πDt)^{−3/2}·e^{−R²/4Dt}`.
pub fn radial_density(r: f64, d: f64, t: f64) -> f64 {
    4.0 * PI * r * r * super::correlator::diffusion_density(r, t, d)
}

/// Average of [`radial_density`] over `[lo, hi]`.
pub fn analytic_bin_density(
    lo: f64,
    hi: f64,
    d: f64,
    t: f64,
    quad: &QuadratureConfig,
) -> Result<f64> {
    require(hi > lo, "bin", "hi > lo", hi - lo)?;
    let est = integrate(
        |r| radial_density(r, d, t),
        &[lo, 0.5 * (lo + hi), hi],
        quad,
    )?;
    Ok(est.value / (hi - lo))
}

/// Squared end-to-end displacement of path `index`.
fn path_sq_displacement(seed: u64, index: u64, n_steps: usize, step: &Normal<f64>) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut pos = [0.0_f64; 3];
    for _ in 0..n_steps {
        for x in pos.iter_mut() {
            *x += step.sample(&mut rng);
        }
    }
    pos.iter().map(|x| x * x).sum()
}

/// Samples `n_paths` Gaussian random walks of `n_steps` increments (variance
/// `2D·t/n_steps` per coordinate each) and bins the final radius.
pub fn mc_diffusion_correlator(
    t: f64,
    params: &DirtyParams,
    mc: &McConfig,
) -> Result<DiffusionHistogram> {
    params.validate()?;
    mc.validate()?;
    require(t > 0.0 && t.is_finite(), "t", "positive", t)?;
    let sigma = (2.0 * params.d * t / mc.n_steps as f64).sqrt();
    let step = Normal::new(0.0, sigma).map_err(|_| Error::InvalidParameter {
        name: "step width",
        requirement: "finite and positive",
        value: sigma,
    })?;

    let sq: Vec<f64> = (0..mc.n_paths as u64)
        .into_par_iter()
        .map(|i| path_sq_displacement(mc.seed, i, mc.n_steps, &step))
        .collect();

    let edges = &mc.bin_edges;
    let mut counts = vec![0_u64; edges.len() - 1];
    let mut outside = 0_u64;
    for &s in &sq {
        let r = s.sqrt();
        // index of the first edge strictly greater than r
        let k = edges.partition_point(|e| *e <= r);
        if k == 0 || k == edges.len() {
            outside += 1;
        } else {
            counts[k - 1] += 1;
        }
    }

    let n = mc.n_paths as f64;
    let bins = counts
        .iter()
        .enumerate()
        .map(|(k, &count)| {
            let (lo, hi) = (edges[k], edges[k + 1]);
            let width = hi - lo;
            let frac = count as f64 / n;
            HistogramBin {
                lo,
                hi,
                count,
                density: frac / width,
                std_error: (frac * (1.0 - frac) / n).sqrt() / width,
            }
        })
        .collect();

    let msd = sq.iter().sum::<f64>() / n;
    let var = if mc.n_paths > 1 {
        sq.iter().map(|s| (s - msd).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };

    Ok(DiffusionHistogram {
        bins,
        n_paths: mc.n_paths,
        outside,
        mean_sq_displacement: msd,
        msd_std_error: (var / n).sqrt(),
    })
}
