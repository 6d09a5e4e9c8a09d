//! Globally adaptive Gauss–Kronrod (10/21-point) integration on finite
//! intervals.
//!
//! Infinite ranges are handled by the callers: every integrand in this crate
//! carries an exponential envelope, so the range is cut where the envelope
//! drops below [`QuadratureConfig::envelope_cut`] relative to its peak.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{require, Error, Result};

/// Tolerances for adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Relative envelope level at which semi-infinite ranges are truncated.
    pub envelope_cut: f64,
    pub max_intervals: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            envelope_cut: 1e-16,
            max_intervals: 4000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        require(self.rel_tol > 0.0, "rel_tol", "positive", self.rel_tol)?;
        require(self.abs_tol >= 0.0, "abs_tol", "non-negative", self.abs_tol)?;
        require(
            self.envelope_cut > 0.0 && self.envelope_cut < 1.0,
            "envelope_cut",
            "in (0, 1)",
            self.envelope_cut,
        )?;
        require(
            self.max_intervals >= 1,
            "max_intervals",
            "at least 1",
            self.max_intervals as f64,
        )
    }

    /// `−ln(envelope_cut)`: number of e-folds an exponential envelope must
    /// decay before the tail is dropped.
    pub fn cut_efolds(&self) -> f64 {
        -self.envelope_cut.ln()
    }
}

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the nodes XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One 21-point Kronrod evaluation with the QUADPACK error heuristic.
fn gauss_kronrod_21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv = [(0.0, 0.0); 10];
    for (k, x) in XGK.iter().take(10).enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[k] = (f1, f2);
        kronrod += WGK[k] * (f1 + f2);
        res_abs += WGK[k] * (f1.abs() + f2.abs());
        if k % 2 == 1 {
            gauss += WG[k / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for (k, (f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[k] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(floor);
    }
    Panel { a, b, value, error }
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`, starting from
/// the panels delimited by `breakpoints` (which must be strictly increasing,
/// at least two entries).
///
/// Stops when the summed error estimate is below
/// `max(abs_tol, rel_tol·|value|)`; fails with
/// [`Error::QuadratureNonConvergence`] when `max_intervals` is exhausted.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    if breakpoints.len() < 2
        || breakpoints
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater))
    {
        return Err(Error::InvalidParameter {
            name: "breakpoints",
            requirement: "at least two, strictly increasing and finite",
            value: breakpoints.len() as f64,
        });
    }
    let mut heap: BinaryHeap<Panel> = breakpoints
        .windows(2)
        .map(|w| gauss_kronrod_21(&f, w[0], w[1]))
        .collect();

    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::QuadratureNonConvergence {
                estimate: value,
                error_estimate: error,
                intervals: heap.len(),
            });
        }
        if error <= cfg.abs_tol.max(cfg.rel_tol * value.abs()) {
            return Ok(Estimate {
                value,
                error,
                intervals: heap.len(),
            });
        }
        let worst = match heap.peek() {
            Some(p) => *p,
            None => unreachable!("heap holds at least one panel"),
        };
        let mid = 0.5 * (worst.a + worst.b);
        let too_narrow = !(mid > worst.a && mid < worst.b);
        if heap.len() >= cfg.max_intervals || too_narrow {
            return Err(Error::QuadratureNonConvergence {
                estimate: value,
                error_estimate: error,
                intervals: heap.len(),
            });
        }
        heap.pop();
        heap.push(gauss_kronrod_21(&f, worst.a, mid));
        heap.push(gauss_kronrod_21(&f, mid, worst.b));
    }
}

/// `n + 1` equally spaced breakpoints on `[a, b]`.
pub fn uniform_breakpoints(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    let mut pts: Vec<f64> = (0..=n).map(|k| a + (b - a) * k as f64 / n as f64).collect();
    pts[n] = b;
    pts
}
