//! Command-line flags and their validation into a [`RunConfig`].

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use singlet_core::{CleanParams, DirtyParams, FieldParams, KernelParams, Limit, MatsubaraCutoff};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Evolve,
    Kernel,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitArg {
    Clean,
    Dirty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Coordinate space, grid over R.
    R,
    /// Momentum space, grid over p.
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// `start:stop:count`, evenly spaced and inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected start:stop:count, got '{s}'"));
        }
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number '{x}': {e}"))
        };
        let count = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad count '{}': {e}", parts[2]))?;
        Ok(Grid {
            start: num(parts[0])?,
            stop: num(parts[1])?,
            count,
        })
    }
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let n = self.count - 1;
        let span = self.stop - self.start;
        (0..self.count)
            .map(|k| {
                if k == n {
                    self.stop
                } else {
                    self.start + span * k as f64 / n as f64
                }
            })
            .collect()
    }

    fn validate(&self, positive: bool) -> Result<(), CliError> {
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(CliError::Config("grid bounds must be finite".into()));
        }
        if self.count < 2 {
            return Err(CliError::Config("grid count must be at least 2".into()));
        }
        if self.stop <= self.start {
            return Err(CliError::Config("grid stop must exceed start".into()));
        }
        if positive && self.start <= 0.0 {
            return Err(CliError::Config(
                "grid start must be positive for R and p grids".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "singlet",
    version,
    about = "Singlet spin dynamics in an exchange field and the resulting pair kernels"
)]
pub struct Args {
    #[arg(long, value_enum)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "clean")]
    pub limit: LimitArg,
    /// Kernel representation.
    #[arg(long, value_enum, default_value = "r")]
    pub space: Space,
    /// Exchange field J (energy).
    #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
    pub j: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long = "Tc", default_value_t = 1.0)]
    pub t_c: f64,
    /// Fermi velocity (clean limit).
    #[arg(long = "vF", default_value_t = 1.0)]
    pub v_f: f64,
    /// Diffusion coefficient (dirty limit).
    #[arg(long = "D", default_value_t = 1.0)]
    pub d: f64,
    /// Density of states at the Fermi level.
    #[arg(long = "N0", default_value_t = 1.0)]
    pub n0: f64,
    /// Pairing interaction |g|.
    #[arg(long = "g", default_value_t = 1.0)]
    pub g: f64,
    /// Last Matsubara index in kernel sums.
    #[arg(long, default_value_t = 5)]
    pub nmax: u32,
    /// Grid as start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<Grid>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Relative tolerance of the adaptive quadrature used by `verify`.
    #[arg(long = "rel-tol", default_value_t = 1e-9)]
    pub rel_tol: f64,
}

/// Validated physical parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub j: f64,
    pub hbar: f64,
    pub t_c: f64,
    pub v_f: f64,
    pub d: f64,
    pub n0: f64,
    pub g: f64,
    pub limit: Limit,
    pub space: Space,
    pub cutoff: MatsubaraCutoff,
}

impl ParamSet {
    pub fn field(&self) -> FieldParams {
        FieldParams {
            j: self.j,
            hbar: self.hbar,
        }
    }

    pub fn kernel(&self) -> KernelParams {
        match self.limit {
            Limit::Clean => KernelParams::Clean(CleanParams {
                n0: self.n0,
                g_abs: self.g,
                t_c: self.t_c,
                v_f: self.v_f,
                j: self.j,
                hbar: self.hbar,
            }),
            Limit::Dirty => KernelParams::Dirty(DirtyParams {
                n0: self.n0,
                g_abs: self.g,
                t_c: self.t_c,
                j: self.j,
                hbar: self.hbar,
                d: self.d,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub params: ParamSet,
    pub grid: Grid,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub rel_tol: f64,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let params = ParamSet {
            j: args.j,
            hbar: args.hbar,
            t_c: args.t_c,
            v_f: args.v_f,
            d: args.d,
            n0: args.n0,
            g: args.g,
            limit: match args.limit {
                LimitArg::Clean => Limit::Clean,
                LimitArg::Dirty => Limit::Dirty,
            },
            space: args.space,
            cutoff: MatsubaraCutoff::new(args.nmax),
        };
        let grid = match args.grid {
            Some(g) => g,
            None => default_grid(args.command, &params),
        };
        match args.command {
            Command::Evolve => {
                params.field().validate()?;
                grid.validate(false)?;
            }
            Command::Kernel => {
                params.kernel().validate()?;
                grid.validate(true)?;
            }
            Command::Verify => {}
        }
        if !(args.rel_tol > 0.0 && args.rel_tol.is_finite()) {
            return Err(CliError::Config("--rel-tol must be positive".into()));
        }
        Ok(RunConfig {
            command: args.command,
            params,
            grid,
            format: args.format,
            out: args.out,
            seed: args.seed,
            rel_tol: args.rel_tol,
        })
    }
}

fn default_grid(command: Command, params: &ParamSet) -> Grid {
    match (command, params.space) {
        (Command::Evolve, _) => {
            let stop = if params.j != 0.0 && params.j.is_finite() && params.hbar > 0.0 {
                std::f64::consts::PI * params.hbar / params.j.abs()
            } else {
                1.0
            };
            Grid {
                start: 0.0,
                stop,
                count: 101,
            }
        }
        (_, Space::R) => Grid {
            start: 0.05,
            stop: 5.0,
            count: 100,
        },
        (_, Space::P) => Grid {
            start: 0.05,
            stop: 50.0,
            count: 100,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: Grid = "0:3.5:8".parse().unwrap();
        assert_eq!(
            g,
            Grid {
                start: 0.0,
                stop: 3.5,
                count: 8
            }
        );
        assert_eq!(g.points().len(), 8);
        assert_eq!(*g.points().last().unwrap(), 3.5);
        assert!("1:2".parse::<Grid>().is_err());
        assert!("a:2:3".parse::<Grid>().is_err());
        assert!("1:2:-3".parse::<Grid>().is_err());
    }

    #[test]
    fn grid_points_hit_quarter_period() {
        let g = Grid {
            start: 0.0,
            stop: std::f64::consts::PI,
            count: 9,
        };
        assert_eq!(g.points()[2], std::f64::consts::FRAC_PI_4);
    }

    #[test]
    fn grid_validation() {
        let g = Grid {
            start: 0.0,
            stop: 1.0,
            count: 5,
        };
        assert!(g.validate(false).is_ok());
        assert!(g.validate(true).is_err());
        let g = Grid { count: 1, ..g };
        assert!(g.validate(false).is_err());
        let g = Grid {
            start: 2.0,
            stop: 1.0,
            count: 5,
        };
        assert!(g.validate(false).is_err());
    }

    #[test]
    fn negative_field_parses() {
        let args = Args::try_parse_from(["singlet", "--command", "evolve", "--J", "-0.5"]).unwrap();
        assert_eq!(args.j, -0.5);
        let cfg = RunConfig::from_args(args).unwrap();
        assert!((cfg.grid.stop - 2.0 * std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn kernel_rejects_negative_field() {
        let args = Args::try_parse_from(["singlet", "--command", "kernel", "--J", "-0.5"]).unwrap();
        assert!(RunConfig::from_args(args).is_err());
    }
}
