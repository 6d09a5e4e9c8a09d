//! `evolve` and `kernel` tables.

use serde_json::{json, Map, Value};
use singlet_core::evolution::{
    amplitudes, branch, evolve_singlet, flip_probability, node_time, orientation_probability,
    DEFAULT_NODE_TOL,
};
use singlet_core::kernel::{clean_amplitude_factor, kernel_term_p, kernel_term_r};
use singlet_core::{KernelParams, Limit};

use crate::config::{Format, ParamSet, RunConfig, Space};
use crate::output::{emit, json_bytes, json_number, Cell, Table};
use crate::CliError;

pub const EVOLVE_COLUMNS: [&str; 10] = [
    "t",
    "re_a",
    "im_a",
    "re_b",
    "im_b",
    "p_singlet",
    "p_triplet",
    "p_flip",
    "p_orient",
    "branch",
];

fn evolve_row(params: &ParamSet, t: f64) -> Result<Vec<Cell>, CliError> {
    let p = params.field();
    let amp = amplitudes(&evolve_singlet(&p, t))?;
    Ok(vec![
        t.into(),
        amp.a.re.into(),
        amp.a.im.into(),
        amp.b.re.into(),
        amp.b.im.into(),
        amp.p_singlet().into(),
        amp.p_triplet().into(),
        flip_probability(&p, t).into(),
        orientation_probability(&p, t).into(),
        branch(&p, t, DEFAULT_NODE_TOL).as_str().into(),
    ])
}

/// Node times `(2k+1)πħ/(4|J|)` inside `[start, stop]`.
pub fn node_times_in(params: &ParamSet, start: f64, stop: f64) -> Result<Vec<f64>, CliError> {
    let p = params.field();
    if p.j == 0.0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut k = 0_u32;
    loop {
        let t = node_time(&p, k)?;
        if t > stop {
            break;
        }
        if t >= start {
            out.push(t);
        }
        k = k
            .checked_add(1)
            .ok_or_else(|| CliError::Config("grid spans too many nodes".into()))?;
    }
    Ok(out)
}

/// Grid rows and node rows.
pub fn evolve_tables(cfg: &RunConfig) -> Result<(Table, Table), CliError> {
    let mut grid = Table::new(EVOLVE_COLUMNS);
    for t in cfg.grid.points() {
        grid.push(evolve_row(&cfg.params, t)?);
    }
    let mut nodes = Table::new(EVOLVE_COLUMNS);
    for t in node_times_in(&cfg.params, cfg.grid.start, cfg.grid.stop)? {
        nodes.push(evolve_row(&cfg.params, t)?);
    }
    Ok((grid, nodes))
}

fn param_object(params: &ParamSet, keys: &[&str]) -> Value {
    let mut m = Map::new();
    for key in keys {
        let v = match *key {
            "J" => params.j,
            "hbar" => params.hbar,
            "Tc" => params.t_c,
            "vF" => params.v_f,
            "D" => params.d,
            "N0" => params.n0,
            "g" => params.g,
            _ => continue,
        };
        m.insert(key.to_string(), json_number(v));
    }
    Value::Object(m)
}

pub fn run_evolve(cfg: &RunConfig) -> Result<(), CliError> {
    let (grid, nodes) = evolve_tables(cfg)?;
    let body = match cfg.format {
        Format::Csv => {
            let mut buf = Vec::new();
            grid.write_csv_header(&mut buf)?;
            grid.write_csv_rows(&mut buf)?;
            nodes.write_csv_rows(&mut buf)?;
            buf
        }
        Format::Json => json_bytes(&json!({
            "schema_version": 1,
            "command": "evolve",
            "parameters": param_object(&cfg.params, &["J", "hbar"]),
            "columns": grid.columns,
            "rows": grid.json_rows(),
            "nodes": nodes.json_rows(),
        })),
    };
    emit(cfg.out.as_deref(), &body)?;
    Ok(())
}

pub fn kernel_columns(limit: Limit, space: Space, n_max: u32) -> Vec<String> {
    let mut cols = vec![match space {
        Space::R => "R".to_string(),
        Space::P => "p".to_string(),
    }];
    if limit == Limit::Clean && space == Space::R {
        cols.push("cos_factor".to_string());
    }
    cols.extend((0..=n_max).map(|n| format!("term_{n}")));
    cols.push("sum".to_string());
    cols
}

pub fn kernel_table(cfg: &RunConfig) -> Result<Table, CliError> {
    let params = cfg.params.kernel();
    let space = cfg.params.space;
    let mut table = Table::new(kernel_columns(
        params.limit(),
        space,
        cfg.params.cutoff.n_max,
    ));
    for x in cfg.grid.points() {
        let mut row: Vec<Cell> = vec![x.into()];
        if let (KernelParams::Clean(p), Space::R) = (&params, space) {
            row.push(clean_amplitude_factor(x, p).into());
        }
        let mut sum = 0.0;
        for n in cfg.params.cutoff.terms() {
            let term = match space {
                Space::R => kernel_term_r(x, n, &params)?,
                Space::P => kernel_term_p(x, n, &params)?,
            };
            sum += term;
            row.push(term.into());
        }
        row.push(sum.into());
        table.push(row);
    }
    Ok(table)
}

pub fn run_kernel(cfg: &RunConfig) -> Result<(), CliError> {
    let table = kernel_table(cfg)?;
    let limit = cfg.params.limit;
    let body = match cfg.format {
        Format::Csv => {
            let mut buf = Vec::new();
            table.write_csv_header(&mut buf)?;
            table.write_csv_rows(&mut buf)?;
            buf
        }
        Format::Json => {
            let keys: &[&str] = match limit {
                Limit::Clean => &["J", "hbar", "Tc", "vF", "N0", "g"],
                Limit::Dirty => &["J", "hbar", "Tc", "D", "N0", "g"],
            };
            json_bytes(&json!({
                "schema_version": 1,
                "command": "kernel",
                "limit": limit.as_str(),
                "space": match cfg.params.space { Space::R => "r", Space::P => "p" },
                "n_max": cfg.params.cutoff.n_max,
                "parameters": param_object(&cfg.params, keys),
                "columns": table.columns,
                "rows": table.json_rows(),
            }))
        }
    };
    emit(cfg.out.as_deref(), &body)?;
    Ok(())
}
