// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Subcommand drivers producing one [`Table`] each.

use std::io::Write;
use std::path::Path;

use fano_core::energetics::{
    find_diag_balance, phase_sweep, population_sweep, work_trajectory, EfficiencyReport, SweepGrid,
};
use fano_core::kdq::{nonpositivity, KdqDistribution};
use fano_core::liouville::{build_generators, Propagator};
use fano_core::model::{pure_state, Level, Matrix3c};

use crate::config::{Command, RunConfig};
use crate::csv::Table;
use crate::CliError;

const PAIRS: [&str; 9] = ["aa", "ab", "ac", "ba", "bb", "bc", "ca", "cb", "cc"];

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.command {
        Command::Evolve => evolve(cfg),
        Command::Kdq => kdq_table(cfg),
        Command::Work => work(cfg),
        Command::Efficiency => efficiency(cfg),
        Command::FindBalance => balance(cfg),
        Command::SweepPhases => {
            let grid = phase_sweep(
                &cfg.params,
                cfg.state.populations(),
                cfg.fixed_phase,
                cfg.sweep_resolution,
                &cfg.grid,
            )?;
            Ok(sweep_table(&grid))
        }
        Command::SweepPopulations => {
            let grid = population_sweep(
                &cfg.params,
                cfg.state.populations()[Level::C.index()],
                &cfg.phi_b_list,
                cfg.population_points,
                &cfg.grid,
            )?;
            Ok(sweep_table(&grid))
        }
    }
}

/// Runs and writes the CSV to `out`, or to stdout when `None`.
pub fn execute(cfg: &RunConfig, out: Option<&Path>) -> Result<(), CliError> {
    let text = run(cfg)?.to_csv();
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn propagators(cfg: &RunConfig) -> Result<Vec<Propagator>, CliError> {
    let gen = build_generators(&cfg.params);
    Ok(Propagator::series(&gen, &cfg.grid.times(&cfg.params))?)
}

fn evolve(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = pure_state(&cfg.state)?;
    let mut table = Table::new([
        "t_dimless",
        "rho_aa",
        "rho_bb",
        "rho_cc",
        "re_rho_ab",
        "im_rho_ab",
        "re_rho_ac",
        "im_rho_ac",
        "re_rho_bc",
        "im_rho_bc",
    ]);
    for (tau, prop) in cfg.grid.dimless_points().into_iter().zip(propagators(cfg)?) {
        let r = prop.apply_hermitian(rho0.matrix())?;
        table.push(vec![
            tau,
            r[(0, 0)].re,
            r[(1, 1)].re,
            r[(2, 2)].re,
            r[(0, 1)].re,
            r[(0, 1)].im,
            r[(0, 2)].re,
            r[(0, 2)].im,
            r[(1, 2)].re,
            r[(1, 2)].im,
        ]);
    }
    Ok(table)
}

fn kdq_table(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = pure_state(&cfg.state)?;
    let mut header = vec!["t_dimless".to_string()];
    for block in ["q", "qdiag", "qcoh"] {
        for pair in PAIRS {
            header.push(format!("re_{block}_{pair}"));
            header.push(format!("im_{block}_{pair}"));
        }
    }
    header.push("aleph".into());
    let mut table = Table::new(header);

    let push_block = |row: &mut Vec<f64>, m: &Matrix3c| {
        for l in 0..3 {
            for j in 0..3 {
                row.push(m[(l, j)].re);
                row.push(m[(l, j)].im);
            }
        }
    };
    for (tau, prop) in cfg.grid.dimless_points().into_iter().zip(propagators(cfg)?) {
        let d = KdqDistribution::from_propagator(&prop, &rho0);
        let mut row = vec![tau];
        push_block(&mut row, &d.q);
        push_block(&mut row, &d.q_diag);
        push_block(&mut row, &d.q_coh);
        row.push(nonpositivity(&d));
        table.push(row);
    }
    Ok(table)
}

fn work(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = pure_state(&cfg.state)?;
    let w = work_trajectory(&cfg.params, &rho0, &cfg.grid)?;
    let eta = EfficiencyReport::from_work(&w, &cfg.params)
        .map(|r| r.eta)
        .unwrap_or_else(|_| vec![f64::NAN; w.w_total.len()]);
    let mut table = Table::new(["t_dimless", "w_total", "w_diag", "w_coh", "eta"]);
    for k in 0..w.t_dimless.len() {
        table.push(vec![
            w.t_dimless[k],
            w.w_total[k],
            w.w_diag[k],
            w.w_coh[k],
            eta[k],
        ]);
    }
    Ok(table)
}

fn efficiency(cfg: &RunConfig) -> Result<Table, CliError> {
    let rho0 = pure_state(&cfg.state)?;
    let r = fano_core::energetics::efficiency(&cfg.params, &rho0, &cfg.grid)?;
    let mut table = Table::new(["p", "eta_max", "t_tilde_dimless"]);
    table.push(vec![cfg.params.p, r.eta_max, r.t_tilde]);
    Ok(table)
}

fn balance(cfg: &RunConfig) -> Result<Table, CliError> {
    let b = find_diag_balance(&cfg.params, &cfg.grid)?;
    let mut table = Table::new(["nbar", "rho_cc_balance", "residual"]);
    table.push(vec![cfg.params.nbar, b.rho_cc, b.residual]);
    Ok(table)
}

/// Long format, axis1-major.
fn sweep_table(grid: &SweepGrid) -> Table {
    let mut table = Table::new([grid.axis1.name.as_str(), grid.axis2.name.as_str(), "value"]);
    for (i, &x) in grid.axis1.values.iter().enumerate() {
        for (j, &y) in grid.axis2.values.iter().enumerate() {
            table.push(vec![x, y, grid.get(i, j)]);
        }
    }
    table
}
