// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration: flat `key = value` files, presets and overrides.
//!
//! Settings are applied in order (preset, then config file, then `--set`
//! overrides) and validated once at the end. Unknown keys are rejected.
//! Amplitudes may be given either as populations `rho_*` or as `alpha_*`;
//! switching representation discards the other one. Angles accept plain
//! numbers or multiples of `pi` such as `pi/2`, `3pi/4`, `-0.5*pi`.

use std::f64::consts::PI;

use clap::ValueEnum;
use fano_core::model::{InitialState, Level, SystemParams, TimeGrid};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Evolve,
    Kdq,
    Work,
    SweepPhases,
    SweepPopulations,
    Efficiency,
    FindBalance,
}

pub const PRESETS: [&str; 6] = [
    "certification-p-1",
    "certification-p-0.75",
    "certification-p-0.5",
    "certification-p-0.25",
    "optimal-extraction",
    "weak-pumping-balance",
];

pub const KEYS: [&str; 22] = [
    "gamma_a",
    "gamma_b",
    "delta",
    "d_center",
    "nbar",
    "p",
    "rho_aa",
    "rho_bb",
    "rho_cc",
    "alpha_a",
    "alpha_b",
    "alpha_c",
    "phi_a",
    "phi_b",
    "phi_c",
    "t_max",
    "samples",
    "fixed_phase",
    "sweep_resolution",
    "phi_b_list",
    "population_points",
    "gamma",
];

const GAMMA: f64 = 3.0091e6;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Amplitudes {
    Populations([Option<f64>; 3]),
    Alpha([Option<f64>; 3]),
}

/// Unvalidated settings; see [`RunConfig::resolve`].
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    gamma_a: f64,
    gamma_b: f64,
    delta: f64,
    d_center: f64,
    nbar: f64,
    p: f64,
    amplitudes: Amplitudes,
    phi: [f64; 3],
    t_max: f64,
    samples: usize,
    fixed_phase: Level,
    sweep_resolution: usize,
    phi_b_list: Vec<f64>,
    population_points: usize,
}

impl Default for Settings {
    /// The certification bundle with p = −1.
    fn default() -> Self {
        let grid = TimeGrid::default();
        Settings {
            gamma_a: GAMMA,
            gamma_b: GAMMA,
            delta: 0.1 * GAMMA,
            d_center: 0.785e9,
            nbar: 3.0,
            p: -1.0,
            amplitudes: Amplitudes::Populations([Some(0.3), Some(0.3), Some(0.4)]),
            phi: [0.0, PI, 0.0],
            t_max: grid.t_max,
            samples: grid.samples,
            fixed_phase: Level::A,
            sweep_resolution: 64,
            phi_b_list: vec![0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI],
            population_points: 61,
        }
    }
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_number(key: &str, value: &str) -> Result<f64, CliError> {
    value
        .trim()
        .parse::<f64>()
        .map_err(|_| config_err(format!("{key}: expected a number, got {value:?}")))
}

fn parse_count(key: &str, value: &str) -> Result<usize, CliError> {
    value.trim().parse::<usize>().map_err(|_| {
        config_err(format!(
            "{key}: expected a non-negative integer, got {value:?}"
        ))
    })
}

/// `1.2`, `pi`, `-pi`, `pi/2`, `3pi/4`, `3*pi/4`, `0.5*pi`.
pub fn parse_angle(value: &str) -> Result<f64, CliError> {
    let s: String = value.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || config_err(format!("cannot parse angle {value:?}"));
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d.parse::<f64>().map_err(|_| bad())?),
        None => (s.as_str(), 1.0),
    };
    let coef = num.strip_suffix("pi").ok_or_else(bad)?;
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    if den == 0.0 {
        return Err(bad());
    }
    Ok(coef * PI / den)
}

impl Settings {
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let key = key.trim();
        let level_of = |suffix: &str| Level::from_label(suffix).map(Level::index);
        match key {
            "gamma_a" => self.gamma_a = parse_number(key, value)?,
            "gamma_b" => self.gamma_b = parse_number(key, value)?,
            "gamma" => {
                let g = parse_number(key, value)?;
                self.gamma_a = g;
                self.gamma_b = g;
            }
            "delta" => self.delta = parse_number(key, value)?,
            "d_center" => self.d_center = parse_number(key, value)?,
            "nbar" => self.nbar = parse_number(key, value)?,
            "p" => self.p = parse_number(key, value)?,
            "rho_aa" | "rho_bb" | "rho_cc" => {
                let k = level_of(&key[4..5]).expect("known key");
                let v = parse_number(key, value)?;
                match &mut self.amplitudes {
                    Amplitudes::Populations(pops) => pops[k] = Some(v),
                    other => {
                        let mut pops = [None; 3];
                        pops[k] = Some(v);
                        *other = Amplitudes::Populations(pops);
                    }
                }
            }
            "alpha_a" | "alpha_b" | "alpha_c" => {
                let k = level_of(&key[6..7]).expect("known key");
                let v = parse_number(key, value)?;
                match &mut self.amplitudes {
                    Amplitudes::Alpha(alpha) => alpha[k] = Some(v),
                    other => {
                        let mut alpha = [None; 3];
                        alpha[k] = Some(v);
                        *other = Amplitudes::Alpha(alpha);
                    }
                }
            }
            "phi_a" | "phi_b" | "phi_c" => {
                let k = level_of(&key[4..5]).expect("known key");
                self.phi[k] = parse_angle(value)?;
            }
            "t_max" => self.t_max = parse_number(key, value)?,
            "samples" => self.samples = parse_count(key, value)?,
            "fixed_phase" => {
                let v = value.trim();
                let v = v.strip_prefix("phi_").unwrap_or(v);
                self.fixed_phase = Level::from_label(v).ok_or_else(|| {
                    config_err(format!("fixed_phase: expected a, b or c, got {value:?}"))
                })?;
            }
            "sweep_resolution" => self.sweep_resolution = parse_count(key, value)?,
            "population_points" => self.population_points = parse_count(key, value)?,
            "phi_b_list" => {
                self.phi_b_list = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(parse_angle)
                    .collect::<Result<_, _>>()?;
            }
            _ => {
                return Err(config_err(format!(
                    "unknown key {key:?}; known keys: {}",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_err(format!("line {}: expected key = value", n + 1)))?;
            self.apply(key, value)
                .map_err(|e| config_err(format!("line {}: {e}", n + 1)))?;
        }
        Ok(())
    }

    /// `key=value` as given on the command line.
    pub fn apply_override(&mut self, assignment: &str) -> Result<(), CliError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| config_err(format!("--set expects key=value, got {assignment:?}")))?;
        self.apply(key, value)
    }
}

/// Settings of a named parameter bundle.
pub fn preset(name: &str) -> Result<Settings, CliError> {
    let mut s = Settings::default();
    match name {
        "certification-p-1" => s.p = -1.0,
        "certification-p-0.75" => s.p = -0.75,
        "certification-p-0.5" => s.p = -0.5,
        "certification-p-0.25" => s.p = -0.25,
        "optimal-extraction" => {
            s.p = -1.0;
            s.phi = [0.0, PI, 0.0];
        }
        "weak-pumping-balance" => {
            s.nbar = 0.5;
            s.p = -0.5;
            s.amplitudes = Amplitudes::Populations([Some(0.2), Some(0.2), Some(0.6)]);
        }
        _ => {
            return Err(config_err(format!(
                "unknown preset {name:?}; known presets: {}",
                PRESETS.join(", ")
            )))
        }
    }
    Ok(s)
}

/// Fully validated run description.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub params: SystemParams,
    pub state: InitialState,
    pub grid: TimeGrid,
    pub fixed_phase: Level,
    pub sweep_resolution: usize,
    pub phi_b_list: Vec<f64>,
    pub population_points: usize,
}

impl RunConfig {
    pub fn resolve(command: Command, s: &Settings) -> Result<RunConfig, CliError> {
        let as_config = |e: fano_core::FanoError| config_err(e.to_string());
        let params = SystemParams::new(s.gamma_a, s.gamma_b, s.delta, s.d_center, s.nbar, s.p)
            .map_err(as_config)?;
        let names = ["a", "b", "c"];
        let complete = |vals: &[Option<f64>; 3], prefix: &str, dup: bool| {
            let mut out = [0.0; 3];
            for k in 0..3 {
                let label = if dup {
                    format!("{prefix}{0}{0}", names[k])
                } else {
                    format!("{prefix}{}", names[k])
                };
                out[k] = vals[k].ok_or_else(|| config_err(format!("{label} is not set")))?;
            }
            Ok::<_, CliError>(out)
        };
        let state = match &s.amplitudes {
            Amplitudes::Populations(p) => {
                InitialState::from_populations(complete(p, "rho_", true)?, s.phi)
            }
            Amplitudes::Alpha(a) => InitialState::new(complete(a, "alpha_", false)?, s.phi),
        }
        .map_err(as_config)?;
        let grid = TimeGrid::new(s.t_max, s.samples).map_err(as_config)?;
        if s.sweep_resolution == 0 {
            return Err(config_err("sweep_resolution must be positive"));
        }
        if s.population_points < 2 {
            return Err(config_err("population_points must be at least 2"));
        }
        if s.phi_b_list.is_empty() {
            return Err(config_err("phi_b_list is empty"));
        }
        Ok(RunConfig {
            command,
            params,
            state,
            grid,
            fixed_phase: s.fixed_phase,
            sweep_resolution: s.sweep_resolution,
            phi_b_list: s.phi_b_list.clone(),
            population_points: s.population_points,
        })
    }
}
