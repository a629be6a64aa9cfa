// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Extractable work, efficiency and the initial-state optimisation sweeps.
//!
//! Work is reported as −⟨ΔE⟩/ω_a. Times are carried both in seconds and as
//! the dimensionless τ = γ̄·t used on every output axis.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::error::{FanoError, Result};
use crate::kdq::{average_energy_change, KdqDistribution};
use crate::liouville::{build_generators, Propagator};
use crate::model::{
    pure_state, split_diag_coh, to_xz, DensityOperator, InitialState, Level, SystemParams,
    TimeGrid, XVector,
};

/// Largest |⟨ΔE⟩_diag|/ω_a accepted as a balance.
pub const BALANCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct WorkTrajectory {
    pub t_dimless: Vec<f64>,
    /// Physical times (s).
    pub times: Vec<f64>,
    pub w_total: Vec<f64>,
    pub w_diag: Vec<f64>,
    pub w_coh: Vec<f64>,
}

/// −⟨ΔE⟩/ω_a on `grid`, from the KDQ distribution at every time.
pub fn work_trajectory(
    params: &SystemParams,
    rho0: &DensityOperator,
    grid: &TimeGrid,
) -> Result<WorkTrajectory> {
    grid.validate()?;
    let gen = build_generators(params);
    let ham = params.hamiltonian();
    let wa = params.omega_a();
    let times = grid.times(params);
    let props = Propagator::series(&gen, &times)?;

    let samples: Vec<[f64; 3]> = props
        .par_iter()
        .map(|prop| {
            let dist = KdqDistribution::from_propagator(prop, rho0);
            let e = average_energy_change(&dist, &ham);
            [-e.total.re / wa, -e.diag.re / wa, -e.coh.re / wa]
        })
        .collect();

    Ok(WorkTrajectory {
        t_dimless: grid.dimless_points(),
        times,
        w_total: samples.iter().map(|s| s[0]).collect(),
        w_diag: samples.iter().map(|s| s[1]).collect(),
        w_coh: samples.iter().map(|s| s[2]).collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyReport {
    pub t_dimless: Vec<f64>,
    pub eta: Vec<f64>,
    pub eta_max: f64,
    /// First dimensionless grid time at which `eta_max` is attained.
    pub t_tilde: f64,
}

impl EfficiencyReport {
    /// η(t) = −⟨ΔE(t)⟩ / (n̄ ω_ac).
    pub fn from_work(work: &WorkTrajectory, params: &SystemParams) -> Result<Self> {
        if params.nbar <= 0.0 {
            return Err(FanoError::UndefinedEfficiency);
        }
        let scale = params.omega_a() / (params.nbar * params.omega_ac());
        let eta: Vec<f64> = work.w_total.iter().map(|w| w * scale).collect();
        let eta_max = eta.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let peak = eta.iter().position(|&e| e >= eta_max - 1e-12).unwrap_or(0);
        Ok(EfficiencyReport {
            t_dimless: work.t_dimless.clone(),
            t_tilde: work.t_dimless[peak],
            eta,
            eta_max,
        })
    }
}

pub fn efficiency(
    params: &SystemParams,
    rho0: &DensityOperator,
    grid: &TimeGrid,
) -> Result<EfficiencyReport> {
    if params.nbar <= 0.0 {
        return Err(FanoError::UndefinedEfficiency);
    }
    EfficiencyReport::from_work(&work_trajectory(params, rho0, grid)?, params)
}

/// Per-time linear functionals x ↦ Tr[H Φ_t(x)]/ω_a on the x-sector.
///
/// Equal to the KDQ-weighted energy sum by the marginal property; used
/// where thousands of initial states share one set of propagators.
#[derive(Debug, Clone)]
struct EnergyResponse {
    rows: Vec<[f64; 5]>,
    energies: [f64; 3],
}

impl EnergyResponse {
    fn new(params: &SystemParams, grid: &TimeGrid) -> Result<Self> {
        grid.validate()?;
        let gen = build_generators(params);
        let props = Propagator::series(&gen, &grid.times(params))?;
        let wa = params.omega_a();
        let energies = params.hamiltonian().energies().map(|e| e / wa);
        let rows = props
            .iter()
            .map(|prop| {
                std::array::from_fn(|i| (0..3).map(|j| energies[j] * prop.exp_a[(j, i)]).sum())
            })
            .collect();
        Ok(EnergyResponse { rows, energies })
    }

    /// ⟨ΔE⟩(t_k)/ω_a for every grid time.
    fn energy_change(&self, x: &XVector) -> impl Iterator<Item = f64> + '_ {
        let x = x.0;
        let initial: f64 = (0..3).map(|j| self.energies[j] * x[j]).sum();
        self.rows
            .iter()
            .map(move |r| (0..5).map(|i| r[i] * x[i]).sum::<f64>() - initial)
    }
}

/// The entry of largest magnitude, sign kept; ties resolve to the first.
pub fn signed_extremum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut best = 0.0f64;
    for v in values {
        if v.abs() > best.abs() {
            best = v;
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BalanceResult {
    /// ρ_cc(0) with ρ_aa(0) = ρ_bb(0) = (1 − ρ_cc(0))/2.
    pub rho_cc: f64,
    /// sup over the grid of |⟨ΔE⟩_diag|/ω_a at `rho_cc`.
    pub residual: f64,
}

fn balance_state(rho_cc: f64) -> XVector {
    let excited = 0.5 * (1.0 - rho_cc);
    XVector(nalgebra::Vector5::new(excited, excited, rho_cc, 0.0, 0.0))
}

/// Finds ρ_cc(0) for which the diagonal part of the initial state yields
/// ⟨ΔE⟩_diag = 0 on the whole grid.
///
/// Brackets the sign change of the late-time value of ⟨ΔE⟩_diag over
/// ρ_cc ∈ [0, 1] by bisection, then checks the supremum over the grid.
pub fn find_diag_balance(params: &SystemParams, grid: &TimeGrid) -> Result<BalanceResult> {
    if params.nbar <= 0.0 {
        return Err(FanoError::NoBalance("requires nbar > 0".into()));
    }
    if grid.samples < 2 || grid.t_max <= 0.0 {
        return Err(FanoError::InvalidSweep(
            "balance search needs a grid with t_max > 0 and at least two samples".into(),
        ));
    }
    let response = EnergyResponse::new(params, grid)?;
    let plateau = |rho_cc: f64| {
        response
            .energy_change(&balance_state(rho_cc))
            .last()
            .unwrap_or(0.0)
    };

    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let (f_lo, f_hi) = (plateau(lo), plateau(hi));
    if f_lo * f_hi > 0.0 {
        return Err(FanoError::NoBalance(format!(
            "late-time <dE>_diag keeps its sign on [0, 1] ({f_lo:e}, {f_hi:e})"
        )));
    }
    let root = if f_lo == 0.0 {
        lo
    } else if f_hi == 0.0 {
        hi
    } else {
        let sign_lo = f_lo.signum();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f = plateau(mid);
            if f == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if f.signum() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let residual = response
        .energy_change(&balance_state(root))
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    if residual > BALANCE_TOL {
        return Err(FanoError::NoBalance(format!(
            "late-time root rho_cc = {root} leaves sup |<dE>_diag|/omega_a = {residual:e}"
        )));
    }
    Ok(BalanceResult {
        rho_cc: root,
        residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: String,
    pub values: Vec<f64>,
}

/// Values indexed `[axis1][axis2]`: signed extremum of ⟨ΔE⟩_coh/ω_a.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub axis1: Axis,
    pub axis2: Axis,
    pub values: Vec<Vec<f64>>,
}

impl SweepGrid {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    fn check(self) -> Result<Self> {
        let consistent = self.values.len() == self.axis1.values.len()
            && self
                .values
                .iter()
                .all(|row| row.len() == self.axis2.values.len());
        if !consistent {
            return Err(FanoError::InvalidSweep(
                "inconsistent grid dimensions".into(),
            ));
        }
        if self.values.iter().flatten().any(|v| !v.is_finite()) {
            return Err(FanoError::NonFinite("sweep grid"));
        }
        Ok(self)
    }
}

/// Phase samples 2πk/n, k = 0..n; π/2 and π lie on the grid when 4 | n.
pub fn phase_axis(resolution: usize) -> Vec<f64> {
    (0..resolution)
        .map(|k| TAU * k as f64 / resolution as f64)
        .collect()
}

fn coherence_response(response: &EnergyResponse, init: &InitialState) -> Result<f64> {
    let rho = pure_state(init)?;
    let (_, chi) = split_diag_coh(&rho);
    let (x, _) = to_xz(&chi)?;
    Ok(signed_extremum(response.energy_change(&x)))
}

/// Sweeps the two phases other than `fixed` (held at 0) over [0, 2π).
pub fn phase_sweep(
    params: &SystemParams,
    populations: [f64; 3],
    fixed: Level,
    resolution: usize,
    grid: &TimeGrid,
) -> Result<SweepGrid> {
    if resolution == 0 {
        return Err(FanoError::InvalidSweep(
            "resolution must be positive".into(),
        ));
    }
    // validates the populations once up front
    InitialState::from_populations(populations, [0.0; 3])?;
    let response = EnergyResponse::new(params, grid)?;
    let [first, second] = match fixed {
        Level::A => [Level::B, Level::C],
        Level::B => [Level::A, Level::C],
        Level::C => [Level::A, Level::B],
    };
    let phases = phase_axis(resolution);

    let values = phases
        .par_iter()
        .map(|&phi1| {
            phases
                .iter()
                .map(|&phi2| {
                    let mut phi = [0.0; 3];
                    phi[first.index()] = phi1;
                    phi[second.index()] = phi2;
                    coherence_response(
                        &response,
                        &InitialState::from_populations(populations, phi)?,
                    )
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    SweepGrid {
        axis1: Axis {
            name: format!("phi_{}", first.label()),
            values: phases.clone(),
        },
        axis2: Axis {
            name: format!("phi_{}", second.label()),
            values: phases,
        },
        values,
    }
    .check()
}

/// One row per φ_b; columns sweep ρ_aa(0) over [0, 1 − ρ_cc(0)] with
/// ρ_bb(0) = 1 − ρ_cc(0) − ρ_aa(0) and φ_a = φ_c = 0.
pub fn population_sweep(
    params: &SystemParams,
    rho_cc: f64,
    phi_b: &[f64],
    points: usize,
    grid: &TimeGrid,
) -> Result<SweepGrid> {
    if !(0.0..=1.0).contains(&rho_cc) {
        return Err(FanoError::InvalidSweep(format!(
            "rho_cc = {rho_cc} outside [0, 1]"
        )));
    }
    if points < 2 {
        return Err(FanoError::InvalidSweep(
            "need at least two population points".into(),
        ));
    }
    if phi_b.is_empty() {
        return Err(FanoError::InvalidSweep("empty phi_b list".into()));
    }
    let response = EnergyResponse::new(params, grid)?;
    let excited = 1.0 - rho_cc;
    let rho_aa: Vec<f64> = (0..points)
        .map(|k| excited * k as f64 / (points - 1) as f64)
        .collect();

    let values = phi_b
        .par_iter()
        .map(|&phase| {
            rho_aa
                .iter()
                .map(|&aa| {
                    let bb = (excited - aa).max(0.0);
                    let init = InitialState::from_populations([aa, bb, rho_cc], [0.0, phase, 0.0])?;
                    coherence_response(&response, &init)
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    SweepGrid {
        axis1: Axis {
            name: "phi_b".into(),
            values: phi_b.to_vec(),
        },
        axis2: Axis {
            name: "rho_aa".into(),
            values: rho_aa,
        },
        values,
    }
    .check()
}
