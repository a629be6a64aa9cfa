// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Kirkwood-Dirac quasiprobabilities of two-time energy changes.
//!
//! With energy projectors Π_k onto the computational basis and the first
//! measurement at t₁ = 0,
//!
//! ```text
//! q_{ℓ,j}(t) = Tr[Π_j Φ_t[Π_ℓ ρ₀]] = ⟨j| Φ_t[|ℓ⟩⟨ℓ|ρ₀] |j⟩
//! ```
//!
//! Π_ℓ ρ₀ is not Hermitian, so Φ_t is applied through its complex-linear
//! extension. Imaginary parts are kept, never dropped.

use nalgebra::Matrix3;

use crate::error::Result;
use crate::liouville::{build_generators, Propagator};
use crate::model::{
    split_diag_coh, DensityOperator, Hamiltonian, Level, Matrix3c, SystemParams, C64,
};

/// Rows: initial outcome ℓ; columns: final outcome j; both in (a, b, c) order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KdqDistribution {
    pub q: Matrix3c,
    /// Contribution of diag(ρ₀).
    pub q_diag: Matrix3c,
    /// Contribution of the off-diagonal part χ of ρ₀.
    pub q_coh: Matrix3c,
    /// Elapsed time t₂ − t₁ (s).
    pub t: f64,
}

impl KdqDistribution {
    pub fn from_propagator(prop: &Propagator, rho0: &DensityOperator) -> Self {
        let (diag, coh) = split_diag_coh(rho0);
        let q_diag = quasiprobabilities(prop, &diag);
        let q_coh = quasiprobabilities(prop, &coh);
        KdqDistribution {
            q: q_diag + q_coh,
            q_diag,
            q_coh,
            t: prop.t,
        }
    }

    pub fn entry(&self, initial: Level, final_: Level) -> C64 {
        self.q[(initial.index(), final_.index())]
    }

    pub fn sum(&self) -> C64 {
        self.q.iter().sum()
    }

    /// Σ_ℓ q_{ℓ,j}: Born probabilities at time t.
    pub fn final_marginal(&self) -> [C64; 3] {
        std::array::from_fn(|j| (0..3).map(|l| self.q[(l, j)]).sum())
    }

    /// Σ_j q_{ℓ,j}: Born probabilities at time 0.
    pub fn initial_marginal(&self) -> [C64; 3] {
        std::array::from_fn(|l| (0..3).map(|j| self.q[(l, j)]).sum())
    }

    pub fn max_abs_imaginary(&self) -> f64 {
        self.q.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

/// Table ⟨j|Φ[Π_ℓ op]|j⟩ for a (not necessarily normalised) initial operator.
fn quasiprobabilities(prop: &Propagator, op: &Matrix3c) -> Matrix3c {
    let mut table = Matrix3c::zeros();
    for l in 0..3 {
        let mut row_l = Matrix3c::zeros();
        row_l.set_row(l, &op.row(l));
        let out = prop.apply_general_diagonal(&row_l);
        for (j, v) in out.into_iter().enumerate() {
            table[(l, j)] = v;
        }
    }
    table
}

pub fn kdq(params: &SystemParams, rho0: &DensityOperator, t: f64) -> Result<KdqDistribution> {
    let prop = Propagator::new(&build_generators(params), t)?;
    Ok(KdqDistribution::from_propagator(&prop, rho0))
}

/// Two-point-measurement joint probabilities
/// p_{ℓ,j} = Tr[Π_j Φ[Π_ℓ ρ₀ Π_ℓ]] = ρ₀_{ℓℓ} ⟨j|Φ[|ℓ⟩⟨ℓ|]|j⟩.
pub fn tpm_from_propagator(prop: &Propagator, rho0: &DensityOperator) -> Matrix3<f64> {
    let pops = rho0.populations();
    let mut table = Matrix3::zeros();
    for l in 0..3 {
        let mut x = nalgebra::Vector5::zeros();
        x[l] = 1.0;
        let out = prop.exp_a * x;
        for j in 0..3 {
            table[(l, j)] = pops[l] * out[j];
        }
    }
    table
}

pub fn tpm(params: &SystemParams, rho0: &DensityOperator, t: f64) -> Result<Matrix3<f64>> {
    let prop = Propagator::new(&build_generators(params), t)?;
    Ok(tpm_from_propagator(&prop, rho0))
}

/// ℵ = −1 + Σ_{ℓ,j} |q_{ℓ,j}|; zero iff every q is a non-negative real
/// (given Σ q = 1).
pub fn nonpositivity(dist: &KdqDistribution) -> f64 {
    nonpositivity_of(&dist.q)
}

pub fn nonpositivity_of(table: &Matrix3c) -> f64 {
    table.iter().map(|z| z.norm()).sum::<f64>() - 1.0
}

/// ⟨ΔE⟩ and its diag/coherence split (rad/s). Imaginary parts are residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyChange {
    pub total: C64,
    pub diag: C64,
    pub coh: C64,
}

/// ⟨ΔE⟩ = Σ_{ℓ,j} q_{ℓ,j} (E_j − E_ℓ).
pub fn average_energy_change(dist: &KdqDistribution, ham: &Hamiltonian) -> EnergyChange {
    let weigh = |table: &Matrix3c| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for from in Level::ALL {
            for to in Level::ALL {
                acc += table[(from.index(), to.index())] * ham.energy_change(from, to);
            }
        }
        acc
    };
    EnergyChange {
        total: weigh(&dist.q),
        diag: weigh(&dist.q_diag),
        coh: weigh(&dist.q_coh),
    }
}

/// Tr[H ρ(t)] − Tr[H ρ(0)] computed from the propagated state, without KDQ.
pub fn energy_change_by_trace(
    prop: &Propagator,
    rho0: &DensityOperator,
    ham: &Hamiltonian,
) -> Result<f64> {
    let rho_t = prop.apply_hermitian(rho0.matrix())?;
    Ok((ham.expectation(&rho_t) - ham.expectation(rho0.matrix())).re)
}
