// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Physical parameters, Hamiltonian, initial states and the real x/z state
//! vectors of the V-type three-level system.
//!
//! Basis order is (a, b, c) everywhere: `|a⟩ = (1,0,0)ᵀ`, `|b⟩ = (0,1,0)ᵀ`,
//! `|c⟩ = (0,0,1)ᵀ`. Energies are in rad/s with ħ = 1 and ω_c = 0.

use std::f64::consts::TAU;

use nalgebra::{Matrix3, Vector4, Vector5};
use num_complex::Complex64;

use crate::error::{FanoError, Result};

pub type C64 = Complex64;
pub type Matrix3c = Matrix3<C64>;

pub const HERMITICITY_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-10;
pub const PSD_FLOOR: f64 = -1e-9;
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// One of the three levels; doubles as a matrix index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    A,
    B,
    C,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::A, Level::B, Level::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Level::A => "a",
            Level::B => "b",
            Level::C => "c",
        }
    }

    pub fn from_label(s: &str) -> Option<Level> {
        match s {
            "a" => Some(Level::A),
            "b" => Some(Level::B),
            "c" => Some(Level::C),
            _ => None,
        }
    }
}

/// Rates and frequencies of the three-level system and the incoherent field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Spontaneous decay rate |a⟩→|c⟩ (rad/s).
    pub gamma_a: f64,
    /// Spontaneous decay rate |b⟩→|c⟩ (rad/s).
    pub gamma_b: f64,
    /// Excited-state splitting Δ = ω_ac − ω_bc (rad/s).
    pub delta: f64,
    /// Mean excited frequency D; ω_a = D + Δ/2, ω_b = D − Δ/2 (rad/s).
    pub d_center: f64,
    /// Mean thermal photon number n̄.
    pub nbar: f64,
    /// Alignment parameter p = cos Θ of the two transition dipoles.
    pub p: f64,
}

impl SystemParams {
    pub fn new(
        gamma_a: f64,
        gamma_b: f64,
        delta: f64,
        d_center: f64,
        nbar: f64,
        p: f64,
    ) -> Result<Self> {
        let params = SystemParams {
            gamma_a,
            gamma_b,
            delta,
            d_center,
            nbar,
            p,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("gamma_a", self.gamma_a),
            ("gamma_b", self.gamma_b),
            ("delta", self.delta),
            ("d_center", self.d_center),
            ("nbar", self.nbar),
            ("p", self.p),
        ];
        if let Some((name, _)) = fields.iter().find(|(_, v)| !v.is_finite()) {
            return Err(FanoError::InvalidParams(format!("{name} must be finite")));
        }
        if self.gamma_a <= 0.0 || self.gamma_b <= 0.0 {
            return Err(FanoError::InvalidParams(
                "decay rates gamma_a, gamma_b must be > 0".into(),
            ));
        }
        if self.delta < 0.0 {
            return Err(FanoError::InvalidParams("delta must be >= 0".into()));
        }
        if self.d_center <= 0.0 {
            return Err(FanoError::InvalidParams("d_center must be > 0".into()));
        }
        if self.omega_b() <= 0.0 {
            return Err(FanoError::InvalidParams(
                "omega_b = d_center - delta/2 must be > 0".into(),
            ));
        }
        if self.nbar < 0.0 {
            return Err(FanoError::InvalidParams("nbar must be >= 0".into()));
        }
        if !(-1.0..=1.0).contains(&self.p) {
            return Err(FanoError::InvalidParams("p must lie in [-1, 1]".into()));
        }
        Ok(())
    }

    pub fn omega_a(&self) -> f64 {
        self.d_center + 0.5 * self.delta
    }

    pub fn omega_b(&self) -> f64 {
        self.d_center - 0.5 * self.delta
    }

    /// Transition frequency a↔c; equals ω_a since ω_c = 0.
    pub fn omega_ac(&self) -> f64 {
        self.omega_a()
    }

    pub fn omega_bc(&self) -> f64 {
        self.omega_b()
    }

    pub fn pumping_rate_a(&self) -> f64 {
        self.nbar * self.gamma_a
    }

    pub fn pumping_rate_b(&self) -> f64 {
        self.nbar * self.gamma_b
    }

    pub fn gamma_bar(&self) -> f64 {
        0.5 * (self.gamma_a + self.gamma_b)
    }

    /// Physical time (s) for a dimensionless time τ = γ̄·t.
    pub fn time_from_dimless(&self, tau: f64) -> f64 {
        tau / self.gamma_bar()
    }

    pub fn dimless_time(&self, t: f64) -> f64 {
        t * self.gamma_bar()
    }

    pub fn hamiltonian(&self) -> Hamiltonian {
        Hamiltonian {
            energies: [self.omega_a(), self.omega_b(), 0.0],
        }
    }

    /// Same parameters with a different alignment parameter.
    pub fn with_p(&self, p: f64) -> Result<Self> {
        let params = SystemParams { p, ..*self };
        params.validate()?;
        Ok(params)
    }

    pub fn with_nbar(&self, nbar: f64) -> Result<Self> {
        let params = SystemParams { nbar, ..*self };
        params.validate()?;
        Ok(params)
    }
}

/// Diagonal system Hamiltonian H = diag(E_a, E_b, E_c) with E_c = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamiltonian {
    energies: [f64; 3],
}

impl Hamiltonian {
    pub fn energies(&self) -> [f64; 3] {
        self.energies
    }

    pub fn energy(&self, level: Level) -> f64 {
        self.energies[level.index()]
    }

    /// ΔE_{ℓ,j} = E_j − E_ℓ.
    pub fn energy_change(&self, from: Level, to: Level) -> f64 {
        self.energy(to) - self.energy(from)
    }

    pub fn matrix(&self) -> Matrix3c {
        Matrix3c::from_diagonal(&nalgebra::Vector3::from_iterator(
            self.energies.iter().map(|&e| C64::new(e, 0.0)),
        ))
    }

    pub fn projector(level: Level) -> Matrix3c {
        let mut m = Matrix3c::zeros();
        m[(level.index(), level.index())] = C64::new(1.0, 0.0);
        m
    }

    /// Tr[H·op]; only the diagonal of `op` contributes.
    pub fn expectation(&self, op: &Matrix3c) -> C64 {
        (0..3).map(|k| op[(k, k)] * self.energies[k]).sum()
    }
}

/// Amplitudes and phases of ψ₀ = Σ_k α_k e^{iφ_k} |k⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    pub alpha: [f64; 3],
    pub phi: [f64; 3],
}

impl InitialState {
    /// Phases are wrapped into [0, 2π).
    pub fn new(alpha: [f64; 3], phi: [f64; 3]) -> Result<Self> {
        let state = InitialState {
            alpha,
            phi: phi.map(wrap_phase),
        };
        state.validate()?;
        Ok(state)
    }

    /// Amplitudes from populations, α_k = √ρ_kk.
    pub fn from_populations(populations: [f64; 3], phi: [f64; 3]) -> Result<Self> {
        if populations.iter().any(|&p| p.is_nan() || p < 0.0) {
            return Err(FanoError::InvalidState(format!(
                "populations must be non-negative, got {populations:?}"
            )));
        }
        Self::new(populations.map(f64::sqrt), phi)
    }

    pub fn populations(&self) -> [f64; 3] {
        self.alpha.map(|a| a * a)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha.iter().chain(&self.phi).any(|v| !v.is_finite()) {
            return Err(FanoError::InvalidState(
                "non-finite amplitude or phase".into(),
            ));
        }
        if self.alpha.iter().any(|&a| a < 0.0) {
            return Err(FanoError::InvalidState(
                "amplitudes must be non-negative".into(),
            ));
        }
        let norm: f64 = self.alpha.iter().map(|a| a * a).sum();
        if (norm - 1.0).abs() > NORMALIZATION_TOL {
            return Err(FanoError::InvalidState(format!(
                "squared amplitudes sum to {norm}, expected 1"
            )));
        }
        Ok(())
    }

    pub fn amplitudes(&self) -> [C64; 3] {
        std::array::from_fn(|k| C64::from_polar(self.alpha[k], self.phi[k]))
    }
}

fn wrap_phase(phi: f64) -> f64 {
    let wrapped = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Hermitian, unit-trace, positive semidefinite 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOperator(Matrix3c);

impl DensityOperator {
    pub fn new(rho: Matrix3c) -> Result<Self> {
        if rho.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(FanoError::InvalidState("non-finite matrix element".into()));
        }
        let herm = hermiticity_defect(&rho);
        if herm > HERMITICITY_TOL {
            return Err(FanoError::InvalidState(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(FanoError::InvalidState(format!("trace {tr} != 1")));
        }
        let min_eig = min_eigenvalue(&rho);
        if min_eig < PSD_FLOOR {
            return Err(FanoError::InvalidState(format!(
                "negative eigenvalue {min_eig:e}"
            )));
        }
        Ok(DensityOperator(rho))
    }

    pub fn diagonal(populations: [f64; 3]) -> Result<Self> {
        let mut m = Matrix3c::zeros();
        for (k, &p) in populations.iter().enumerate() {
            m[(k, k)] = C64::new(p, 0.0);
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix3c {
        &self.0
    }

    pub fn element(&self, row: Level, col: Level) -> C64 {
        self.0[(row.index(), col.index())]
    }

    pub fn populations(&self) -> [f64; 3] {
        [self.0[(0, 0)].re, self.0[(1, 1)].re, self.0[(2, 2)].re]
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        hermitian_eigenvalues(&self.0)
    }

    /// Whether the state commutes with a diagonal Hamiltonian with distinct energies.
    pub fn is_diagonal(&self) -> bool {
        offdiagonal_norm(&self.0) == 0.0
    }
}

/// Largest |M − M†| entry.
pub fn hermiticity_defect(m: &Matrix3c) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..3 {
        for c in r..3 {
            worst = worst.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    worst
}

fn offdiagonal_norm(m: &Matrix3c) -> f64 {
    let mut acc = 0.0;
    for r in 0..3 {
        for c in 0..3 {
            if r != c {
                acc += m[(r, c)].norm();
            }
        }
    }
    acc
}

/// Eigenvalues of the Hermitian part of `m`, ascending.
pub fn hermitian_eigenvalues(m: &Matrix3c) -> [f64; 3] {
    let herm = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let ev = herm.symmetric_eigenvalues();
    let mut out = [ev[0], ev[1], ev[2]];
    out.sort_by(f64::total_cmp);
    out
}

pub fn min_eigenvalue(m: &Matrix3c) -> f64 {
    hermitian_eigenvalues(m)[0]
}

pub fn pure_state(init: &InitialState) -> Result<DensityOperator> {
    init.validate()?;
    let psi = nalgebra::Vector3::from(init.amplitudes());
    let rho = psi * psi.adjoint();
    DensityOperator::new(rho)
}

/// Splits ρ into its diagonal part and the off-diagonal coherence part χ.
pub fn split_diag_coh(rho: &DensityOperator) -> (Matrix3c, Matrix3c) {
    let m = rho.matrix();
    let mut diag = Matrix3c::zeros();
    for k in 0..3 {
        diag[(k, k)] = m[(k, k)];
    }
    let mut coh = *m;
    for k in 0..3 {
        coh[(k, k)] = C64::new(0.0, 0.0);
    }
    (diag, coh)
}

/// Population sector plus the a–b coherence:
/// (ρ_aa, ρ_bb, ρ_cc, Re ρ_ab, Im ρ_ab).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XVector(pub Vector5<f64>);

/// Optical coherences: (Re ρ_ac, Im ρ_ac, Re ρ_bc, Im ρ_bc).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZVector(pub Vector4<f64>);

impl XVector {
    pub fn trace(&self) -> f64 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn populations(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }
}

/// Real x/z representation of a Hermitian operator of arbitrary trace.
pub fn to_xz(op: &Matrix3c) -> Result<(XVector, ZVector)> {
    let scale = op.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let defect = hermiticity_defect(op);
    if defect > HERMITICITY_TOL * scale {
        return Err(FanoError::Representation(format!(
            "operator is not Hermitian (defect {defect:e})"
        )));
    }
    Ok(to_xz_unchecked(op))
}

/// Reads the diagonal and the upper triangle only.
pub(crate) fn to_xz_unchecked(op: &Matrix3c) -> (XVector, ZVector) {
    let ab = op[(0, 1)];
    let ac = op[(0, 2)];
    let bc = op[(1, 2)];
    let x = Vector5::new(op[(0, 0)].re, op[(1, 1)].re, op[(2, 2)].re, ab.re, ab.im);
    let z = Vector4::new(ac.re, ac.im, bc.re, bc.im);
    (XVector(x), ZVector(z))
}

pub fn from_xz(x: &XVector, z: &ZVector) -> Matrix3c {
    let (x, z) = (&x.0, &z.0);
    let ab = C64::new(x[3], x[4]);
    let ac = C64::new(z[0], z[1]);
    let bc = C64::new(z[2], z[3]);
    let re = |v: f64| C64::new(v, 0.0);
    Matrix3c::new(
        re(x[0]),
        ab,
        ac,
        ab.conj(),
        re(x[1]),
        bc,
        ac.conj(),
        bc.conj(),
        re(x[2]),
    )
}

/// Uniform grid of dimensionless times τ = γ̄·t on [0, t_max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_max: f64,
    pub samples: usize,
}

impl Default for TimeGrid {
    fn default() -> Self {
        TimeGrid {
            t_max: 1.5,
            samples: 1501,
        }
    }
}

impl TimeGrid {
    pub fn new(t_max: f64, samples: usize) -> Result<Self> {
        let grid = TimeGrid { t_max, samples };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(FanoError::InvalidParams(
                "time grid needs at least one sample".into(),
            ));
        }
        if !(self.t_max.is_finite() && self.t_max >= 0.0) {
            return Err(FanoError::InvalidTime(self.t_max));
        }
        Ok(())
    }

    /// Dimensionless sample points; a single sample is τ = 0.
    pub fn dimless_points(&self) -> Vec<f64> {
        if self.samples == 1 {
            return vec![0.0];
        }
        let last = (self.samples - 1) as f64;
        (0..self.samples)
            .map(|k| self.t_max * k as f64 / last)
            .collect()
    }

    /// Physical sample times (s).
    pub fn times(&self, params: &SystemParams) -> Vec<f64> {
        self.dimless_points()
            .into_iter()
            .map(|tau| params.time_from_dimless(tau))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn certification_state_elements() {
        let init = InitialState::new(
            [0.3f64.sqrt(), 0.3f64.sqrt(), 0.4f64.sqrt()],
            [0.0, PI, 0.0],
        )
        .unwrap();
        let rho = pure_state(&init).unwrap();
        let m = rho.matrix();
        assert!((m[(0, 0)].re - 0.3).abs() < 1e-15);
        assert!((m[(1, 1)].re - 0.3).abs() < 1e-15);
        assert!((m[(2, 2)].re - 0.4).abs() < 1e-15);
        assert!((m[(0, 1)] - c(-0.3, 0.0)).norm() < 1e-15);
        assert!((m[(0, 2)] - c(0.12f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((m[(1, 2)] - c(-(0.12f64.sqrt()), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn ground_state_ignores_phases() {
        let init = InitialState::new([0.0, 0.0, 1.0], [1.0, 2.0, 3.0]).unwrap();
        let rho = pure_state(&init).unwrap();
        let mut expected = Matrix3c::zeros();
        expected[(2, 2)] = c(1.0, 0.0);
        assert!((rho.matrix() - expected).norm() < 1e-15);
    }

    #[test]
    fn symmetric_superposition() {
        let s = 0.5f64.sqrt();
        let rho = pure_state(&InitialState::new([s, s, 0.0], [0.0; 3]).unwrap()).unwrap();
        assert!((rho.element(Level::A, Level::B) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((rho.populations()[0] - 0.5).abs() < 1e-15);
        assert!(rho.populations()[2].abs() < 1e-15);
    }

    #[test]
    fn pure_state_is_rank_one() {
        let init = InitialState::from_populations([0.2, 0.5, 0.3], [0.4, 1.3, 5.0]).unwrap();
        let ev = pure_state(&init).unwrap().eigenvalues();
        assert!(ev[0].abs() < 1e-12 && ev[1].abs() < 1e-12);
        assert!((ev[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unnormalized_state_rejected() {
        assert!(matches!(
            InitialState::new([1.0, 1.0, 0.0], [0.0; 3]),
            Err(FanoError::InvalidState(_))
        ));
        let bad = InitialState {
            alpha: [0.5, 0.5, 0.5],
            phi: [0.0; 3],
        };
        assert!(matches!(pure_state(&bad), Err(FanoError::InvalidState(_))));
    }

    #[test]
    fn phases_are_wrapped() {
        let init = InitialState::new([1.0, 0.0, 0.0], [-PI, 3.0 * PI, TAU]).unwrap();
        assert!((init.phi[0] - PI).abs() < 1e-12);
        assert!((init.phi[1] - PI).abs() < 1e-12);
        assert_eq!(init.phi[2], 0.0);
    }

    #[test]
    fn split_of_certification_state() {
        let init = InitialState::new(
            [0.3f64.sqrt(), 0.3f64.sqrt(), 0.4f64.sqrt()],
            [0.0, PI, 0.0],
        )
        .unwrap();
        let rho = pure_state(&init).unwrap();
        let (d, chi) = split_diag_coh(&rho);
        assert!((d[(0, 0)].re - 0.3).abs() < 1e-15);
        assert!((d[(2, 2)].re - 0.4).abs() < 1e-15);
        assert_eq!(d[(0, 1)], c(0.0, 0.0));
        assert!((chi[(0, 1)] - c(-0.3, 0.0)).norm() < 1e-15);
        assert_eq!(chi.trace(), c(0.0, 0.0));
        assert_eq!(d + chi, *rho.matrix());
        assert!(hermiticity_defect(&chi) == 0.0);
    }

    #[test]
    fn split_of_diagonal_state_has_no_coherence() {
        let rho = DensityOperator::diagonal([0.2, 0.3, 0.5]).unwrap();
        let (_, chi) = split_diag_coh(&rho);
        assert_eq!(chi, Matrix3c::zeros());
    }

    #[test]
    fn split_of_plus_state() {
        let s = 0.5f64.sqrt();
        let rho = pure_state(&InitialState::new([s, s, 0.0], [0.0; 3]).unwrap()).unwrap();
        let (d, chi) = split_diag_coh(&rho);
        assert!((d[(0, 0)].re - 0.5).abs() < 1e-15 && (d[(1, 1)].re - 0.5).abs() < 1e-15);
        assert!((chi[(0, 1)].re - 0.5).abs() < 1e-15 && (chi[(1, 0)].re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn xz_of_diagonal_operator() {
        let rho = DensityOperator::diagonal([0.3, 0.3, 0.4]).unwrap();
        let (x, z) = to_xz(rho.matrix()).unwrap();
        assert_eq!(x.0, Vector5::new(0.3, 0.3, 0.4, 0.0, 0.0));
        assert_eq!(z.0, Vector4::zeros());
    }

    #[test]
    fn xz_reads_ab_coherence() {
        let init = InitialState::new(
            [0.3f64.sqrt(), 0.3f64.sqrt(), 0.4f64.sqrt()],
            [0.0, PI, 0.0],
        )
        .unwrap();
        let rho = pure_state(&init).unwrap();
        let (x, _) = to_xz(rho.matrix()).unwrap();
        assert!((x.0[3] + 0.3).abs() < 1e-15);
        assert!(x.0[4].abs() < 1e-15);
        assert!((x.trace() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn non_hermitian_rejected_by_to_xz() {
        let mut m = Matrix3c::zeros();
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(to_xz(&m), Err(FanoError::Representation(_))));
    }

    #[test]
    fn density_operator_validation() {
        let mut m = Matrix3c::identity();
        assert!(DensityOperator::new(m).is_err()); // trace 3
        m = Matrix3c::zeros();
        m[(0, 0)] = c(1.5, 0.0);
        m[(1, 1)] = c(-0.5, 0.0);
        assert!(DensityOperator::new(m).is_err()); // negative eigenvalue
        m = Matrix3c::zeros();
        m[(0, 0)] = c(1.0, 0.0);
        m[(0, 1)] = c(0.0, 1e-6);
        assert!(DensityOperator::new(m).is_err()); // not Hermitian
    }

    #[test]
    fn params_validation_and_derived_quantities() {
        let p = SystemParams::new(2.0, 4.0, 0.5, 10.0, 3.0, -0.5).unwrap();
        assert_eq!(p.omega_a(), 10.25);
        assert_eq!(p.omega_b(), 9.75);
        assert_eq!(p.omega_ac(), p.omega_a());
        assert_eq!(p.pumping_rate_a(), 6.0);
        assert_eq!(p.pumping_rate_b(), 12.0);
        assert_eq!(p.gamma_bar(), 3.0);
        assert!(SystemParams::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(SystemParams::new(1.0, 1.0, -1.0, 1.0, 0.0, 0.0).is_err());
        assert!(SystemParams::new(1.0, 1.0, 0.0, 1.0, -1.0, 0.0).is_err());
        assert!(SystemParams::new(1.0, 1.0, 0.0, 1.0, 0.0, 1.5).is_err());
        assert!(SystemParams::new(1.0, 1.0, 4.0, 1.0, 0.0, 0.0).is_err());
        assert!(SystemParams::new(f64::NAN, 1.0, 0.0, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn hamiltonian_ordering() {
        let p = SystemParams::new(1.0, 1.0, 0.1, 100.0, 3.0, -1.0).unwrap();
        let h = p.hamiltonian();
        let [ea, eb, ec] = h.energies();
        assert!(ec <= eb && eb <= ea);
        assert_eq!(ec, 0.0);
        assert_eq!(h.energy_change(Level::C, Level::A), ea);
    }

    #[test]
    fn time_grid_points() {
        let g = TimeGrid::new(1.5, 4).unwrap();
        assert_eq!(g.dimless_points(), vec![0.0, 0.5, 1.0, 1.5]);
        assert_eq!(TimeGrid::new(2.0, 1).unwrap().dimless_points(), vec![0.0]);
        assert!(TimeGrid::new(1.0, 0).is_err());
        assert!(TimeGrid::new(-1.0, 3).is_err());
    }
}
