// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

use fano_core::energetics::work_trajectory;
use fano_core::kdq::{
    average_energy_change, energy_change_by_trace, nonpositivity, tpm_from_propagator,
    KdqDistribution,
};
use fano_core::liouville::{build_generators, Propagator};
use fano_core::model::{
    from_xz, min_eigenvalue, to_xz, DensityOperator, Matrix3c, SystemParams, TimeGrid, ZVector, C64,
};
use nalgebra::Vector4;
use proptest::prelude::*;

const GAMMA: f64 = 3.0091e6;

fn params() -> impl Strategy<Value = SystemParams> {
    (
        0.3..3.0f64,
        0.3..3.0f64,
        0.0..1.0f64,
        0.0..6.0f64,
        -1.0..=1.0f64,
    )
        .prop_map(|(ga, gb, delta, nbar, p)| {
            SystemParams::new(GAMMA * ga, GAMMA * gb, GAMMA * delta, 0.785e9, nbar, p).unwrap()
        })
}

fn pure() -> impl Strategy<Value = DensityOperator> {
    prop::array::uniform6(-1.0..1.0f64)
        .prop_filter("non-degenerate amplitude", |v| {
            v.iter().map(|x| x * x).sum::<f64>() > 1e-2
        })
        .prop_map(|v| {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let psi: [C64; 3] = std::array::from_fn(|k| C64::new(v[2 * k], v[2 * k + 1]) / norm);
            DensityOperator::new(Matrix3c::from_fn(|r, c| psi[r] * psi[c].conj())).unwrap()
        })
}

fn dimless_time() -> impl Strategy<Value = f64> {
    0.0..2.0f64
}

fn propagator(params: &SystemParams, tau: f64) -> Propagator {
    Propagator::new(&build_generators(params), params.time_from_dimless(tau)).unwrap()
}

fn max_abs(m: &Matrix3c) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kdq_sum_rule_and_marginals(params in params(), rho in pure(), tau in dimless_time()) {
        let prop = propagator(&params, tau);
        let d = KdqDistribution::from_propagator(&prop, &rho);
        prop_assert!((d.sum() - 1.0).norm() <= 1e-10);
        let rho_t = prop.apply_hermitian(rho.matrix()).unwrap();
        let pops = rho.populations();
        for (k, (fin, ini)) in d.final_marginal().iter().zip(d.initial_marginal()).enumerate() {
            prop_assert!((fin - rho_t[(k, k)]).norm() <= 1e-10);
            prop_assert!((ini - pops[k]).norm() <= 1e-10);
        }
        prop_assert!(nonpositivity(&d) >= -1e-12);
    }

    #[test]
    fn kdq_is_linear_in_the_initial_state(
        params in params(), r1 in pure(), r2 in pure(), w in 0.0..1.0f64, tau in dimless_time()
    ) {
        let prop = propagator(&params, tau);
        let mix = DensityOperator::new(r1.matrix() * C64::new(w, 0.0) + r2.matrix() * C64::new(1.0 - w, 0.0)).unwrap();
        let q = KdqDistribution::from_propagator(&prop, &mix).q;
        let q1 = KdqDistribution::from_propagator(&prop, &r1).q;
        let q2 = KdqDistribution::from_propagator(&prop, &r2).q;
        prop_assert!(max_abs(&(q - q1 * C64::new(w, 0.0) - q2 * C64::new(1.0 - w, 0.0))) <= 1e-12);
    }

    #[test]
    fn diagonal_states_reduce_to_tpm(params in params(), rho in pure(), tau in dimless_time()) {
        let prop = propagator(&params, tau);
        let diag = DensityOperator::diagonal(rho.populations()).unwrap();
        let d = KdqDistribution::from_propagator(&prop, &diag);
        let t = tpm_from_propagator(&prop, &diag);
        for l in 0..3 {
            for j in 0..3 {
                prop_assert!((d.q[(l, j)] - t[(l, j)]).norm() <= 1e-10);
            }
        }
        prop_assert!(nonpositivity(&d).abs() <= 1e-10);
    }

    #[test]
    fn channel_preserves_trace_and_positivity(params in params(), rho in pure(), tau in dimless_time()) {
        let out = propagator(&params, tau).apply_hermitian(rho.matrix()).unwrap();
        prop_assert!((out.trace() - 1.0).norm() <= 1e-10);
        prop_assert!(min_eigenvalue(&out) >= -1e-8);
    }

    #[test]
    fn populations_ignore_the_optical_coherences(
        params in params(), rho in pure(), tau in dimless_time(), dz in prop::array::uniform4(-0.3..0.3f64)
    ) {
        let prop = propagator(&params, tau);
        let (x, z) = to_xz(rho.matrix()).unwrap();
        let perturbed = from_xz(&x, &ZVector(z.0 + Vector4::from(dz)));
        let a = prop.apply_hermitian(rho.matrix()).unwrap();
        let b = prop.apply_hermitian(&perturbed).unwrap();
        for k in 0..3 {
            prop_assert_eq!(a[(k, k)], b[(k, k)]);
        }
        prop_assert_eq!(a[(0, 1)], b[(0, 1)]);
    }

    #[test]
    fn sign_of_p_is_a_covariance(params in params(), rho in pure(), tau in dimless_time()) {
        let flipped_params = params.with_p(-params.p).unwrap();
        let mut flipped = *rho.matrix();
        flipped[(0, 1)] = -flipped[(0, 1)];
        flipped[(1, 0)] = -flipped[(1, 0)];
        let a = propagator(&params, tau).apply_hermitian(rho.matrix()).unwrap();
        let b = propagator(&flipped_params, tau).apply_hermitian(&flipped).unwrap();
        for k in 0..3 {
            prop_assert!((a[(k, k)] - b[(k, k)]).norm() <= 1e-10);
        }
        prop_assert!((a[(0, 1)] + b[(0, 1)]).norm() <= 1e-10);
    }

    #[test]
    fn semigroup(params in params(), t1 in 0.0..1.0f64, t2 in 0.0..1.0f64) {
        let composed = propagator(&params, t1).compose(&propagator(&params, t2));
        let direct = Propagator::new(&build_generators(&params), composed.t).unwrap();
        prop_assert!((composed.exp_a - direct.exp_a).amax() <= 1e-10);
        prop_assert!((composed.exp_c - direct.exp_c).amax() <= 1e-10);
    }

    #[test]
    fn energy_change_paths_agree(params in params(), rho in pure(), tau in dimless_time()) {
        let prop = propagator(&params, tau);
        let ham = params.hamiltonian();
        let e = average_energy_change(&KdqDistribution::from_propagator(&prop, &rho), &ham);
        let by_trace = energy_change_by_trace(&prop, &rho, &ham).unwrap();
        let wa = params.omega_a();
        prop_assert!((e.total.re - by_trace).abs() <= 1e-9 * wa);
        prop_assert!(e.total.im.abs() <= 1e-9 * wa);
        prop_assert!(((e.diag + e.coh) - e.total).norm() <= 1e-12 * wa);
    }
}

#[test]
fn work_split_and_time_origin() {
    let params = SystemParams::new(GAMMA, GAMMA, 0.1 * GAMMA, 0.785e9, 3.0, -0.75).unwrap();
    let psi = [0.3f64.sqrt(), -(0.3f64.sqrt()), 0.4f64.sqrt()];
    let rho =
        DensityOperator::new(Matrix3c::from_fn(|r, c| C64::new(psi[r] * psi[c], 0.0))).unwrap();
    let w = work_trajectory(&params, &rho, &TimeGrid::new(1.5, 301).unwrap()).unwrap();
    assert_eq!(w.w_total[0], 0.0);
    for k in 0..w.w_total.len() {
        assert!((w.w_total[k] - w.w_diag[k] - w.w_coh[k]).abs() <= 1e-12);
    }
}
