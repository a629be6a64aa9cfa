// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Generators of the Markovian master equation and the quantum channel they
//! induce.
//!
//! The dynamics splits into two decoupled real linear systems: `ẋ = A x` for
//! the populations and the a–b coherence, `ż = C z` for the optical
//! coherences. A Hermitian operator is propagated by exponentiating both;
//! a general operator by splitting it into two Hermitian parts.

pub mod expm;

use nalgebra::{DMatrix, DVector, Matrix4, Matrix5, SMatrix};
use rayon::prelude::*;

use crate::error::{FanoError, Result};
use crate::model::{from_xz, to_xz, to_xz_unchecked, Matrix3c, SystemParams, XVector, C64};

pub use self::expm::expm;

/// A (5×5, x-sector) and C (4×4, z-sector), in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generators {
    pub a_matrix: Matrix5<f64>,
    pub c_matrix: Matrix4<f64>,
}

pub fn build_generators(params: &SystemParams) -> Generators {
    let SystemParams {
        gamma_a: ga,
        gamma_b: gb,
        delta,
        nbar: n,
        p,
        ..
    } = *params;
    let cross = p * (ga * gb).sqrt();
    let np1 = n + 1.0;
    let coh_decay = 0.5 * (ga + gb) * np1;

    #[rustfmt::skip]
    let a_matrix = Matrix5::new(
        -ga * np1,          0.0,                ga * n,         -cross * np1,      0.0,
        0.0,                -gb * np1,          gb * n,         -cross * np1,      0.0,
        ga * np1,           gb * np1,           -(ga + gb) * n, 2.0 * cross * np1, 0.0,
        -0.5 * cross * np1, -0.5 * cross * np1, cross * n,      -coh_decay,        delta,
        0.0,                0.0,                0.0,            -delta,            -coh_decay,
    );

    let decay_ac = n * (ga + 0.5 * gb) + 0.5 * ga;
    let decay_bc = n * (gb + 0.5 * ga) + 0.5 * gb;
    let w_ac = params.omega_ac();
    let w_bc = params.omega_bc();
    let k = -0.5 * cross * np1;

    #[rustfmt::skip]
    let c_matrix = Matrix4::new(
        -decay_ac, w_ac,      k,         0.0,
        -w_ac,     -decay_ac, 0.0,       k,
        k,         0.0,       -decay_bc, w_bc,
        0.0,       k,         -w_bc,     -decay_bc,
    );

    Generators { a_matrix, c_matrix }
}

/// e^{At} and e^{Ct} at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagator {
    pub exp_a: Matrix5<f64>,
    pub exp_c: Matrix4<f64>,
    pub t: f64,
}

impl Propagator {
    pub fn new(gen: &Generators, t: f64) -> Result<Self> {
        Ok(Propagator {
            exp_a: expm(&gen.a_matrix, t)?,
            exp_c: expm(&gen.c_matrix, t)?,
            t,
        })
    }

    /// Propagators for every time in `times`, evaluated in parallel.
    pub fn series(gen: &Generators, times: &[f64]) -> Result<Vec<Self>> {
        times.par_iter().map(|&t| Propagator::new(gen, t)).collect()
    }

    /// Composition: `self ∘ other`, i.e. the propagator for `self.t + other.t`.
    pub fn compose(&self, other: &Propagator) -> Propagator {
        Propagator {
            exp_a: self.exp_a * other.exp_a,
            exp_c: self.exp_c * other.exp_c,
            t: self.t + other.t,
        }
    }

    pub fn apply_x(&self, x: &XVector) -> XVector {
        XVector(self.exp_a * x.0)
    }

    pub fn apply_hermitian(&self, op: &Matrix3c) -> Result<Matrix3c> {
        let (x, z) = to_xz(op)?;
        Ok(from_xz(
            &self.apply_x(&x),
            &crate::model::ZVector(self.exp_c * z.0),
        ))
    }

    /// Φ_t on an arbitrary operator, extended complex-linearly through
    /// op = H₁ + iH₂ with H₁, H₂ Hermitian.
    pub fn apply_general(&self, op: &Matrix3c) -> Matrix3c {
        let (h1, h2) = hermitian_parts(op);
        self.apply_hermitian_exact(&h1) + self.apply_hermitian_exact(&h2) * C64::new(0.0, 1.0)
    }

    /// Only the diagonal of Φ_t[op]; needs the x-sector alone.
    pub fn apply_general_diagonal(&self, op: &Matrix3c) -> [C64; 3] {
        let (h1, h2) = hermitian_parts(op);
        let p1 = self.apply_x(&to_xz_unchecked(&h1).0).populations();
        let p2 = self.apply_x(&to_xz_unchecked(&h2).0).populations();
        std::array::from_fn(|k| C64::new(p1[k], p2[k]))
    }

    fn apply_hermitian_exact(&self, op: &Matrix3c) -> Matrix3c {
        let (x, z) = to_xz_unchecked(op);
        from_xz(&self.apply_x(&x), &crate::model::ZVector(self.exp_c * z.0))
    }
}

/// H₁ = (M + M†)/2, H₂ = (M − M†)/(2i); both exactly Hermitian.
pub fn hermitian_parts(op: &Matrix3c) -> (Matrix3c, Matrix3c) {
    let adj = op.adjoint();
    let h1 = (op + adj) * C64::new(0.5, 0.0);
    let h2 = (op - adj) * C64::new(0.0, -0.5);
    (symmetrize(&h1), symmetrize(&h2))
}

/// Forces exact Hermiticity (real diagonal, mirrored lower triangle).
fn symmetrize(m: &Matrix3c) -> Matrix3c {
    let mut out = *m;
    for r in 0..3 {
        out[(r, r)] = C64::new(m[(r, r)].re, 0.0);
        for c in (r + 1)..3 {
            out[(c, r)] = m[(r, c)].conj();
        }
    }
    out
}

pub fn apply_channel_hermitian(gen: &Generators, op: &Matrix3c, t: f64) -> Result<Matrix3c> {
    Propagator::new(gen, t)?.apply_hermitian(op)
}

pub fn apply_channel_general(gen: &Generators, op: &Matrix3c, t: f64) -> Result<Matrix3c> {
    Ok(Propagator::new(gen, t)?.apply_general(op))
}

/// Relative singular-value threshold below which a direction counts as null.
const NULL_TOL: f64 = 1e-9;

/// Long-time limit of `ẋ = A x`.
///
/// With a one-dimensional nullspace the trace-normalised null vector is
/// returned and `x0` only fixes the trace. A degenerate nullspace needs
/// `x0`: the result is its spectral projection onto the zero eigenspace.
pub fn steady_state(gen: &Generators, x0: Option<&XVector>) -> Result<XVector> {
    let a = gen.a_matrix;
    let right = null_basis(&a)?;
    let left = null_basis(&a.transpose())?;
    if right.ncols() != left.ncols() {
        return Err(FanoError::NoSteadyState);
    }
    let dim = right.ncols();

    let x = match x0 {
        None if dim == 1 => {
            let v = right.column(0).into_owned();
            let tr = v[0] + v[1] + v[2];
            if tr.abs() < f64::EPSILON {
                return Err(FanoError::NoSteadyState);
            }
            v / tr
        }
        None => return Err(FanoError::DegenerateSteadyState(dim)),
        Some(x0) => {
            // P = R (LᵀR)⁻¹ Lᵀ
            let gram = left.transpose() * &right;
            let coeffs = gram
                .lu()
                .solve(&(left.transpose() * DVector::from_column_slice(x0.0.as_slice())))
                .ok_or(FanoError::Singular("steady-state projector"))?;
            &right * coeffs
        }
    };
    let x = nalgebra::Vector5::from_column_slice(x.as_slice());

    let residual = (a * x).norm();
    if residual > 1e-10 * a.norm() * x.norm().max(1.0) {
        return Err(FanoError::NoSteadyState);
    }
    Ok(XVector(x))
}

fn null_basis(m: &Matrix5<f64>) -> Result<DMatrix<f64>> {
    let svd = m.svd(false, true);
    let v_t = svd.v_t.ok_or(FanoError::NoSteadyState)?;
    let smax = svd.singular_values.max();
    let cols: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= NULL_TOL * smax)
        .map(|(i, _)| DVector::from_iterator(5, v_t.row(i).iter().copied()))
        .collect();
    if cols.is_empty() {
        return Err(FanoError::NoSteadyState);
    }
    Ok(DMatrix::from_columns(&cols))
}

/// Index of ρ_{rc} in the row-major vectorisation used by [`superoperator`].
pub fn vec_index(row: usize, col: usize) -> usize {
    3 * row + col
}

/// The full 9×9 complex generator L with d vec(ρ)/dt = L vec(ρ), written
/// element by element from the master equation and extended by linearity
/// to non-Hermitian operators. Independent of the x/z route; used to
/// cross-check it.
pub fn superoperator(params: &SystemParams) -> SMatrix<C64, 9, 9> {
    let SystemParams {
        gamma_a: ga,
        gamma_b: gb,
        delta,
        nbar: n,
        p,
        ..
    } = *params;
    let cross = p * (ga * gb).sqrt();
    let np1 = n + 1.0;
    let i = C64::new(0.0, 1.0);
    let re = |v: f64| C64::new(v, 0.0);
    let idx = vec_index;
    let (a, b, c) = (0, 1, 2);

    let mut l = SMatrix::<C64, 9, 9>::zeros();

    // populations; Re ρ_ab → (ρ_ab + ρ_ba)/2
    l[(idx(a, a), idx(a, a))] = re(-ga * np1);
    l[(idx(a, a), idx(c, c))] = re(ga * n);
    l[(idx(a, a), idx(a, b))] = re(-0.5 * cross * np1);
    l[(idx(a, a), idx(b, a))] = re(-0.5 * cross * np1);

    l[(idx(b, b), idx(b, b))] = re(-gb * np1);
    l[(idx(b, b), idx(c, c))] = re(gb * n);
    l[(idx(b, b), idx(a, b))] = re(-0.5 * cross * np1);
    l[(idx(b, b), idx(b, a))] = re(-0.5 * cross * np1);

    l[(idx(c, c), idx(c, c))] = re(-(ga + gb) * n);
    l[(idx(c, c), idx(a, a))] = re(ga * np1);
    l[(idx(c, c), idx(b, b))] = re(gb * np1);
    l[(idx(c, c), idx(a, b))] = re(cross * np1);
    l[(idx(c, c), idx(b, a))] = re(cross * np1);

    // excited-state coherence and its conjugate partner
    let coh_decay = 0.5 * (ga + gb) * np1;
    for (el, sign) in [(idx(a, b), 1.0), (idx(b, a), -1.0)] {
        l[(el, idx(a, a))] = re(-0.5 * cross * np1);
        l[(el, idx(b, b))] = re(-0.5 * cross * np1);
        l[(el, idx(c, c))] = re(cross * n);
        l[(el, el)] = re(-coh_decay) - i * (sign * delta);
    }

    // optical coherences, rotating at ω_ac and ω_bc
    let decay_ac = n * (ga + 0.5 * gb) + 0.5 * ga;
    let decay_bc = n * (gb + 0.5 * ga) + 0.5 * gb;
    let k = re(-0.5 * cross * np1);
    let (w_ac, w_bc) = (params.omega_ac(), params.omega_bc());
    for (ac, bc, sign) in [(idx(a, c), idx(b, c), 1.0), (idx(c, a), idx(c, b), -1.0)] {
        l[(ac, ac)] = re(-decay_ac) - i * (sign * w_ac);
        l[(ac, bc)] = k;
        l[(bc, bc)] = re(-decay_bc) - i * (sign * w_bc);
        l[(bc, ac)] = k;
    }
    l
}

/// Φ_t through the 9×9 superoperator.
pub fn apply_superoperator(params: &SystemParams, op: &Matrix3c, t: f64) -> Result<Matrix3c> {
    let prop = expm(&superoperator(params), t)?;
    let v = nalgebra::SVector::<C64, 9>::from_fn(|k, _| op[(k / 3, k % 3)]);
    let out = prop * v;
    Ok(Matrix3c::from_fn(|r, c| out[vec_index(r, c)]))
}
