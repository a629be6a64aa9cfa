// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Matrix exponential via scaling-and-squaring with diagonal Padé
//! approximants of order 3, 5, 7, 9 or 13.
//!
//! Follows Higham (2005), "The Scaling and Squaring Method for the Matrix
//! Exponential Revisited", SIAM J. Matrix Anal. Appl. 26(4), 1179. The
//! θ_m thresholds bound the backward error by the unit roundoff 2⁻⁵³.
//! Eigendecomposition is never used: the generators here are non-normal.

use nalgebra::{ComplexField, DMatrix, SMatrix};

use crate::error::{FanoError, Result};

const THETA_3: f64 = 1.495_585_217_958_292e-2;
const THETA_5: f64 = 2.539_398_330_063_23e-1;
const THETA_7: f64 = 9.504_178_996_162_932e-1;
const THETA_9: f64 = 2.097_847_961_257_068e0;
const THETA_13: f64 = 5.371_920_351_148_152e0;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17_297_280.0,
    8_648_640.0,
    1_995_840.0,
    277_200.0,
    25_200.0,
    1_512.0,
    56.0,
    1.0,
];
const B9: [f64; 10] = [
    17_643_225_600.0,
    8_821_612_800.0,
    2_075_673_600.0,
    302_702_400.0,
    30_270_240.0,
    2_162_160.0,
    110_880.0,
    3_960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

/// 1-norm (maximum absolute column sum).
pub fn norm1<T, const N: usize>(m: &SMatrix<T, N, N>) -> f64
where
    T: ComplexField<RealField = f64> + Copy,
{
    m.column_iter()
        .map(|col| col.iter().map(|z| z.modulus()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// e^{m·t}.
pub fn expm<T, const N: usize>(m: &SMatrix<T, N, N>, t: f64) -> Result<SMatrix<T, N, N>>
where
    T: ComplexField<RealField = f64> + Copy,
{
    if !t.is_finite() || t < 0.0 {
        return Err(FanoError::InvalidTime(t));
    }
    if m.iter().any(|z| !z.is_finite()) {
        return Err(FanoError::NonFinite("expm input"));
    }
    let a = m.scale(t);
    expm_unscaled(&a)
}

fn expm_unscaled<T, const N: usize>(a: &SMatrix<T, N, N>) -> Result<SMatrix<T, N, N>>
where
    T: ComplexField<RealField = f64> + Copy,
{
    let norm = norm1(a);
    if norm == 0.0 {
        return Ok(SMatrix::identity());
    }
    let a2 = a * a;
    if norm <= THETA_3 {
        return pade_low(a, &[a2], &B3);
    }
    let a4 = a2 * a2;
    if norm <= THETA_5 {
        return pade_low(a, &[a2, a4], &B5);
    }
    let a6 = a4 * a2;
    if norm <= THETA_7 {
        return pade_low(a, &[a2, a4, a6], &B7);
    }
    if norm <= THETA_9 {
        let a8 = a6 * a2;
        return pade_low(a, &[a2, a4, a6, a8], &B9);
    }

    let s = (norm / THETA_13).log2().ceil().max(0.0) as i32;
    let scale = 2f64.powi(-s);
    let (a, a2, a4, a6) = (
        a.scale(scale),
        a2.scale(scale * scale),
        a4.scale(scale.powi(4)),
        a6.scale(scale.powi(6)),
    );
    let mut r = pade13(&a, &a2, &a4, &a6)?;
    for _ in 0..s {
        r = r * r;
    }
    if r.iter().any(|z| !z.is_finite()) {
        return Err(FanoError::NonFinite("expm squaring"));
    }
    Ok(r)
}

fn lift<T: ComplexField<RealField = f64>>(x: f64) -> T {
    T::from_real(x)
}

/// Padé m ∈ {3,5,7,9}; `powers` holds A², A⁴, …, A^{m−1}.
fn pade_low<T, const N: usize>(
    a: &SMatrix<T, N, N>,
    powers: &[SMatrix<T, N, N>],
    b: &[f64],
) -> Result<SMatrix<T, N, N>>
where
    T: ComplexField<RealField = f64> + Copy,
{
    let ident = SMatrix::<T, N, N>::identity();
    let mut u = ident * lift::<T>(b[1]);
    let mut v = ident * lift::<T>(b[0]);
    for (k, pk) in powers.iter().enumerate() {
        u += pk * lift::<T>(b[2 * k + 3]);
        v += pk * lift::<T>(b[2 * k + 2]);
    }
    let u = a * u;
    solve_pade(&u, &v)
}

fn pade13<T, const N: usize>(
    a: &SMatrix<T, N, N>,
    a2: &SMatrix<T, N, N>,
    a4: &SMatrix<T, N, N>,
    a6: &SMatrix<T, N, N>,
) -> Result<SMatrix<T, N, N>>
where
    T: ComplexField<RealField = f64> + Copy,
{
    let b = |k: usize| lift::<T>(B13[k]);
    let ident = SMatrix::<T, N, N>::identity();
    let inner_u = a6 * b(13) + a4 * b(11) + a2 * b(9);
    let u = a * (a6 * inner_u + a6 * b(7) + a4 * b(5) + a2 * b(3) + ident * b(1));
    let inner_v = a6 * b(12) + a4 * b(10) + a2 * b(8);
    let v = a6 * inner_v + a6 * b(6) + a4 * b(4) + a2 * b(2) + ident * b(0);
    solve_pade(&u, &v)
}

/// Solves (V − U) R = (V + U).
fn solve_pade<T, const N: usize>(
    u: &SMatrix<T, N, N>,
    v: &SMatrix<T, N, N>,
) -> Result<SMatrix<T, N, N>>
where
    T: ComplexField<RealField = f64> + Copy,
{
    // const-generic sizes lack nalgebra's LU bounds; solve dynamically
    let p = DMatrix::from_column_slice(N, N, (v + u).as_slice());
    let q = DMatrix::from_column_slice(N, N, (v - u).as_slice());
    let r = q
        .lu()
        .solve(&p)
        .ok_or(FanoError::Singular("Padé denominator"))?;
    Ok(SMatrix::from_column_slice(r.as_slice()))
}
