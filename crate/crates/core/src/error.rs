// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FanoError {
    #[error("invalid system parameters: {0}")]
    InvalidParams(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    /// An operator handed to the x/z representation was not Hermitian.
    #[error("representation error: {0}")]
    Representation(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("invalid time {0}: propagation times must be finite and non-negative")]
    InvalidTime(f64),

    #[error("singular linear system in {0}")]
    Singular(&'static str),

    #[error("generator has no numerically zero eigenvalue")]
    NoSteadyState,

    #[error(
        "steady state is degenerate (nullspace dimension {0}); an initial condition is required"
    )]
    DegenerateSteadyState(usize),

    #[error("efficiency undefined for nbar = 0")]
    UndefinedEfficiency,

    #[error("no diagonal balance: {0}")]
    NoBalance(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub type Result<T> = std::result::Result<T, FanoError>;
