// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Simulation core for an incoherently pumped V-type three-level system.
//!
//! - [`model`]: parameters, Hamiltonian, states and the x/z representation
//! - [`liouville`]: generators A, C, matrix exponentials and the channel Φ_t
//! - [`kdq`]: Kirkwood-Dirac quasiprobabilities of energy changes
//! - [`energetics`]: extractable work, efficiency, balance search and sweeps

pub mod energetics;
pub mod error;
pub mod kdq;
pub mod liouville;
pub mod model;

pub use error::{FanoError, Result};
