// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Batch front-end for `fano-core`: run configurations, presets, and
//! deterministic CSV output.

pub mod config;
pub mod csv;
pub mod run;

use fano_core::FanoError;

pub use config::{preset, Command, RunConfig, Settings};
pub use csv::Table;
pub use run::{execute, run};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("numeric failure: {0}")]
    Numeric(#[from] FanoError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 1,
            CliError::Numeric(_) => 2,
        }
    }
}
