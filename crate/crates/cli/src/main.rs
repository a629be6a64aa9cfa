// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fano_cli::{config::Settings, preset, CliError, Command, RunConfig};

/// V-type three-level system driven by incoherent light: dynamics, KDQ
/// statistics and extractable work as CSV.
#[derive(Debug, Parser)]
#[command(name = "fano", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Named parameter bundle applied before the config file.
    #[arg(long)]
    preset: Option<String>,
    /// Flat `key = value` file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override a single key; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Output CSV path; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn settings(args: &Args) -> Result<Settings, CliError> {
    let mut s = match &args.preset {
        Some(name) => preset(name)?,
        None => Settings::default(),
    };
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        s.apply_text(&text)?;
    }
    for kv in &args.overrides {
        s.apply_override(kv)?;
    }
    Ok(s)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = settings(&args)
        .and_then(|s| RunConfig::resolve(args.command, &s))
        .and_then(|cfg| fano_cli::execute(&cfg, args.out.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fano: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
