// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;
use std::process::{Command, Output};

use fano_cli::Table;

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .output()
        .expect("spawn fano")
}

fn stdout_table(out: &Output) -> Table {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    Table::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(fano(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_errors_exit_with_one() {
    for args in [
        &["work", "--preset", "no-such-preset"][..],
        &["work", "--set", "colour=red"],
        &["work", "--set", "p=2"],
        &["work", "--config", "/nonexistent/run.cfg"],
        &["not-a-command"],
        &[
            "efficiency",
            "--set",
            "samples=3",
            "--out",
            "/nonexistent-dir/out.csv",
        ],
    ] {
        let out = fano(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn numeric_failure_exits_with_two() {
    let out = fano(&["efficiency", "--set", "nbar=0", "--set", "samples=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("efficiency"));
}

#[test]
fn config_file_then_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# weak pumping\nnbar = 0.5\nrho_aa = 0.2\nrho_bb = 0.2\nrho_cc = 0.6\np = -0.25 # overridden\n",
    )
    .unwrap();
    let out = fano(&[
        "efficiency",
        "--config",
        cfg.to_str().unwrap(),
        "--set",
        "p=-0.5",
        "--set",
        "samples=151",
    ]);
    let t = stdout_table(&out);
    assert_eq!(t.header, ["p", "eta_max", "t_tilde_dimless"]);
    assert_eq!(t.rows[0][0], -0.5);
}

#[test]
fn evolve_single_sample_echoes_state() {
    let out = fano(&[
        "evolve",
        "--preset",
        "certification-p-1",
        "--set",
        "samples=1",
    ]);
    let t = stdout_table(&out);
    assert_eq!(t.rows.len(), 1);
    let row = &t.rows[0];
    assert_eq!(row[0], 0.0);
    assert!((row[1] - 0.3).abs() < 1e-11 && (row[3] - 0.4).abs() < 1e-11);
    // ρ_ab = √(0.3·0.3)·e^{-iπ}
    assert!((row[4] + 0.3).abs() < 1e-11);
}

#[test]
fn work_plateau_from_preset() {
    let t = stdout_table(&fano(&["work", "--preset", "certification-p-1"]));
    assert_eq!(t.rows.len(), 1501);
    let w = *t.column("w_total").unwrap().last().unwrap();
    assert!((0.15..=0.19).contains(&w), "{w}");
}

#[test]
fn efficiency_row_for_three_quarter_alignment() {
    let t = stdout_table(&fano(&[
        "efficiency",
        "--preset",
        "optimal-extraction",
        "--set",
        "p=-0.75",
    ]));
    let row = &t.rows[0];
    assert!((0.03..=0.05).contains(&row[1]));
    assert!((0.18..=0.22).contains(&row[2]));
}

fn write_twice(args: &[&str], dir: &Path) -> (Vec<u8>, Vec<u8>) {
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("run{k}.csv"));
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--out", path.to_str().unwrap()]);
        let out = fano(&full);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stdout.is_empty());
        outputs.push(std::fs::read(path).unwrap());
    }
    let b = outputs.pop().unwrap();
    (outputs.pop().unwrap(), b)
}

#[test]
fn sweeps_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &[
            "sweep-phases",
            "--preset",
            "certification-p-0.5",
            "--set",
            "sweep_resolution=16",
            "--set",
            "samples=301",
        ][..],
        &[
            "sweep-populations",
            "--preset",
            "certification-p-0.5",
            "--set",
            "samples=301",
        ],
        &[
            "kdq",
            "--preset",
            "certification-p-1",
            "--set",
            "samples=201",
        ],
    ] {
        let (a, b) = write_twice(args, dir.path());
        assert_eq!(a, b, "{args:?}");
        let text = String::from_utf8(a).unwrap();
        assert!(!text.contains('\r'));
        assert_eq!(Table::parse(&text).unwrap().to_csv(), text);
    }
}

#[test]
fn find_balance_for_weak_pumping() {
    let t = stdout_table(&fano(&["find-balance", "--preset", "weak-pumping-balance"]));
    assert_eq!(t.rows[0][0], 0.5);
    assert!((t.rows[0][1] - 0.6).abs() < 1e-3);
    assert!(t.rows[0][2] <= 1e-6);
}
