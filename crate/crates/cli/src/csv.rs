// Copyright 2026 Fano Contributors
// SPDX-License-Identifier: Apache-2.0

//! Numeric CSV tables with a fixed, locale-free float format.

use std::fmt::Write as _;

/// Twelve significant digits in scientific notation. Negative zero prints
/// as zero; non-finite values as `nan`, `inf`, `-inf`.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.11e}")
}

pub fn parse_float(s: &str) -> Result<f64, String> {
    match s {
        "nan" => Ok(f64::NAN),
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => s.parse().map_err(|_| format!("not a number: {s:?}")),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            for (k, v) in row.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", format_float(*v));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Table, String> {
        let mut lines = text.lines();
        let header: Vec<String> = lines
            .next()
            .ok_or("empty csv")?
            .split(',')
            .map(str::to_owned)
            .collect();
        let mut table = Table {
            header,
            rows: Vec::new(),
        };
        for (n, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(parse_float)
                .collect::<Result<Vec<f64>, String>>()?;
            if row.len() != table.header.len() {
                return Err(format!("row {} has {} fields", n + 1, row.len()));
            }
            table.rows.push(row);
        }
        Ok(table)
    }
}
