//! Text emission for tables, oscillator runs and geometry sweeps.
//!
//! Everything here is deterministic: fixed decimal places, '.' as the
//! decimal point, comma-delimited CSV with `\n` line endings.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::finite_diff::OscillatorRun;
use crate::geometry::{GeometryScene, SweepSummary};
use crate::table::SineTable;

pub const TABLE_CSV_HEADER: [&str; 6] = [
    "index",
    "angle_deg",
    "computed_sine",
    "rsine_minutes",
    "reference_sine",
    "error_minutes",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::InvalidInput(format!(
                "unknown format {other:?}, expected csv or markdown"
            ))),
        }
    }
}

pub fn export_table(table: &SineTable, format: Format) -> String {
    match format {
        Format::Csv => table_csv(table),
        Format::Markdown => table_markdown(table),
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(writer: csv::Writer<Vec<u8>>) -> String {
    // Writing into a Vec cannot fail and every field is ASCII.
    let bytes = writer.into_inner().expect("in-memory csv flush");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn table_csv(table: &SineTable) -> String {
    let mut w = csv_writer();
    w.write_record(TABLE_CSV_HEADER).expect("in-memory write");
    for e in &table.entries {
        w.write_record([
            e.index.to_string(),
            format!("{:.2}", e.angle.degrees()),
            format!("{:.4}", e.computed_sine),
            e.rsine.rounded.to_string(),
            format!("{:.4}", e.reference_sine),
            format!("{:.3}", e.error_minutes),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

/// `nπ/D` when the step divides π evenly, degrees otherwise.
fn angle_label(index: usize, step: f64) -> String {
    let divisor = PI / step;
    let rounded = divisor.round();
    if rounded >= 1.0 && (divisor - rounded).abs() < 1e-9 {
        match index {
            1 => format!("π/{rounded}"),
            n => format!("{n}π/{rounded}"),
        }
    } else {
        format!("{:.2}°", (index as f64 * step).to_degrees())
    }
}

fn table_markdown(table: &SineTable) -> String {
    let mut out = String::new();
    out.push_str("| θ | sin(θ) computed | sin(θ) (minutes) | sin(θ) reference |\n");
    out.push_str("|---|---|---|---|\n");
    let step = table.step.radians();
    for e in &table.entries {
        let _ = writeln!(
            out,
            "| {} | {:.4} | {} | {:.4} |",
            angle_label(e.index, step),
            e.computed_sine,
            e.rsine.rounded,
            e.reference_sine
        );
    }
    out
}

/// One parsed line of a table CSV, at printed precision.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct TableCsvRecord {
    pub index: usize,
    pub angle_deg: f64,
    pub computed_sine: f64,
    pub rsine_minutes: i64,
    pub reference_sine: f64,
    pub error_minutes: f64,
}

pub fn parse_table_csv(text: &str) -> Result<Vec<TableCsvRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header != TABLE_CSV_HEADER {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    reader
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

pub fn oscillator_csv(run: &OscillatorRun) -> String {
    let mut w = csv_writer();
    w.write_record(["t", "y", "reference", "error"])
        .expect("in-memory write");
    for (i, &y) in run.y.iter().enumerate() {
        let t = run.time(i);
        let reference = run.closed_form(t);
        w.write_record([
            format!("{t:.6}"),
            format!("{y:.12}"),
            format!("{reference:.12}"),
            format!("{:.3e}", y - reference),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

pub fn sweep_csv(summary: &SweepSummary) -> String {
    let mut w = csv_writer();
    w.write_record([
        "scenes",
        "passed",
        "worst_discrepancy",
        "worst_theta_deg",
        "worst_phi_deg",
    ])
    .expect("in-memory write");
    w.write_record([
        summary.scenes.to_string(),
        summary.passed.to_string(),
        format!("{:.3e}", summary.worst_discrepancy),
        format!("{:.6}", summary.worst_theta.degrees()),
        format!("{:.6}", summary.worst_phi.degrees()),
    ])
    .expect("in-memory write");
    finish(w)
}

/// Point coordinates of a scene, for external plotting.
pub fn scene_csv(scene: &GeometryScene) -> String {
    let mut w = csv_writer();
    w.write_record(["point", "x", "y"])
        .expect("in-memory write");
    for (name, p) in scene.named_points() {
        w.write_record([
            name.to_string(),
            format!("{:.15}", p.x),
            format!("{:.15}", p.y),
        ])
        .expect("in-memory write");
    }
    finish(w)
}
