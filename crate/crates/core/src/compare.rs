//! Comparison of a generated table against the reference sine.

use crate::angle::Angle;
use crate::table::{Mode, SineTable};
use crate::trig::to_rsine;

/// Pass threshold for historical tables, in whole Rsine minutes.
pub const HISTORICAL_MINUTE_TOLERANCE: i64 = 1;
/// Pass threshold for exact tables, in sine units.
pub const EXACT_SINE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub index: usize,
    pub angle: Angle,
    pub computed_sine: f64,
    pub reference_sine: f64,
    pub abs_error: f64,
    pub error_minutes: f64,
    pub rsine: i64,
    pub reference_rsine: i64,
}

impl ComparisonRow {
    pub fn rsine_deviation(&self) -> i64 {
        (self.rsine - self.reference_rsine).abs()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub max_abs_error: f64,
    pub max_error_minutes: f64,
    /// Rows whose rounded Rsine is more than one minute off the reference.
    pub rsine_exceedances: usize,
    pub beyond_quadrant: bool,
}

impl ComparisonReport {
    pub fn max_rsine_deviation(&self) -> i64 {
        self.rows
            .iter()
            .map(ComparisonRow::rsine_deviation)
            .max()
            .unwrap_or(0)
    }

    /// Row with the largest absolute error.
    pub fn worst_row(&self) -> Option<&ComparisonRow> {
        self.rows
            .iter()
            .max_by(|a, b| a.abs_error.total_cmp(&b.abs_error))
    }

    /// Pass/fail against the fixed threshold for `mode`.
    pub fn passes(&self, mode: Mode) -> bool {
        match mode {
            Mode::Historical => self.max_rsine_deviation() <= HISTORICAL_MINUTE_TOLERANCE,
            Mode::Exact => self.max_abs_error <= EXACT_SINE_TOLERANCE,
        }
    }
}

pub fn compare_with_reference(table: &SineTable) -> ComparisonReport {
    let rows: Vec<ComparisonRow> = table
        .entries
        .iter()
        .map(|e| ComparisonRow {
            index: e.index,
            angle: e.angle,
            computed_sine: e.computed_sine,
            reference_sine: e.reference_sine,
            abs_error: e.abs_error,
            error_minutes: e.error_minutes,
            rsine: e.rsine.rounded,
            // reference sines are finite by construction
            reference_rsine: to_rsine(e.reference_sine).map(|r| r.rounded).unwrap_or(0),
        })
        .collect();

    ComparisonReport {
        max_abs_error: rows.iter().map(|r| r.abs_error).fold(0.0, f64::max),
        max_error_minutes: rows.iter().map(|r| r.error_minutes).fold(0.0, f64::max),
        rsine_exceedances: rows
            .iter()
            .filter(|r| r.rsine_deviation() > HISTORICAL_MINUTE_TOLERANCE)
            .count(),
        beyond_quadrant: table.extends_beyond_quadrant(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{generate_recursion_table, AngleGrid, RecursionConfig, TableSource};

    #[test]
    fn exact_table_error_is_tiny() {
        let grid = AngleGrid::pi_over(48.0, 24).unwrap();
        let (table, _) = generate_recursion_table(&RecursionConfig::exact(grid)).unwrap();
        let report = compare_with_reference(&table);
        assert!(report.max_abs_error < 1e-10);
        assert!(report.passes(Mode::Exact));
        assert_eq!(report.rsine_exceedances, 0);
    }

    #[test]
    fn historical_table_error_grows_to_right_angle() {
        let grid = AngleGrid::pi_over(48.0, 24).unwrap();
        let (table, _) = generate_recursion_table(&RecursionConfig::historical(grid)).unwrap();
        let report = compare_with_reference(&table);
        assert_eq!(report.worst_row().unwrap().index, 24);
        assert!(report.max_error_minutes < 2.0);
    }

    #[test]
    fn empty_table_gives_empty_report() {
        let table = SineTable {
            source: TableSource::HalfAngle { halvings: 4 },
            step: Angle::pi_over(48.0).unwrap(),
            entries: vec![],
        };
        let report = compare_with_reference(&table);
        assert!(report.rows.is_empty());
        assert_eq!(report.max_abs_error, 0.0);
        assert_eq!(report.max_rsine_deviation(), 0);
        assert!(report.worst_row().is_none());
    }
}
