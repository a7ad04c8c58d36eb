//! Reconstruction of the classical 24-entry sine table by the
//! second-difference recursion, together with the tools used to check it:
//! a half-angle generator, comparisons against the platform sine,
//! central-difference operators, a harmonic-oscillator stepper built on the
//! same recursion, and a coordinate check of the geometric derivation of the
//! sine and cosine difference formulas.
//!
//! ```
//! use jya::{generate_recursion_table, AngleGrid, RecursionConfig};
//!
//! let grid = AngleGrid::pi_over(48.0, 24).unwrap();
//! let (table, _) = generate_recursion_table(&RecursionConfig::historical(grid)).unwrap();
//! assert_eq!(table.entries[7].rsine.rounded, 1719);
//! ```

pub mod angle;
pub mod compare;
pub mod error;
pub mod export;
pub mod finite_diff;
pub mod geometry;
pub mod half_angle;
pub mod table;
pub mod trig;

pub use angle::{Angle, Arcminutes, ARCMINUTES_PER_RADIAN};
pub use compare::{compare_with_reference, ComparisonReport, ComparisonRow};
pub use error::{Error, Result};
pub use export::{export_table, parse_table_csv, Format, TableCsvRecord};
pub use finite_diff::{
    central_first_derivative, central_second_derivative, integrate_shm, Denominator, OscillatorRun,
    SampledPair,
};
pub use geometry::{
    build_scene, measure_similarity, sweep_verify, verify_similarity, GeometryScene, Point,
    SimilarityReport, SweepSummary,
};
pub use half_angle::{generate_half_angle_table, halving_grid};
pub use table::{
    first_difference_check, generate_recursion_table, second_difference_check, AngleGrid,
    DifferenceSeries, Mode, RecursionConfig, SineTable, SineTableEntry, TableSource,
};
pub use trig::{
    cosine_diff_rhs, reference_cos, reference_sin, sine_diff_rhs, to_rsine, RsineValue,
    RSINE_RADIUS,
};
