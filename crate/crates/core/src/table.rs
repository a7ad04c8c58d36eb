//! Sine tables built from the second-difference recursion.
//!
//! With `s_n = sin(nε)` and `δs_n = s_n − s_{n−1}`, the second difference
//! obeys `δs_n − δs_{n−1} = −K·s_{n−1}` where `K = (2 sin(ε/2))²`. Since
//! `s_{n−1}` is the running sum of all earlier first differences, the whole
//! table follows from the seed `δs_1` and `K` alone.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::trig::{reference_cos, reference_sin, to_rsine, RsineValue, RSINE_RADIUS};

/// The "proximate" value of π used for the historical table.
#[allow(clippy::approx_constant)]
pub const HISTORICAL_PI: f64 = 3.1416;

/// Decimal places carried by the historical working step (`0.0654` for
/// `π/48`, `0.0393` for `π/80`).
pub const HISTORICAL_STEP_DECIMALS: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// π = 3.1416, `δs_1 = ε` and `K = ε²`, with ε carried to four decimals.
    Historical,
    /// Machine π, `δs_1 = sin ε` and `K = (2 sin(ε/2))²`.
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Historical => "historical",
            Mode::Exact => "exact",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "historical" => Ok(Mode::Historical),
            "exact" => Ok(Mode::Exact),
            other => Err(Error::InvalidConfig(format!(
                "unknown mode {other:?}, expected historical or exact"
            ))),
        }
    }
}

/// Uniform grid of nodes `n·ε` for `n = 1..=count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleGrid {
    epsilon: Angle,
    count: usize,
}

impl AngleGrid {
    pub fn new(epsilon: Angle, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::EmptyGrid);
        }
        if epsilon.radians() <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "grid step must be positive, got {} rad",
                epsilon.radians()
            )));
        }
        Ok(AngleGrid { epsilon, count })
    }

    /// Grid with step `π / divisor`.
    pub fn pi_over(divisor: f64, count: usize) -> Result<Self> {
        Self::new(Angle::pi_over(divisor)?, count)
    }

    pub fn epsilon(&self) -> Angle {
        self.epsilon
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn node(&self, n: usize) -> Angle {
        self.epsilon * n as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = Angle> + '_ {
        (1..=self.count).map(move |n| self.node(n))
    }

    /// True when the last node lies past 90°.
    pub fn extends_beyond_quadrant(&self) -> bool {
        self.node(self.count).radians() > FRAC_PI_2 * (1.0 + 1e-12)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionConfig {
    grid: AngleGrid,
    mode: Mode,
    pi_value: f64,
    step: f64,
    seed_first_difference: f64,
    coefficient: f64,
}

impl RecursionConfig {
    pub fn new(grid: AngleGrid, mode: Mode) -> Self {
        let eps = grid.epsilon().radians();
        match mode {
            Mode::Historical => {
                let step = historical_step(eps);
                RecursionConfig {
                    grid,
                    mode,
                    pi_value: HISTORICAL_PI,
                    step,
                    seed_first_difference: step,
                    coefficient: step * step,
                }
            }
            Mode::Exact => {
                let chord = 2.0 * (eps / 2.0).sin();
                RecursionConfig {
                    grid,
                    mode,
                    pi_value: PI,
                    step: eps,
                    seed_first_difference: eps.sin(),
                    coefficient: chord * chord,
                }
            }
        }
    }

    pub fn historical(grid: AngleGrid) -> Self {
        Self::new(grid, Mode::Historical)
    }

    pub fn exact(grid: AngleGrid) -> Self {
        Self::new(grid, Mode::Exact)
    }

    pub fn grid(&self) -> AngleGrid {
        self.grid
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn pi_value(&self) -> f64 {
        self.pi_value
    }

    /// Step in radians as the recursion sees it.
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn seed_first_difference(&self) -> f64 {
        self.seed_first_difference
    }

    /// `K` in `δ²s_n = −K·s_{n−1}`.
    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }
}

/// ε re-expressed with π = 3.1416 and kept to four decimals.
///
/// `π/48` lands exactly on the tie `0.06545`; ties go to even, giving the
/// `0.0654` of the historical table.
fn historical_step(eps: f64) -> f64 {
    let scale = 10f64.powi(HISTORICAL_STEP_DECIMALS);
    let scaled = eps / PI * HISTORICAL_PI * scale;
    // Snap float noise so exact decimal ties are recognised as ties.
    let snapped = (scaled * 1e6).round() / 1e6;
    snapped.round_ties_even() / scale
}

#[derive(Debug, Clone, PartialEq)]
pub struct SineTableEntry {
    pub index: usize,
    pub angle: Angle,
    pub computed_sine: f64,
    pub rsine: RsineValue,
    pub reference_sine: f64,
    pub abs_error: f64,
    pub error_minutes: f64,
}

impl SineTableEntry {
    pub fn new(index: usize, angle: Angle, computed_sine: f64) -> Result<Self> {
        let rsine = to_rsine(computed_sine)?;
        let reference_sine = reference_sin(angle);
        let abs_error = (computed_sine - reference_sine).abs();
        Ok(SineTableEntry {
            index,
            angle,
            computed_sine,
            rsine,
            reference_sine,
            abs_error,
            error_minutes: abs_error * RSINE_RADIUS,
        })
    }
}

/// How a table was produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TableSource {
    Recursion(RecursionConfig),
    /// Repeated halving on the grid `π / (3·2^halvings)`.
    HalfAngle {
        halvings: u32,
    },
}

impl TableSource {
    pub fn mode(&self) -> Mode {
        match self {
            TableSource::Recursion(cfg) => cfg.mode(),
            TableSource::HalfAngle { .. } => Mode::Exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SineTable {
    pub source: TableSource,
    pub step: Angle,
    pub entries: Vec<SineTableEntry>,
}

impl SineTable {
    pub fn mode(&self) -> Mode {
        self.source.mode()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `s_n`, with `s_0 = 0`.
    pub fn sine_at(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.entries[n - 1].computed_sine
        }
    }

    pub fn extends_beyond_quadrant(&self) -> bool {
        self.entries
            .last()
            .is_some_and(|e| e.angle.radians() > FRAC_PI_2 * (1.0 + 1e-12))
    }
}

/// First and second differences of a recursion table.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DifferenceSeries {
    /// `first[i]` is `δs_{i+1}`.
    pub first: Vec<f64>,
    /// `second[i]` is `δ²s_{i+2}`; there is no second difference at n = 1.
    pub second: Vec<f64>,
}

impl DifferenceSeries {
    pub fn first_at(&self, n: usize) -> f64 {
        self.first[n - 1]
    }

    /// `δ²s_n` for `n >= 2`.
    pub fn second_at(&self, n: usize) -> f64 {
        self.second[n - 2]
    }

    /// `Σ_{m=1}^{n} δs_m`.
    pub fn partial_sum(&self, n: usize) -> f64 {
        self.first[..n].iter().sum()
    }
}

pub fn generate_recursion_table(config: &RecursionConfig) -> Result<(SineTable, DifferenceSeries)> {
    let grid = config.grid();
    if grid.count() == 0 {
        return Err(Error::EmptyGrid);
    }
    if grid.epsilon().radians() <= 0.0 {
        return Err(Error::InvalidConfig("grid step must be positive".into()));
    }

    let n_max = grid.count();
    let k = config.coefficient();
    let mut entries = Vec::with_capacity(n_max);
    let mut series = DifferenceSeries {
        first: Vec::with_capacity(n_max),
        second: Vec::with_capacity(n_max.saturating_sub(1)),
    };

    // `sine` holds s_{n-1} at the top of each iteration.
    let mut sine = 0.0;
    let mut diff = config.seed_first_difference();
    for n in 1..=n_max {
        if n > 1 {
            let next = diff - k * sine;
            series.second.push(next - diff);
            diff = next;
        }
        sine += diff;
        series.first.push(diff);
        entries.push(SineTableEntry::new(n, grid.node(n), sine)?);
    }

    let table = SineTable {
        source: TableSource::Recursion(*config),
        step: grid.epsilon(),
        entries,
    };
    Ok((table, series))
}

fn require_exact(table: &SineTable) -> Result<()> {
    match table.mode() {
        Mode::Exact => Ok(()),
        found => Err(Error::ModeMismatch {
            expected: Mode::Exact,
            found,
        }),
    }
}

/// Largest deviation of `s_n − s_{n−1}` from `2 sin(ε/2) cos((n − ½)ε)`.
pub fn first_difference_check(table: &SineTable) -> Result<f64> {
    require_exact(table)?;
    let eps = table.step.radians();
    let half_chord = 2.0 * (eps / 2.0).sin();
    let residual = table
        .entries
        .iter()
        .map(|e| {
            let n = e.index;
            let mid = Angle::new_unchecked((n as f64 - 0.5) * eps);
            let actual = table.sine_at(n) - table.sine_at(n - 1);
            (actual - half_chord * reference_cos(mid)).abs()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}

/// Largest `|δ²s_n + 4 sin²(ε/2) s_{n−1}|` over `n >= 2`.
pub fn second_difference_check(series: &DifferenceSeries, table: &SineTable) -> Result<f64> {
    require_exact(table)?;
    let eps = table.step.radians();
    let k = 4.0 * (eps / 2.0).sin().powi(2);
    let residual = series
        .second
        .iter()
        .enumerate()
        .map(|(i, &d2)| {
            let n = i + 2;
            (d2 + k * table.sine_at(n - 1)).abs()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}
