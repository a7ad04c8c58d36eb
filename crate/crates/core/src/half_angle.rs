//! Sine tables by repeated halving, `sin θ = sqrt((1 − cos 2θ)/2)`.
//!
//! Starting values are `sin 0 = 0`, `sin 30° = 1/2` and `sin 90° = 1`. The
//! quadrant lattice `j·ε` (ε = π/(3·2^k)) is filled by sweeping three
//! rules until nothing changes: halving, complements
//! (`cos θ = sin(90° − θ)` and back), then `cos θ = sqrt(1 − sin²θ)`.

use std::f64::consts::PI;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::table::{AngleGrid, SineTable, SineTableEntry, TableSource};

const MAX_HALVINGS: u32 = 40;

/// Grid `π / (3·2^halvings)` with `count` nodes.
pub fn halving_grid(halvings: u32, count: usize) -> Result<AngleGrid> {
    if halvings == 0 || halvings > MAX_HALVINGS {
        return Err(Error::UnsupportedGrid(format!(
            "halvings must be in 1..={MAX_HALVINGS}, got {halvings}"
        )));
    }
    AngleGrid::pi_over(3.0 * 2f64.powi(halvings as i32), count)
}

/// Number of grid steps from 0° to 90° after `halvings` halvings.
pub fn quadrant_nodes(halvings: u32) -> usize {
    3 << (halvings - 1)
}

fn detect_halvings(eps: f64) -> Option<u32> {
    (1..=MAX_HALVINGS).find(|&k| {
        let expected = PI / (3.0 * 2f64.powi(k as i32));
        (eps - expected).abs() <= 1e-12 * expected
    })
}

pub fn generate_half_angle_table(target: &AngleGrid) -> Result<SineTable> {
    let eps = target.epsilon().radians();
    let halvings = detect_halvings(eps).ok_or_else(|| {
        Error::UnsupportedGrid(format!(
            "step {eps} rad is not π/(3·2^k) for an integer k in 1..={MAX_HALVINGS}"
        ))
    })?;
    let quadrant = quadrant_nodes(halvings);
    if target.count() > quadrant {
        return Err(Error::UnsupportedGrid(format!(
            "{} nodes run past 90°; at most {quadrant} fit in the quadrant",
            target.count()
        )));
    }

    let lattice = fill_quadrant(quadrant);
    let entries = (1..=target.count())
        .map(|n| {
            let sine = lattice[n].ok_or_else(|| {
                Error::UnsupportedGrid(format!("node {n} is not reachable by halving"))
            })?;
            SineTableEntry::new(n, target.node(n), sine)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SineTable {
        source: TableSource::HalfAngle { halvings },
        step: Angle::new_unchecked(eps),
        entries,
    })
}

/// Sines on `j·90°/quadrant` for `j = 0..=quadrant`; `None` marks a hole.
fn fill_quadrant(quadrant: usize) -> Vec<Option<f64>> {
    let mut sin = vec![None; quadrant + 1];
    let mut cos: Vec<Option<f64>> = vec![None; quadrant + 1];
    sin[0] = Some(0.0);
    sin[quadrant / 3] = Some(0.5);
    sin[quadrant] = Some(1.0);

    loop {
        let mut changed = false;

        for j in 1..=quadrant / 2 {
            if sin[j].is_none() {
                if let Some(c2) = cos[2 * j] {
                    sin[j] = Some(((1.0 - c2) / 2.0).sqrt());
                    changed = true;
                }
            }
        }

        for j in 0..=quadrant {
            let k = quadrant - j;
            if cos[j].is_none() && sin[k].is_some() {
                cos[j] = sin[k];
                changed = true;
            }
            if sin[j].is_none() && cos[k].is_some() {
                sin[j] = cos[k];
                changed = true;
            }
        }

        for j in 0..=quadrant {
            match (sin[j], cos[j]) {
                (Some(s), None) => {
                    cos[j] = Some((1.0 - s * s).max(0.0).sqrt());
                    changed = true;
                }
                (None, Some(c)) => {
                    sin[j] = Some((1.0 - c * c).max(0.0).sqrt());
                    changed = true;
                }
                _ => {}
            }
        }

        if !changed {
            return sin;
        }
    }
}
