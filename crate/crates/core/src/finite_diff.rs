//! Central-difference operators and the matching time-stepping scheme for
//! the simple harmonic oscillator.
//!
//! With the identity denominators `2 sin ε` and `(2 sin(ε/2))²` the
//! operators are exact on sine and cosine samples at any step; the
//! textbook denominators `2ε` and `ε²` give the usual second-order
//! approximations.

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::trig::{reference_cos, reference_sin};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Denominator {
    /// `2 sin ε` for the first derivative, `(2 sin(ε/2))²` for the second.
    #[default]
    Identity,
    /// `2ε` and `ε²`.
    Textbook,
}

impl Denominator {
    pub fn first(self, epsilon: f64) -> f64 {
        match self {
            Denominator::Identity => 2.0 * epsilon.sin(),
            Denominator::Textbook => 2.0 * epsilon,
        }
    }

    pub fn second(self, epsilon: f64) -> f64 {
        match self {
            Denominator::Identity => (2.0 * (epsilon / 2.0).sin()).powi(2),
            Denominator::Textbook => epsilon * epsilon,
        }
    }
}

/// Samples `f(θ+ε)` and `f(θ−ε)` around a centre θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledPair {
    pub theta: Angle,
    pub epsilon: Angle,
    pub f_plus: f64,
    pub f_minus: f64,
}

impl SampledPair {
    pub fn new(theta: Angle, epsilon: Angle, f_plus: f64, f_minus: f64) -> Result<Self> {
        check_step(epsilon)?;
        if !(f_plus.is_finite() && f_minus.is_finite()) {
            return Err(Error::InvalidInput("samples must be finite".into()));
        }
        Ok(SampledPair {
            theta,
            epsilon,
            f_plus,
            f_minus,
        })
    }

    /// Reference sine sampled at `θ ± ε`.
    pub fn sine(theta: Angle, epsilon: Angle) -> Result<Self> {
        Self::new(
            theta,
            epsilon,
            reference_sin(theta + epsilon),
            reference_sin(theta - epsilon),
        )
    }

    pub fn cosine(theta: Angle, epsilon: Angle) -> Result<Self> {
        Self::new(
            theta,
            epsilon,
            reference_cos(theta + epsilon),
            reference_cos(theta - epsilon),
        )
    }
}

fn check_step(epsilon: Angle) -> Result<()> {
    if epsilon.radians() > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "half-width must be positive, got {} rad",
            epsilon.radians()
        )))
    }
}

fn checked_denominator(epsilon: Angle, denominator: f64) -> Result<f64> {
    if denominator.is_normal() {
        Ok(denominator)
    } else {
        Err(Error::DegenerateStep {
            epsilon: epsilon.radians(),
            denominator,
        })
    }
}

/// `(f(θ+ε) − f(θ−ε)) / denominator`.
pub fn central_first_derivative(pair: &SampledPair, denominator: Denominator) -> Result<f64> {
    check_step(pair.epsilon)?;
    let d = checked_denominator(pair.epsilon, denominator.first(pair.epsilon.radians()))?;
    Ok((pair.f_plus - pair.f_minus) / d)
}

/// `(f(θ+ε) − 2f(θ) + f(θ−ε)) / denominator`.
pub fn central_second_derivative(
    f_plus: f64,
    f_center: f64,
    f_minus: f64,
    epsilon: Angle,
    denominator: Denominator,
) -> Result<f64> {
    check_step(epsilon)?;
    let d = checked_denominator(epsilon, denominator.second(epsilon.radians()))?;
    Ok((f_plus - 2.0 * f_center + f_minus) / d)
}

/// Positions of `y'' = −ω² y` sampled at `t = n·h`.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorRun {
    pub omega: f64,
    pub step_h: f64,
    pub y: Vec<f64>,
}

impl OscillatorRun {
    pub fn time(&self, n: usize) -> f64 {
        n as f64 * self.step_h
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.y.len()).map(|n| self.time(n))
    }

    /// The continuous solution `A cos ωt + B sin ωt` through the first two
    /// samples.
    pub fn closed_form(&self, t: f64) -> f64 {
        let (y0, y1) = (self.y[0], self.y[1]);
        let wh = self.omega * self.step_h;
        let b = (y1 - y0 * wh.cos()) / wh.sin();
        y0 * (self.omega * t).cos() + b * (self.omega * t).sin()
    }

    pub fn max_error(&self) -> f64 {
        self.y
            .iter()
            .enumerate()
            .map(|(n, &y)| (y - self.closed_form(self.time(n))).abs())
            .fold(0.0, f64::max)
    }

    /// `y_{n+1}² + y_n² − (2 − (ωh)²)·y_{n+1}·y_n`, conserved exactly by the
    /// scheme in exact arithmetic.
    pub fn discrete_energy(&self, n: usize) -> f64 {
        let wh = self.omega * self.step_h;
        let c = 2.0 - wh * wh;
        let (a, b) = (self.y[n + 1], self.y[n]);
        a * a + b * b - c * a * b
    }

    /// Largest `|E_n − E_0| / |E_0|` over the run.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.discrete_energy(0);
        (0..self.y.len() - 1)
            .map(|n| (self.discrete_energy(n) - e0).abs() / e0.abs())
            .fold(0.0, f64::max)
    }
}

/// Steps `y_{n+1} = 2y_n − y_{n−1} − (ωh)²·y_n` for `steps` intervals.
///
/// The update is carried in summed form, `d_{n+1} = d_n − (ωh)²·y_n` and
/// `y_{n+1} = y_n + d_{n+1}`, which is the sine-table recursion with the
/// time step in place of the angular step.
pub fn integrate_shm(
    omega: f64,
    step_h: f64,
    steps: usize,
    y0: f64,
    y1: f64,
) -> Result<OscillatorRun> {
    if ![omega, step_h, y0, y1].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidInput(
            "oscillator parameters must be finite".into(),
        ));
    }
    if step_h <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "time step must be positive, got {step_h}"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let omega_h = omega.abs() * step_h;
    if omega_h >= 2.0 {
        return Err(Error::Unstable { omega_h });
    }

    let wh = omega * step_h;
    let k = wh * wh;
    let mut y = Vec::with_capacity(steps + 1);
    y.push(y0);
    y.push(y1);
    let mut current = y1;
    let mut diff = y1 - y0;
    for _ in 2..=steps {
        diff -= k * current;
        current += diff;
        y.push(current);
    }
    Ok(OscillatorRun { omega, step_h, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_6, PI};

    fn a(r: f64) -> Angle {
        Angle::from_radians(r).unwrap()
    }

    #[test]
    fn worked_example() {
        let pair = SampledPair::new(a(33.5f64.to_radians()), a(0.061), 0.6, 0.5).unwrap();
        let estimate = central_first_derivative(&pair, Denominator::Textbook).unwrap();
        assert_eq!(format!("{estimate:.2}"), "0.82");
        assert_eq!(format!("{:.2}", 33.5f64.to_radians().cos()), "0.83");
    }

    #[test]
    fn first_derivative_at_zero() {
        let eps = 1e-3;
        let pair = SampledPair::sine(a(0.0), a(eps)).unwrap();
        let d = central_first_derivative(&pair, Denominator::Textbook).unwrap();
        assert!((d - 1.0).abs() < eps * eps);
        let exact = central_first_derivative(&pair, Denominator::Identity).unwrap();
        assert!((exact - 1.0).abs() < 1e-15);
    }

    #[test]
    fn first_derivative_small_step() {
        let pair = SampledPair::sine(a(1.0), a(1e-4)).unwrap();
        let d = central_first_derivative(&pair, Denominator::Textbook).unwrap();
        assert!((d - 1f64.cos()).abs() < 1e-8);
    }

    #[test]
    fn second_derivative_examples() {
        let (t, e) = (FRAC_PI_6, 1e-3);
        let d2 = central_second_derivative(
            (t + e).sin(),
            t.sin(),
            (t - e).sin(),
            a(e),
            Denominator::Textbook,
        )
        .unwrap();
        assert!((d2 + 0.5).abs() < 1e-6);

        let e: f64 = 1e-2;
        let c = central_second_derivative(e.cos(), 1.0, (-e).cos(), a(e), Denominator::Textbook)
            .unwrap();
        assert!((c + 1.0).abs() < e * e);

        for denom in [Denominator::Identity, Denominator::Textbook] {
            assert_eq!(
                central_second_derivative(3.7, 3.7, 3.7, a(0.1), denom).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn rejects_bad_steps() {
        assert!(SampledPair::new(a(0.0), a(0.0), 1.0, 1.0).is_err());
        assert!(central_second_derivative(0.0, 0.0, 0.0, a(-0.1), Denominator::Identity).is_err());
        let tiny = a(1e-200);
        assert!(matches!(
            central_second_derivative(0.0, 0.0, 0.0, tiny, Denominator::Identity),
            Err(Error::DegenerateStep { .. })
        ));
        let pair = SampledPair::new(a(0.0), a(f64::from_bits(1)), 0.0, 0.0).unwrap();
        assert!(matches!(
            central_first_derivative(&pair, Denominator::Textbook),
            Err(Error::DegenerateStep { .. })
        ));
    }

    #[test]
    fn null_solution() {
        let run = integrate_shm(1.0, 0.1, 50, 0.0, 0.0).unwrap();
        assert!(run.y.iter().all(|&y| y == 0.0));
    }

    #[test]
    fn refuses_unstable_steps() {
        assert!(matches!(
            integrate_shm(1.0, 2.0, 10, 0.0, 1.0),
            Err(Error::Unstable { .. })
        ));
        assert!(matches!(
            integrate_shm(4.0, 0.5, 10, 0.0, 1.0),
            Err(Error::Unstable { .. })
        ));
        assert!(integrate_shm(1.0, 0.0, 10, 0.0, 1.0).is_err());
        assert!(integrate_shm(1.0, 0.1, 1, 0.0, 1.0).is_err());
        assert!(integrate_shm(f64::NAN, 0.1, 10, 0.0, 1.0).is_err());
    }

    #[test]
    fn run_bookkeeping() {
        let run = integrate_shm(2.0, 0.05, 10, 1.0, (0.1f64).cos()).unwrap();
        assert_eq!(run.y.len(), 11);
        assert_eq!(run.times().last().unwrap(), 0.5);
        assert!((run.closed_form(0.0) - 1.0).abs() < 1e-15);
        assert!((run.closed_form(0.05) - run.y[1]).abs() < 1e-15);
    }

    #[test]
    fn energy_is_conserved() {
        let h = 0.1;
        let run = integrate_shm(1.0, h, 10_000, 0.0, h.sin()).unwrap();
        assert!(run.max_energy_drift() < 1e-9, "{}", run.max_energy_drift());
    }

    #[test]
    fn cosine_start_tracks_cos() {
        let h = 2.0 * PI / 400.0;
        let run = integrate_shm(1.0, h, 400, 1.0, h.cos()).unwrap();
        assert!(run.max_error() < 1e-3);
    }
}
