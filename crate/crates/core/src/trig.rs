//! Reference trigonometry, the sine/cosine difference identities and Rsine
//! conversion.

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Radius of the Rsine circle in arcminutes. One radian is taken as 3438
/// minutes; the exact value only enters [`Angle::to_arcminutes`].
pub const RSINE_RADIUS: f64 = 3438.0;

/// Platform double-precision sine, used as the exact oracle throughout.
#[inline]
pub fn reference_sin(theta: Angle) -> f64 {
    theta.radians().sin()
}

#[inline]
pub fn reference_cos(theta: Angle) -> f64 {
    theta.radians().cos()
}

/// Right-hand side of `sin(θ+φ) − sin(θ−φ) = 2 sin φ cos θ`.
pub fn sine_diff_rhs(theta: Angle, phi: Angle) -> f64 {
    2.0 * reference_sin(phi) * reference_cos(theta)
}

/// Right-hand side of `cos(θ+φ) − cos(θ−φ) = −2 sin φ sin θ`.
pub fn cosine_diff_rhs(theta: Angle, phi: Angle) -> f64 {
    -2.0 * reference_sin(phi) * reference_sin(theta)
}

/// Direct evaluation of `sin(θ+φ) − sin(θ−φ)`.
pub fn sine_diff_lhs(theta: Angle, phi: Angle) -> f64 {
    reference_sin(theta + phi) - reference_sin(theta - phi)
}

/// Direct evaluation of `cos(θ+φ) − cos(θ−φ)`.
pub fn cosine_diff_lhs(theta: Angle, phi: Angle) -> f64 {
    reference_cos(theta + phi) - reference_cos(theta - phi)
}

/// A sine scaled to the 3438-minute radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RsineValue {
    pub raw: f64,
    /// Nearest whole minute, ties away from zero.
    pub rounded: i64,
}

pub fn to_rsine(sine_value: f64) -> Result<RsineValue> {
    if !sine_value.is_finite() {
        return Err(Error::InvalidInput(format!(
            "sine value must be finite, got {sine_value}"
        )));
    }
    let raw = sine_value * RSINE_RADIUS;
    // f64::round rounds half-way cases away from zero.
    Ok(RsineValue {
        raw,
        rounded: raw.round() as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

    fn a(r: f64) -> Angle {
        Angle::from_radians(r).unwrap()
    }

    #[test]
    fn sine_rhs_examples() {
        assert_eq!(sine_diff_rhs(a(FRAC_PI_3), a(0.0)), 0.0);
        assert!(sine_diff_rhs(a(FRAC_PI_2), a(FRAC_PI_6)).abs() < 1e-16);
        let direct = 0.5f64.sin() - 0.3f64.sin();
        assert!((sine_diff_rhs(a(0.4), a(0.1)) - direct).abs() < 1e-14);
    }

    #[test]
    fn cosine_rhs_examples() {
        assert_eq!(cosine_diff_rhs(a(0.0), a(0.3)), 0.0);
        let direct = 0.5f64.cos() - 0.3f64.cos();
        assert!((cosine_diff_rhs(a(0.4), a(0.1)) - direct).abs() < 1e-14);
        assert!((cosine_diff_rhs(a(FRAC_PI_6), a(FRAC_PI_6)) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn rsine_examples() {
        assert_eq!(to_rsine(0.5).unwrap().rounded, 1719);
        assert_eq!(to_rsine(0.0654).unwrap().rounded, 225);
        assert_eq!(to_rsine(0.0).unwrap().rounded, 0);
        assert!(to_rsine(f64::NAN).is_err());
    }

    #[test]
    fn rsine_ties_go_away_from_zero() {
        // 0.5 / 3438 and its negation land exactly on half a minute.
        let half = 0.5 / RSINE_RADIUS;
        let r = to_rsine(half).unwrap();
        assert_eq!(r.raw, 0.5);
        assert_eq!(r.rounded, 1);
        assert_eq!(to_rsine(-half).unwrap().rounded, -1);
    }

    #[test]
    fn reference_anchor_values() {
        assert!((reference_sin(a(FRAC_PI_6)) - 0.5).abs() < 1e-15);
        assert_eq!(reference_sin(a(FRAC_PI_2)), 1.0);
        assert_eq!(reference_sin(a(0.0)), 0.0);
        assert!(reference_cos(a(PI)) + 1.0 < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn identities_hold(theta in 1e-6f64..FRAC_PI_2, frac in 1e-6f64..1.0) {
            // φ drawn so that θ + φ < π/2.
            let phi = frac * (FRAC_PI_2 - theta);
            let (t, p) = (a(theta), a(phi));
            prop_assert!((sine_diff_lhs(t, p) - sine_diff_rhs(t, p)).abs() < 1e-13);
            prop_assert!((cosine_diff_lhs(t, p) - cosine_diff_rhs(t, p)).abs() < 1e-13);
        }

        #[test]
        fn rhs_odd_in_phi(theta in -3.0f64..3.0, phi in -3.0f64..3.0) {
            let (t, p) = (a(theta), a(phi));
            prop_assert!((sine_diff_rhs(t, p) + sine_diff_rhs(t, -p)).abs() < 1e-16);
            prop_assert!((cosine_diff_rhs(t, p) + cosine_diff_rhs(t, -p)).abs() < 1e-16);
        }

        #[test]
        fn rsine_monotone_and_bounded(x in -2.0f64..2.0, dx in 0.0f64..0.01) {
            let lo = to_rsine(x).unwrap();
            let hi = to_rsine(x + dx).unwrap();
            prop_assert!(lo.rounded <= hi.rounded);
            prop_assert!((lo.raw - lo.rounded as f64).abs() <= 0.5);
        }
    }
}
