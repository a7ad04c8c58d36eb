//! Angle and arcminute types.
//!
//! Angles are always stored in radians. Degrees and arcminutes are
//! presentation units and only appear at conversion boundaries.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact number of arcminutes in one radian (`10800 / π ≈ 3437.7468`).
pub const ARCMINUTES_PER_RADIAN: f64 = 10_800.0 / PI;

/// A finite angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const RIGHT: Angle = Angle(FRAC_PI_2);

    pub fn from_radians(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Angle(radians))
        } else {
            Err(Error::InvalidInput(format!(
                "angle must be finite, got {radians}"
            )))
        }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        Self::from_radians(degrees.to_radians())
    }

    pub fn from_arcminutes(minutes: Arcminutes) -> Self {
        Angle(minutes.0 / ARCMINUTES_PER_RADIAN)
    }

    /// `π / divisor`, the usual way table steps are named (`π/48`, `π/80`).
    pub fn pi_over(divisor: f64) -> Result<Self> {
        Self::from_radians(PI / divisor)
    }

    /// Only for values already known to be finite.
    pub(crate) const fn new_unchecked(radians: f64) -> Self {
        Angle(radians)
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn to_arcminutes(self) -> Arcminutes {
        Arcminutes(self.0 * ARCMINUTES_PER_RADIAN)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rad", self.0)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle(-self.0)
    }
}

impl Mul<f64> for Angle {
    type Output = Angle;
    fn mul(self, rhs: f64) -> Angle {
        Angle(self.0 * rhs)
    }
}

/// Minutes of arc.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Arcminutes(f64);

impl Arcminutes {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Arcminutes(value))
        } else {
            Err(Error::InvalidInput(format!(
                "arcminutes must be finite, got {value}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_finite() {
        assert!(Angle::from_radians(f64::NAN).is_err());
        assert!(Angle::from_radians(f64::INFINITY).is_err());
        assert!(Angle::from_degrees(f64::NEG_INFINITY).is_err());
        assert!(Arcminutes::new(f64::NAN).is_err());
    }

    #[test]
    fn table_step_is_225_minutes() {
        let step = Angle::pi_over(48.0).unwrap();
        assert!((step.degrees() - 3.75).abs() < 1e-12);
        assert!((step.to_arcminutes().value() - 225.0).abs() < 1e-10);
    }

    #[test]
    fn one_radian_in_minutes() {
        let m = Angle::from_radians(1.0).unwrap().to_arcminutes().value();
        assert!((m - 3437.746770784939).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn arcminute_round_trip(r in -10.0f64..10.0) {
            let a = Angle::from_radians(r).unwrap();
            let back = Angle::from_arcminutes(a.to_arcminutes());
            prop_assert!((back.radians() - r).abs() < 1e-12);
        }
    }
}
