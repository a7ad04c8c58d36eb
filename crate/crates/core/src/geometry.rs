//! Coordinate check of the similar-triangle derivation of the sine and
//! cosine difference formulas.
//!
//! On the unit quadrant OX, OY the points A, B, C sit at angles θ, θ+φ and
//! θ−φ. P, Q, R are the feet of their perpendiculars on OX and S is the foot
//! of the perpendicular from C onto BQ. Triangles BSC and OPA are similar
//! with ∠SBC = ∠POA = θ, so `BS/OP = CS/AP = BC/OA`, and reading off
//! `BS = BQ − CR`, `CS = OR − OQ` gives both identities.

use std::f64::consts::FRAC_PI_2;

use crate::angle::Angle;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    fn on_circle(angle: f64) -> Self {
        Point::new(angle.cos(), angle.sin())
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Angle at `vertex` between the rays to `p` and `q`, from the clamped
/// inverse cosine of the normalised dot product.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> Angle {
    let (ux, uy) = (p.x - vertex.x, p.y - vertex.y);
    let (vx, vy) = (q.x - vertex.x, q.y - vertex.y);
    let cos = (ux * vx + uy * vy) / (ux.hypot(uy) * vx.hypot(vy));
    Angle::new_unchecked(cos.clamp(-1.0, 1.0).acos())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryScene {
    pub theta: Angle,
    pub phi: Angle,
    pub o: Point,
    pub x: Point,
    pub y: Point,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub p: Point,
    pub q: Point,
    pub r: Point,
    pub s: Point,
}

impl GeometryScene {
    pub fn named_points(&self) -> [(&'static str, Point); 10] {
        [
            ("O", self.o),
            ("X", self.x),
            ("Y", self.y),
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("P", self.p),
            ("Q", self.q),
            ("R", self.r),
            ("S", self.s),
        ]
    }
}

pub fn build_scene(theta: Angle, phi: Angle) -> Result<GeometryScene> {
    let (t, f) = (theta.radians(), phi.radians());
    if f <= 0.0 {
        return Err(Error::Domain(format!("need 0 < phi, got phi = {f}")));
    }
    if f >= t {
        return Err(Error::Domain(format!(
            "need phi < theta, got phi = {f}, theta = {t}"
        )));
    }
    if t + f >= FRAC_PI_2 {
        return Err(Error::Domain(format!(
            "need theta + phi < pi/2, got {}",
            t + f
        )));
    }

    let o = Point::new(0.0, 0.0);
    let a = Point::on_circle(t);
    let b = Point::on_circle(t + f);
    let c = Point::on_circle(t - f);
    Ok(GeometryScene {
        theta,
        phi,
        o,
        x: Point::new(1.0, 0.0),
        y: Point::new(0.0, 1.0),
        a,
        b,
        c,
        p: Point::new(a.x, 0.0),
        q: Point::new(b.x, 0.0),
        r: Point::new(c.x, 0.0),
        s: Point::new(b.x, c.y),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    pub theta: Angle,
    pub phi: Angle,
    pub angle_sbc: Angle,
    pub angle_obc: Angle,
    pub ratio_bs_op: f64,
    pub ratio_cs_ap: f64,
    pub ratio_bc_oa: f64,
    pub max_ratio_discrepancy: f64,
    /// `BS`, i.e. `sin(θ+φ) − sin(θ−φ)`.
    pub derived_sine_diff: f64,
    /// `−CS`, i.e. `cos(θ+φ) − cos(θ−φ)`.
    pub derived_cosine_diff: f64,
}

impl SimilarityReport {
    pub fn angle_error(&self) -> f64 {
        (self.angle_sbc.radians() - self.theta.radians()).abs()
    }

    /// Worst of the angle error and the ratio discrepancy.
    pub fn discrepancy(&self) -> f64 {
        self.angle_error().max(self.max_ratio_discrepancy)
    }
}

/// Measures the scene without judging it.
pub fn measure_similarity(scene: &GeometryScene) -> SimilarityReport {
    let bs = scene.b.distance(scene.s);
    let cs = scene.c.distance(scene.s);
    let bc = scene.b.distance(scene.c);
    let op = scene.o.distance(scene.p);
    let ap = scene.a.distance(scene.p);
    let oa = scene.o.distance(scene.a);

    let ratios = [bs / op, cs / ap, bc / oa];
    let mut max_ratio_discrepancy = 0.0f64;
    for i in 0..ratios.len() {
        for j in i + 1..ratios.len() {
            max_ratio_discrepancy = max_ratio_discrepancy.max((ratios[i] - ratios[j]).abs());
        }
    }

    SimilarityReport {
        theta: scene.theta,
        phi: scene.phi,
        angle_sbc: angle_at(scene.b, scene.s, scene.c),
        angle_obc: angle_at(scene.b, scene.o, scene.c),
        ratio_bs_op: ratios[0],
        ratio_cs_ap: ratios[1],
        ratio_bc_oa: ratios[2],
        max_ratio_discrepancy,
        derived_sine_diff: bs,
        derived_cosine_diff: -cs,
    }
}

pub fn verify_similarity(scene: &GeometryScene, tol: f64) -> Result<SimilarityReport> {
    let report = measure_similarity(scene);
    if report.angle_error() < tol && report.max_ratio_discrepancy < tol {
        Ok(report)
    } else {
        Err(Error::VerificationFailed(Box::new(report)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub scenes: usize,
    pub passed: usize,
    pub worst_discrepancy: f64,
    pub worst_theta: Angle,
    pub worst_phi: Angle,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.scenes
    }
}

/// Sample points of the open region `0 < φ < θ`, `θ + φ < π/2`.
///
/// θ takes cell midpoints of (0, π/2) and φ cell midpoints of
/// (0, min(θ, π/2 − θ)), so every sample is strictly interior.
pub fn sweep_points(theta_steps: usize, phi_steps: usize) -> impl Iterator<Item = (Angle, Angle)> {
    (0..theta_steps).flat_map(move |i| {
        let theta = (i as f64 + 0.5) * FRAC_PI_2 / theta_steps as f64;
        let phi_max = theta.min(FRAC_PI_2 - theta);
        (0..phi_steps).map(move |j| {
            let phi = (j as f64 + 0.5) * phi_max / phi_steps as f64;
            (Angle::new_unchecked(theta), Angle::new_unchecked(phi))
        })
    })
}

pub fn sweep_verify(theta_steps: usize, phi_steps: usize, tol: f64) -> Result<SweepSummary> {
    if theta_steps == 0 || phi_steps == 0 {
        return Err(Error::InvalidInput(
            "sweep needs at least one step per axis".into(),
        ));
    }
    let mut summary = SweepSummary {
        scenes: 0,
        passed: 0,
        worst_discrepancy: 0.0,
        worst_theta: Angle::ZERO,
        worst_phi: Angle::ZERO,
    };
    for (theta, phi) in sweep_points(theta_steps, phi_steps) {
        summary.scenes += 1;
        let Ok(scene) = build_scene(theta, phi) else {
            continue;
        };
        let report = measure_similarity(&scene);
        let discrepancy = report.discrepancy();
        if discrepancy < tol {
            summary.passed += 1;
        }
        if discrepancy >= summary.worst_discrepancy {
            summary.worst_discrepancy = discrepancy;
            summary.worst_theta = theta;
            summary.worst_phi = phi;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::{cosine_diff_rhs, sine_diff_rhs};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    fn deg(d: f64) -> Angle {
        Angle::from_degrees(d).unwrap()
    }

    fn rad(r: f64) -> Angle {
        Angle::from_radians(r).unwrap()
    }

    #[test]
    fn figure_configuration() {
        let scene = build_scene(deg(50.0), deg(10.0)).unwrap();
        for p in [scene.a, scene.b, scene.c] {
            assert!((scene.o.distance(p) - 1.0).abs() < 1e-14);
        }
        assert_eq!(scene.s.x, scene.b.x);
        assert_eq!(scene.s.x, scene.q.x);
        assert_eq!(scene.s.y, scene.c.y);

        let report = verify_similarity(&scene, 1e-12).unwrap();
        assert!((report.angle_sbc.radians() - 50f64.to_radians()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let err = build_scene(rad(FRAC_PI_4), rad(FRAC_PI_4)).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("phi < theta")));
        assert!(matches!(
            build_scene(rad(0.5), rad(0.0)),
            Err(Error::Domain(ref m)) if m.contains("0 < phi")
        ));
        assert!(matches!(
            build_scene(rad(1.2), rad(0.5)),
            Err(Error::Domain(ref m)) if m.contains("pi/2")
        ));
    }

    #[test]
    fn chord_length() {
        let scene = build_scene(rad(FRAC_PI_3), rad(PI_12)).unwrap();
        let bc = scene.b.distance(scene.c);
        assert!((bc - 2.0 * PI_12.sin()).abs() < 1e-14);
    }
    const PI_12: f64 = std::f64::consts::PI / 12.0;

    #[test]
    fn tight_tolerance_reports_failure() {
        let scene = build_scene(deg(50.0), deg(10.0)).unwrap();
        match verify_similarity(&scene, 0.0) {
            Err(Error::VerificationFailed(report)) => {
                assert!((report.theta.degrees() - 50.0).abs() < 1e-12)
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn single_cell_sweep() {
        let s = sweep_verify(1, 1, 1e-10).unwrap();
        assert_eq!(s.scenes, 1);
        assert_eq!(s.passed, 1);
        assert!((s.worst_theta.radians() - FRAC_PI_4).abs() < 1e-15);
        assert!((s.worst_phi.radians() - FRAC_PI_4 / 2.0).abs() < 1e-15);
        assert!(sweep_verify(0, 3, 1e-10).is_err());
    }

    #[test]
    fn sweep_points_are_interior() {
        for (t, p) in sweep_points(40, 40) {
            assert!(build_scene(t, p).is_ok(), "θ={t} φ={p}");
        }
    }

    proptest! {
        #[test]
        fn geometry_matches_algebra(theta in 1e-3f64..FRAC_PI_2, u in 0.01f64..0.99) {
            let phi = u * theta.min(FRAC_PI_2 - theta);
            let (t, p) = (rad(theta), rad(phi));
            let scene = build_scene(t, p).unwrap();
            let report = measure_similarity(&scene);

            // BS = BQ − CR and CS = OR − OQ
            let bq_cr = scene.b.distance(scene.q) - scene.c.distance(scene.r);
            let or_oq = scene.o.distance(scene.r) - scene.o.distance(scene.q);
            prop_assert!((report.derived_sine_diff - bq_cr).abs() < 1e-15);
            prop_assert!((-report.derived_cosine_diff - or_oq).abs() < 1e-15);

            prop_assert!((report.derived_sine_diff - sine_diff_rhs(t, p)).abs() < 1e-12);
            prop_assert!((report.derived_cosine_diff - cosine_diff_rhs(t, p)).abs() < 1e-12);

            prop_assert!((scene.o.distance(scene.b) - scene.o.distance(scene.c)).abs() < 1e-14);
            let expected_obc = FRAC_PI_2 - phi;
            prop_assert!((report.angle_obc.radians() - expected_obc).abs() < 1e-12);
        }
    }
}
