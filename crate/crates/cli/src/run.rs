use std::fmt::Write as _;

use jya::export::{oscillator_csv, scene_csv, sweep_csv};
use jya::{
    build_scene, central_first_derivative, central_second_derivative, compare_with_reference,
    export_table, generate_half_angle_table, generate_recursion_table, halving_grid, integrate_shm,
    reference_cos, reference_sin, sweep_verify, verify_similarity, Angle, AngleGrid, Denominator,
    Error, Format, Mode, RecursionConfig, SampledPair, SimilarityReport,
};

use crate::args::{
    parse_angle, Command, DiffcalcArgs, FormatArg, GeometryArgs, HalfAngleArgs, ModeArg, Preset,
    ShmArgs, TableArgs,
};

pub const DEFAULT_SCENE_TOL: f64 = 1e-12;
pub const DEFAULT_SWEEP_TOL: f64 = 1e-10;

#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            warnings: Vec::new(),
            success: true,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad flag values; exit code 2.
    Usage(String),
    /// Errors raised by the library; exit code 1.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err)
    }
}

pub fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Table(args) => table(&args),
        Command::Halfangle(args) => half_angle(&args),
        Command::Compare(args) => compare(&args),
        Command::Diffcalc(args) => diffcalc(&args),
        Command::Shm(args) => shm(&args),
        Command::VerifyGeometry(args) => verify_geometry(&args),
    }
}

fn format_of(arg: FormatArg) -> Format {
    match arg {
        FormatArg::Csv => Format::Csv,
        FormatArg::Markdown => Format::Markdown,
    }
}

fn angle(text: &str, radians: bool) -> Result<Angle, Failure> {
    let value = parse_angle(text, radians).map_err(Failure::Usage)?;
    Angle::from_radians(value).map_err(|e| Failure::Usage(e.to_string()))
}

fn recursion_config(args: &TableArgs) -> Result<RecursionConfig, Failure> {
    let (epsilon, count, preset_mode) = match args.preset {
        Some(Preset::Aryabhata) => (Angle::pi_over(48.0)?, 24, Mode::Historical),
        Some(Preset::Exercise1) => (Angle::pi_over(80.0)?, 40, Mode::Historical),
        None => {
            // clap guarantees both are present without a preset
            let eps = angle(args.epsilon.as_deref().unwrap_or_default(), args.radians)?;
            (eps, args.count.unwrap_or(0) as usize, Mode::Historical)
        }
    };
    let mode = match args.mode {
        Some(ModeArg::Historical) => Mode::Historical,
        Some(ModeArg::Exact) => Mode::Exact,
        None => preset_mode,
    };
    let grid = AngleGrid::new(epsilon, count)?;
    Ok(RecursionConfig::new(grid, mode))
}

fn quadrant_warning(beyond: bool) -> Vec<String> {
    if beyond {
        vec!["grid extends past 90°; values there come from the same recursion".into()]
    } else {
        Vec::new()
    }
}

fn table(args: &TableArgs) -> Result<Outcome, Failure> {
    let cfg = recursion_config(args)?;
    let (table, _) = generate_recursion_table(&cfg)?;
    let mut out = Outcome::ok(export_table(&table, format_of(args.format)));
    out.warnings = quadrant_warning(table.extends_beyond_quadrant());
    Ok(out)
}

fn half_angle(args: &HalfAngleArgs) -> Result<Outcome, Failure> {
    let count = match args.count {
        Some(c) => c as usize,
        None => 3usize << (args.k - 1),
    };
    let grid = halving_grid(args.k, count)?;
    let table = generate_half_angle_table(&grid)?;
    Ok(Outcome::ok(export_table(&table, format_of(args.format))))
}

fn compare(args: &TableArgs) -> Result<Outcome, Failure> {
    let cfg = recursion_config(args)?;
    let (table, _) = generate_recursion_table(&cfg)?;
    let report = compare_with_reference(&table);
    let passed = report.passes(cfg.mode());

    let mut s = String::new();
    s.push_str("index,angle_deg,computed_sine,reference_sine,error_minutes,rsine,reference_rsine,deviation\n");
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{},{:.2},{:.4},{:.4},{:.3},{},{},{}",
            r.index,
            r.angle.degrees(),
            r.computed_sine,
            r.reference_sine,
            r.error_minutes,
            r.rsine,
            r.reference_rsine,
            r.rsine_deviation()
        );
    }
    let _ = writeln!(s, "mode: {}", cfg.mode());
    let _ = writeln!(s, "nodes: {}", report.rows.len());
    let _ = writeln!(s, "max_abs_error: {:.4e}", report.max_abs_error);
    let _ = writeln!(s, "max_error_minutes: {:.3}", report.max_error_minutes);
    let _ = writeln!(s, "max_rsine_deviation: {}", report.max_rsine_deviation());
    let _ = writeln!(s, "rsine_exceedances: {}", report.rsine_exceedances);
    match cfg.mode() {
        Mode::Historical => s.push_str("threshold: 1 minute\n"),
        Mode::Exact => s.push_str("threshold: 1e-9\n"),
    }
    let _ = writeln!(s, "result: {}", if passed { "PASS" } else { "FAIL" });

    Ok(Outcome {
        stdout: s,
        warnings: quadrant_warning(report.beyond_quadrant),
        success: passed,
    })
}

fn diffcalc(args: &DiffcalcArgs) -> Result<Outcome, Failure> {
    let theta = angle(&args.theta, args.radians)?;
    let epsilon = angle(&args.epsilon, args.radians)?;
    let denominator = if args.textbook_denominator {
        Denominator::Textbook
    } else {
        Denominator::Identity
    };

    let f_plus = args
        .f_plus
        .unwrap_or_else(|| reference_sin(theta + epsilon));
    let f_minus = args
        .f_minus
        .unwrap_or_else(|| reference_sin(theta - epsilon));
    let f_center = args.f_center.unwrap_or_else(|| reference_sin(theta));
    let pair = SampledPair::new(theta, epsilon, f_plus, f_minus)?;
    let first = central_first_derivative(&pair, denominator)?;
    let second = central_second_derivative(f_plus, f_center, f_minus, epsilon, denominator)?;
    let first_ref = reference_cos(theta);
    let second_ref = -reference_sin(theta);

    let eps = epsilon.radians();
    let mut s = String::new();
    let _ = writeln!(s, "theta_deg: {:.4}", theta.degrees());
    let _ = writeln!(s, "epsilon_deg: {:.4}", epsilon.degrees());
    let _ = writeln!(
        s,
        "denominator: {} {:.4}",
        match denominator {
            Denominator::Identity => "2sin(eps)",
            Denominator::Textbook => "2eps",
        },
        denominator.first(eps)
    );
    let _ = writeln!(s, "f_plus: {f_plus:.4}");
    let _ = writeln!(s, "f_center: {f_center:.4}");
    let _ = writeln!(s, "f_minus: {f_minus:.4}");
    s.push_str("quantity,estimate,reference,estimate_full,reference_full,abs_error\n");
    for (name, est, reference) in [
        ("first_derivative", first, first_ref),
        ("second_derivative", second, second_ref),
    ] {
        let _ = writeln!(
            s,
            "{name},{est:.2},{reference:.2},{est:.10},{reference:.10},{:.3e}",
            (est - reference).abs()
        );
    }
    Ok(Outcome::ok(s))
}

fn shm(args: &ShmArgs) -> Result<Outcome, Failure> {
    let y1 = args.y1.unwrap_or_else(|| (args.omega * args.step).sin());
    let run = integrate_shm(args.omega, args.step, args.steps as usize, args.y0, y1)?;
    Ok(Outcome::ok(oscillator_csv(&run)))
}

fn similarity_text(report: &SimilarityReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theta_deg: {:.6}", report.theta.degrees());
    let _ = writeln!(s, "phi_deg: {:.6}", report.phi.degrees());
    let _ = writeln!(s, "angle_SBC_deg: {:.12}", report.angle_sbc.degrees());
    let _ = writeln!(s, "angle_OBC_deg: {:.12}", report.angle_obc.degrees());
    let _ = writeln!(s, "ratio_BS_OP: {:.15}", report.ratio_bs_op);
    let _ = writeln!(s, "ratio_CS_AP: {:.15}", report.ratio_cs_ap);
    let _ = writeln!(s, "ratio_BC_OA: {:.15}", report.ratio_bc_oa);
    let _ = writeln!(
        s,
        "max_ratio_discrepancy: {:.3e}",
        report.max_ratio_discrepancy
    );
    let _ = writeln!(s, "angle_error: {:.3e}", report.angle_error());
    let _ = writeln!(s, "derived_sine_diff: {:.15}", report.derived_sine_diff);
    let _ = writeln!(s, "derived_cosine_diff: {:.15}", report.derived_cosine_diff);
    s
}

fn verify_geometry(args: &GeometryArgs) -> Result<Outcome, Failure> {
    if let Some(steps) = &args.sweep {
        let tol = args.tol.unwrap_or(DEFAULT_SWEEP_TOL);
        let summary = sweep_verify(steps[0] as usize, steps[1] as usize, tol)?;
        return Ok(Outcome {
            stdout: sweep_csv(&summary),
            warnings: Vec::new(),
            success: summary.all_passed(),
        });
    }

    let tol = args.tol.unwrap_or(DEFAULT_SCENE_TOL);
    let (theta, phi) = match (&args.theta, &args.phi) {
        (Some(t), Some(p)) => (angle(t, args.radians)?, angle(p, args.radians)?),
        _ => (Angle::from_degrees(50.0)?, Angle::from_degrees(10.0)?),
    };
    let scene = build_scene(theta, phi)?;
    let (report, success) = match verify_similarity(&scene, tol) {
        Ok(report) => (report, true),
        Err(Error::VerificationFailed(report)) => (*report, false),
        Err(other) => return Err(other.into()),
    };
    let mut stdout = similarity_text(&report);
    let _ = writeln!(stdout, "tolerance: {tol:e}");
    let _ = writeln!(stdout, "result: {}", if success { "PASS" } else { "FAIL" });
    if args.points {
        stdout.push_str(&scene_csv(&scene));
    }
    Ok(Outcome {
        stdout,
        warnings: Vec::new(),
        success,
    })
}
