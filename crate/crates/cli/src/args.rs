use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jya",
    version,
    about = "Second-difference sine tables and friends"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a sine table with the second-difference recursion.
    Table(TableArgs),
    /// Generate a sine table by repeated halving on the grid π/(3·2^k).
    Halfangle(HalfAngleArgs),
    /// Compare a recursion table with the platform sine.
    Compare(TableArgs),
    /// Central-difference derivative estimates next to reference values.
    Diffcalc(DiffcalcArgs),
    /// Step the simple harmonic oscillator and print the run as CSV.
    Shm(ShmArgs),
    /// Check the similar-triangle construction at one point or over a sweep.
    VerifyGeometry(GeometryArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// ε = π/48, 24 nodes, historical mode.
    Aryabhata,
    /// ε = π/80, 40 nodes, historical mode.
    Exercise1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Historical,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, conflicts_with_all = ["epsilon", "count"])]
    pub preset: Option<Preset>,

    /// Grid step: degrees, or radians with --radians; `pi/48` style
    /// expressions are always radians.
    #[arg(long, required_unless_present = "preset", allow_hyphen_values = true)]
    pub epsilon: Option<String>,

    #[arg(long, required_unless_present = "preset", value_parser = clap::value_parser!(u64).range(1..))]
    pub count: Option<u64>,

    /// Defaults to the preset's mode, or historical.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,

    #[arg(long)]
    pub radians: bool,
}

#[derive(Debug, Args)]
pub struct HalfAngleArgs {
    /// Number of halvings; the grid step is π/(3·2^k).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=40))]
    pub k: u32,

    /// Nodes to emit; defaults to the whole quadrant.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: Option<u64>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct DiffcalcArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub theta: String,

    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: String,

    /// Use 2ε and ε² instead of 2 sin ε and (2 sin(ε/2))².
    #[arg(long)]
    pub textbook_denominator: bool,

    #[arg(long)]
    pub radians: bool,

    /// Override f(θ+ε); defaults to the reference sine.
    #[arg(long, allow_hyphen_values = true)]
    pub f_plus: Option<f64>,

    /// Override f(θ−ε); defaults to the reference sine.
    #[arg(long, allow_hyphen_values = true)]
    pub f_minus: Option<f64>,

    /// Override f(θ); defaults to the reference sine.
    #[arg(long, allow_hyphen_values = true)]
    pub f_center: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ShmArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub omega: f64,

    #[arg(long)]
    pub step: f64,

    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub steps: u64,

    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub y0: f64,

    /// Defaults to sin(ω·h), the sampled sine.
    #[arg(long, allow_hyphen_values = true)]
    pub y1: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    #[arg(long, requires = "phi", conflicts_with = "sweep")]
    pub theta: Option<String>,

    #[arg(long, requires = "theta")]
    pub phi: Option<String>,

    /// Sweep the valid region with THETA_STEPS × PHI_STEPS scenes.
    #[arg(long, num_args = 2, value_names = ["THETA_STEPS", "PHI_STEPS"],
          value_parser = clap::value_parser!(u64).range(1..))]
    pub sweep: Option<Vec<u64>>,

    /// Defaults to 1e-12 for a single scene and 1e-10 for a sweep.
    #[arg(long)]
    pub tol: Option<f64>,

    #[arg(long)]
    pub radians: bool,

    /// Also print the scene's point coordinates as CSV.
    #[arg(long, conflicts_with = "sweep")]
    pub points: bool,
}

/// Parses an angle: a plain number (degrees unless `radians`), or an
/// expression in π such as `pi/48`, `3*pi/48`, `2π/96` (always radians).
pub fn parse_angle(text: &str, radians: bool) -> Result<f64, String> {
    let s = text.trim().replace('π', "pi");
    let Some(pos) = s.find("pi") else {
        let value: f64 = s
            .parse()
            .map_err(|_| format!("cannot parse angle {text:?}"))?;
        return Ok(if radians { value } else { value.to_radians() });
    };

    let (head, tail) = (&s[..pos], &s[pos + 2..]);
    let head = head.trim().trim_end_matches('*').trim();
    let coefficient = match head {
        "" => 1.0,
        "-" => -1.0,
        h => h
            .parse::<f64>()
            .map_err(|_| format!("cannot parse angle {text:?}"))?,
    };
    let tail = tail.trim();
    let divisor = match tail.strip_prefix('/') {
        Some(d) => d
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("cannot parse angle {text:?}"))?,
        None if tail.is_empty() => 1.0,
        None => return Err(format!("cannot parse angle {text:?}")),
    };
    Ok(coefficient * std::f64::consts::PI / divisor)
}
