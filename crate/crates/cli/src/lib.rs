//! Command-line front end. Exit codes: 0 success, 1 verification or
//! containment failure, 2 usage error.

use std::f64::consts::{PI, TAU};
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kakeya_core::figure::{render_annulus_svg, render_chain_svg, FigureStyle};
use kakeya_core::parse::{parse_coeffs, parse_theta};
use kakeya_core::poly_bounds::ek_annulus;
use kakeya_core::roots::{check_annulus_membership, find_roots};
use kakeya_core::{
    kakeya, tomic, Angle, ChainConstruction, CoefficientSequence, Error, NonvanishingWitness,
    VerificationReport,
};
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
const SWEEP_EXCLUSION: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "kakeya",
    version,
    about = "Enestrom-Kakeya annuli and interlacing circle chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the annulus that contains every zero
    Bounds(Common),
    /// Build the circle chain for the partial sums at one angle
    Construct(Common),
    /// Build and verify a chain, including the non-vanishing of the last sum
    Verify(Common),
    /// Find all zeros and check them against the annulus
    Roots(Common),
    /// Render a chain (or the annulus with --kind annulus) as SVG
    Figure(FigureArgs),
    /// Verify over a grid of angles and report the worst residuals
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Coefficients, constant term first: `1,2,3` or `[1, 2, 3]`
    #[arg(long)]
    pub coeffs: String,
    /// Radians, or `pi`, `pi/2`, `2pi/3`, `kpi/m`
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, value_enum, default_value_t = OrientationArg::External)]
    pub orientation: OrientationArg,
    #[arg(long, env = "EK_TOLERANCE", default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Write data here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = FigureKind::Chain)]
    pub kind: FigureKind,
    #[arg(long, default_value_t = 800)]
    pub width: u32,
    #[arg(long, default_value_t = 800)]
    pub height: u32,
    #[arg(long)]
    pub no_labels: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Number of grid angles over [0, 2pi)
    #[arg(long, default_value_t = 720)]
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    External,
    Internal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    Chain,
    Annulus,
}

/// What went wrong, already sorted into an exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit 2.
    Usage(String),
    /// The computation ran but a check failed; exit 1. Carries any data
    /// that should still be printed.
    Check { diagnostic: String, output: Vec<u8> },
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check { .. } => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RootOfUnityCase { .. }
            | Error::Vanishing { .. }
            | Error::NotConverged { .. } => Failure::Check {
                diagnostic: e.to_string(),
                output: Vec::new(),
            },
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<Vec<u8>, Failure>;

fn json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec(v).expect("values serialize");
    out.push(b'\n');
    out
}

fn coeffs(c: &Common) -> Result<CoefficientSequence, Failure> {
    parse_coeffs(&c.coeffs).map_err(|e| Failure::Usage(format!("--coeffs: {e}")))
}

fn theta(c: &Common) -> Result<Angle, Failure> {
    let raw = c
        .theta
        .as_deref()
        .ok_or_else(|| Failure::Usage("--theta is required for this command".into()))?;
    parse_theta(raw)
        .map(Angle::new)
        .map_err(|e| Failure::Usage(format!("--theta: {e}")))
}

fn tolerance(c: &Common) -> Result<f64, Failure> {
    if c.tolerance.is_finite() && c.tolerance > 0.0 {
        Ok(c.tolerance)
    } else {
        Err(Failure::Usage("tolerance must be a positive number".into()))
    }
}

fn build(
    c: &CoefficientSequence,
    theta: Angle,
    o: OrientationArg,
) -> Result<ChainConstruction, Error> {
    match o {
        OrientationArg::External => kakeya::build_chain(c, theta),
        OrientationArg::Internal => tomic::build_chain_internal(c, theta),
    }
}

fn verify(
    chain: &ChainConstruction,
    o: OrientationArg,
    tol: f64,
) -> Result<VerificationReport, Error> {
    match o {
        OrientationArg::External => kakeya::verify_chain(chain, tol),
        OrientationArg::Internal => tomic::verify_chain_internal(chain, tol),
    }
}

fn witness(
    c: &CoefficientSequence,
    theta: Angle,
    o: OrientationArg,
) -> Result<NonvanishingWitness, Error> {
    match o {
        OrientationArg::External => kakeya::nonvanishing_witness(c, theta),
        OrientationArg::Internal => tomic::nonvanishing_witness_internal(c, theta),
    }
}

fn cmd_bounds(args: &Common) -> Outcome {
    let a = ek_annulus(&coeffs(args)?)?;
    Ok(match args.format {
        Format::Text => format!(
            "{} < |z| < {}{}\n",
            a.inner,
            a.outer,
            if a.degenerate { " (degenerate)" } else { "" }
        )
        .into_bytes(),
        _ => json(&a),
    })
}

fn cmd_construct(args: &Common) -> Outcome {
    let chain = build(&coeffs(args)?, theta(args)?, args.orientation)?;
    Ok(match args.format {
        Format::Json => json(&chain),
        Format::Svg => render_chain_svg(&chain, &FigureStyle::default())?,
        Format::Text => {
            let mut s = format!(
                "{} chain, theta = {}, {} sums{}\n",
                chain.orientation.as_str(),
                chain.theta.theta(),
                chain.sums.len(),
                if chain.degenerate_axis {
                    ", on the real axis"
                } else {
                    ""
                }
            );
            for (k, c) in chain.circles.iter().enumerate() {
                s.push_str(&format!(
                    "circle {k}: center ({}, {}) radius {}\n",
                    c.center.x, c.center.y, c.radius
                ));
            }
            s.into_bytes()
        }
    })
}

fn cmd_verify(args: &Common) -> Outcome {
    let c = coeffs(args)?;
    let theta = theta(args)?;
    let tol = tolerance(args)?;
    let chain = build(&c, theta, args.orientation)?;
    let w = witness(&c, theta, args.orientation)?;
    if chain.degenerate_axis {
        // the sign rules reduce to the non-vanishing witness
        return Ok(match args.format {
            Format::Text => format!(
                "axis case: last partial sum {} (margin {:e})\n",
                w.endpoint.x,
                w.margin()
            )
            .into_bytes(),
            _ => json(&w),
        });
    }
    let report = verify(&chain, args.orientation, tol)?;
    let out = match args.format {
        Format::Text => format!(
            "{}: tangency {:e}, membership {:e}, probe {:e}, collinearity {:e}, |last sum| {}\n",
            if report.passed { "passed" } else { "FAILED" },
            report.worst_tangency(),
            report.worst_membership(),
            report.worst_probe(),
            report.worst_collinearity(),
            report.nonvanishing_magnitude
        )
        .into_bytes(),
        _ => json(&report),
    };
    if report.passed {
        Ok(out)
    } else {
        Err(Failure::Check {
            diagnostic: format!("verification failed at tolerance {tol:e}"),
            output: out,
        })
    }
}

fn cmd_roots(args: &Common) -> Outcome {
    let c = coeffs(args)?;
    let tol = tolerance(args)?;
    let annulus = ek_annulus(&c)?;
    let roots = find_roots(&c)?;
    let report = check_annulus_membership(&roots, &annulus, tol);
    let out = match args.format {
        Format::Text => roots
            .roots
            .iter()
            .zip(&roots.residuals)
            .map(|(z, r)| format!("{} {} |z| = {} residual {:e}\n", z.re, z.im, z.norm(), r))
            .collect::<String>()
            .into_bytes(),
        _ => json(&roots),
    };
    if !roots.converged {
        return Err(Failure::Check {
            diagnostic: format!(
                "root iteration did not converge after {} iterations",
                roots.iterations
            ),
            output: out,
        });
    }
    if !report.passed {
        let worst = report
            .violations
            .iter()
            .map(|v| {
                format!(
                    "root {} |z| = {} outside by {:e}",
                    v.index, v.modulus, v.margin
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Failure::Check {
            diagnostic: format!("annulus violation: {worst}"),
            output: out,
        });
    }
    Ok(out)
}

fn cmd_figure(args: &FigureArgs) -> Outcome {
    let common = &args.common;
    let c = coeffs(common)?;
    let style = FigureStyle {
        width_px: args.width,
        height_px: args.height,
        label_toggle: !args.no_labels,
        ..FigureStyle::default()
    };
    match args.kind {
        FigureKind::Chain => {
            let chain = build(&c, theta(common)?, common.orientation)?;
            Ok(render_chain_svg(&chain, &style)?)
        }
        FigureKind::Annulus => {
            let annulus = ek_annulus(&c)?;
            let roots = find_roots(&c)?;
            Ok(render_annulus_svg(&annulus, Some(&roots), &style)?)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SweepSummary {
    pub orientation: &'static str,
    pub count: usize,
    pub evaluated: usize,
    pub worst_tangency: f64,
    pub worst_membership: f64,
    pub worst_probe: f64,
    pub worst_collinearity: f64,
    pub worst_nesting: f64,
    pub min_nonvanishing: f64,
    pub failures: Vec<SweepFailure>,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct SweepFailure {
    pub theta: f64,
    pub reason: String,
}

/// Midpoint grid over `[0, 2pi)` minus the neighbourhoods of `0` and `pi`.
pub fn sweep_grid(count: usize) -> Vec<f64> {
    (0..count)
        .map(|j| (j as f64 + 0.5) * TAU / count as f64)
        .filter(|t| {
            t.abs() >= SWEEP_EXCLUSION
                && (t - PI).abs() >= SWEEP_EXCLUSION
                && (TAU - t).abs() >= SWEEP_EXCLUSION
        })
        .collect()
}

fn cmd_sweep(args: &SweepArgs) -> Outcome {
    let common = &args.common;
    let c = coeffs(common)?;
    let tol = tolerance(common)?;
    if args.count == 0 {
        return Err(Failure::Usage("--count must be positive".into()));
    }
    let orientation = common.orientation;
    // fail fast on hypothesis violations before fanning out
    build(&c, Angle::new(1.0), orientation)?;

    let grid = sweep_grid(args.count);
    let results: Vec<(f64, Result<VerificationReport, Error>)> = grid
        .par_iter()
        .map(|&t| {
            let theta = Angle::new(t);
            let r = build(&c, theta, orientation).and_then(|chain| {
                witness(&c, theta, orientation)?;
                verify(&chain, orientation, tol)
            });
            (t, r)
        })
        .collect();

    let mut summary = SweepSummary {
        orientation: match orientation {
            OrientationArg::External => "external",
            OrientationArg::Internal => "internal",
        },
        count: args.count,
        evaluated: results.len(),
        worst_tangency: 0.0,
        worst_membership: 0.0,
        worst_probe: 0.0,
        worst_collinearity: 0.0,
        worst_nesting: 0.0,
        min_nonvanishing: f64::INFINITY,
        failures: Vec::new(),
        passed: true,
    };
    for (t, r) in results {
        match r {
            Ok(rep) => {
                summary.worst_tangency = summary.worst_tangency.max(rep.worst_tangency());
                summary.worst_membership = summary.worst_membership.max(rep.worst_membership());
                summary.worst_probe = summary.worst_probe.max(rep.worst_probe());
                summary.worst_collinearity =
                    summary.worst_collinearity.max(rep.worst_collinearity());
                summary.worst_nesting = summary.worst_nesting.max(rep.worst_nesting());
                summary.min_nonvanishing = summary.min_nonvanishing.min(rep.nonvanishing_magnitude);
                if !rep.passed {
                    summary.failures.push(SweepFailure {
                        theta: t,
                        reason: "residual above tolerance".into(),
                    });
                }
            }
            Err(e) => summary.failures.push(SweepFailure {
                theta: t,
                reason: e.to_string(),
            }),
        }
    }
    summary.passed = summary.failures.is_empty();

    let out = match common.format {
        Format::Text => format!(
            "{} angles: tangency {:e}, membership {:e}, probe {:e}, collinearity {:e}, min |last sum| {}, {} failures\n",
            summary.evaluated,
            summary.worst_tangency,
            summary.worst_membership,
            summary.worst_probe,
            summary.worst_collinearity,
            summary.min_nonvanishing,
            summary.failures.len()
        )
        .into_bytes(),
        _ => json(&summary),
    };
    if summary.passed {
        Ok(out)
    } else {
        Err(Failure::Check {
            diagnostic: format!(
                "{} of {} angles failed",
                summary.failures.len(),
                summary.evaluated
            ),
            output: out,
        })
    }
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Bounds(c) | Command::Construct(c) | Command::Verify(c) | Command::Roots(c) => {
            c.output.as_ref()
        }
        Command::Figure(f) => f.common.output.as_ref(),
        Command::Sweep(s) => s.common.output.as_ref(),
    }
}

pub fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Bounds(c) => cmd_bounds(c),
        Command::Construct(c) => cmd_construct(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Roots(c) => cmd_roots(c),
        Command::Figure(f) => cmd_figure(f),
        Command::Sweep(s) => cmd_sweep(s),
    }
}

/// Runs one command, writing data to `stdout` (or `--output`) and a single
/// diagnostic line to `stderr`. Returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let (data, failure) = match execute(&cli.command) {
        Ok(data) => (data, None),
        Err(Failure::Check { diagnostic, output }) => (output, Some((1, diagnostic))),
        Err(Failure::Usage(msg)) => (Vec::new(), Some((2, msg))),
    };
    if !data.is_empty() {
        let written = match output_path(&cli.command) {
            Some(path) => std::fs::write(path, &data)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => stdout.write_all(&data).map_err(|e| e.to_string()),
        };
        if let Err(msg) = written {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    }
    match failure {
        None => 0,
        Some((code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}
