//! Command-line front end: parse figures/measures/certificates from JSON,
//! dispatch to the library, and emit canonical JSON or SVG.
//!
//! Exit codes: 0 success, 2 infeasible problem or failed verification (the
//! report is still printed), 1 input or usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use convexkit::error::Error;
use convexkit::extremal::{
    lens_2d, pareto_perturbation_scan, pareto_vector_isoperimetric, solve_external_urysohn_triangle,
    stadium, verify_current_hyperplane, verify_external_optimality, verify_flattening_optimality,
    VerificationReport,
};
use convexkit::majorize::{
    affine_majorization_check, linear_majorization_check, MajorizationOutcome, PointMeasure,
};
use convexkit::measure::{pairing, surface_measure_discrete, volume};
use convexkit::render::{render_svg, Overlay, RenderStyle};
use convexkit::schema::{
    from_json_str, to_canonical_json, FigureSpec, FlatteningCertSpec, HyperplaneCertSpec,
    MeasureSpec, ParetoSpec, ReportSpec, ScanSpec, UrysohnCertSpec,
};
use convexkit::support::{integral_breadth, minkowski_sum, DirectionGrid};
use convexkit::ConvexFigure;

#[derive(Parser)]
#[command(name = "convexkit", version, about = "Planar convex-body calculus: support functions, surface-area measures, majorization certificates, and Urysohn-type solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args, Clone)]
struct GlobalArgs {
    /// Direction-grid resolution for discretized disks and balls.
    #[arg(long, global = true, default_value_t = 360)]
    grid: usize,

    /// Seed for perturbation scans.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Relative tolerance for verification residuals.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol: f64,

    /// Write output to a file instead of standard output.
    #[arg(short, global = true, value_name = "FILE")]
    o: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize a figure spec as a canonical polygon.
    Body { file: PathBuf },
    /// Surface-area measure of a figure.
    Measure { file: PathBuf },
    /// Minkowski sum of two figures.
    Sum { a: PathBuf, b: PathBuf },
    /// Mixed volume V1(y, x) of two figures.
    Mixedvol { y: PathBuf, x: PathBuf },
    /// Majorization check between two measures.
    Majorize {
        /// Linear majorization of circle measures.
        #[arg(long, conflicts_with = "affine")]
        linear: bool,
        /// Affine (Choquet) majorization of the induced point measures.
        #[arg(long)]
        affine: bool,
        a: PathBuf,
        b: PathBuf,
    },
    /// Solve a closed-form extremal problem.
    Solve {
        #[command(subcommand)]
        problem: SolveProblem,
    },
    /// Verify an optimality certificate.
    Verify {
        #[command(subcommand)]
        problem: VerifyProblem,
    },
    /// Pareto point of the vector isoperimetric problem.
    Pareto {
        /// Target area of the solution.
        #[arg(long)]
        target: f64,
        /// Comma-separated positive Minkowski weights, one per figure.
        #[arg(long)]
        weights: String,
        /// Run a perturbation scan with this many samples.
        #[arg(long, default_value_t = 0)]
        scan: usize,
        files: Vec<PathBuf>,
    },
    /// Render a figure (with optional overlays) as SVG.
    Render {
        file: PathBuf,
        /// Additional outlines, drawn dashed.
        #[arg(long, value_name = "FILE")]
        outline: Vec<PathBuf>,
        /// Measure whose atoms are drawn as boundary arrows.
        #[arg(long, value_name = "FILE")]
        atoms: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SolveProblem {
    /// Maximal-area convex superset of an equilateral triangle at fixed
    /// integral breadth.
    UrysohnTriangle {
        #[arg(long)]
        side: f64,
        #[arg(long)]
        breadth: f64,
    },
    /// Intersection of two equal disks through the segment [-a, a] x {0}.
    Lens {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        r: f64,
    },
    /// Minkowski sum of a disk and a horizontal segment.
    Stadium {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        l: f64,
    },
}

#[derive(Subcommand)]
enum VerifyProblem {
    /// External Urysohn optimality of CANDIDATE over CONSTRAINT.
    Urysohn {
        candidate: PathBuf,
        constraint: PathBuf,
        cert: PathBuf,
    },
    /// Internal Urysohn with flattening of CANDIDATE inside CONSTRAINT.
    Flattening {
        candidate: PathBuf,
        constraint: PathBuf,
        cert: PathBuf,
    },
    /// Current-hyperplane optimality of the pair (FIRST, SECOND) in CONSTRAINT.
    Hyperplane {
        first: PathBuf,
        second: PathBuf,
        constraint: PathBuf,
        cert: PathBuf,
        /// Read condition (5)'s contact set from the second component
        /// instead of the first.
        #[arg(long)]
        supp_y: bool,
    },
}

/// Outcome of one dispatch: the document to print and the exit code.
struct Outcome {
    text: String,
    code: u8,
}

fn ok_json<T: serde::Serialize>(value: &T) -> Result<Outcome, Error> {
    Ok(Outcome { text: to_canonical_json(value)?, code: 0 })
}

fn report_outcome(report: &VerificationReport) -> Result<Outcome, Error> {
    let spec = ReportSpec::from_report(report);
    Ok(Outcome {
        text: to_canonical_json(&spec)?,
        code: if report.pass() { 0 } else { 2 },
    })
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
    })
}

fn load_figure(path: &Path, grid: DirectionGrid) -> Result<ConvexFigure, Error> {
    from_json_str::<FigureSpec>(&read(path)?)?.to_figure(grid)
}

fn load_measure(path: &Path) -> Result<convexkit::DiscreteMeasure, Error> {
    from_json_str::<MeasureSpec>(&read(path)?)?.to_measure()
}

fn majorize_json(out: &MajorizationOutcome) -> serde_json::Value {
    let mut v = json!({
        "feasible": out.feasible,
        "residual": out.residual,
    });
    if let Some(cert) = &out.certificate {
        v["certificate"] = json!({
            "parts": cert.matrix,
            "slack": cert.slack,
        });
    }
    v
}

fn dispatch(cmd: &Command, g: &GlobalArgs) -> Result<Outcome, Error> {
    let grid = DirectionGrid::new(g.grid)?;
    match cmd {
        Command::Body { file } => {
            let fig = load_figure(file, grid)?;
            ok_json(&FigureSpec::from_figure(&fig))
        }
        Command::Measure { file } => {
            let fig = load_figure(file, grid)?;
            let mu = surface_measure_discrete(&fig)?;
            ok_json(&MeasureSpec::from_measure(&mu))
        }
        Command::Sum { a, b } => {
            let x = load_figure(a, grid)?;
            let y = load_figure(b, grid)?;
            ok_json(&FigureSpec::from_figure(&minkowski_sum(&x, &y)))
        }
        Command::Mixedvol { y, x } => {
            let fy = load_figure(y, grid)?;
            let fx = load_figure(x, grid)?;
            let v1 = pairing(&fx, &surface_measure_discrete(&fy)?);
            ok_json(&json!({ "V1": v1 }))
        }
        Command::Majorize { linear, affine, a, b } => {
            let mu = load_measure(a)?;
            let nu = load_measure(b)?;
            let out = if *affine && !*linear {
                affine_majorization_check(
                    &PointMeasure::from_circle_measure(&mu),
                    &PointMeasure::from_circle_measure(&nu),
                )
            } else {
                linear_majorization_check(&mu, &nu)
            };
            ok_json(&majorize_json(&out))
        }
        Command::Solve { problem } => match problem {
            SolveProblem::UrysohnTriangle { side, breadth } => {
                let (body, cert) = solve_external_urysohn_triangle(*side, *breadth, grid)?;
                ok_json(&json!({
                    "body": FigureSpec::from_figure(&body),
                    "certificate": UrysohnCertSpec::from_cert(&cert),
                    "area": volume(&body),
                    "breadth": integral_breadth(&body, grid),
                }))
            }
            SolveProblem::Lens { a, r } => {
                let body = lens_2d(*a, *r, grid.len())?;
                ok_json(&json!({
                    "body": FigureSpec::from_figure(&body),
                    "area": volume(&body),
                }))
            }
            SolveProblem::Stadium { r, l } => {
                let body = stadium(*r, *l, grid.len())?;
                ok_json(&json!({
                    "body": FigureSpec::from_figure(&body),
                    "area": volume(&body),
                }))
            }
        },
        Command::Verify { problem } => match problem {
            VerifyProblem::Urysohn { candidate, constraint, cert } => {
                let xbar = load_figure(candidate, grid)?;
                let x0 = load_figure(constraint, grid)?;
                let cert = from_json_str::<UrysohnCertSpec>(&read(cert)?)?.to_cert()?;
                report_outcome(&verify_external_optimality(&xbar, &x0, &cert, g.tol, grid))
            }
            VerifyProblem::Flattening { candidate, constraint, cert } => {
                let xbar = load_figure(candidate, grid)?;
                let x0 = load_figure(constraint, grid)?;
                let cert = from_json_str::<FlatteningCertSpec>(&read(cert)?)?.to_cert()?;
                report_outcome(&verify_flattening_optimality(&xbar, &x0, &cert, g.tol, grid))
            }
            VerifyProblem::Hyperplane { first, second, constraint, cert, supp_y } => {
                let xbar = load_figure(first, grid)?;
                let ybar = load_figure(second, grid)?;
                let x0 = load_figure(constraint, grid)?;
                let cert = from_json_str::<HyperplaneCertSpec>(&read(cert)?)?.to_cert(grid)?;
                let report =
                    verify_current_hyperplane(&xbar, &ybar, &x0, &cert, g.tol, grid, *supp_y)?;
                report_outcome(&report)
            }
        },
        Command::Pareto { target, weights, scan, files } => {
            let ys = files
                .iter()
                .map(|f| load_figure(f, grid))
                .collect::<Result<Vec<_>, Error>>()?;
            let alphas = weights
                .split(',')
                .map(|w| {
                    w.trim().parse::<f64>().map_err(|e| {
                        Error::InvalidInput(format!("bad weight {w:?}: {e}"))
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let (body, point) = pareto_vector_isoperimetric(&ys, &alphas, *target)?;
            let mut doc = serde_json::to_value(ParetoSpec::new(&body, &point))?;
            if *scan > 0 {
                let s = pareto_perturbation_scan(&body, &ys, *target, grid, *scan, 0.02, g.seed)?;
                doc["scan"] = serde_json::to_value(ScanSpec::from_scan(&s))?;
            }
            ok_json(&doc)
        }
        Command::Render { file, outline, atoms } => {
            let fig = load_figure(file, grid)?;
            let mut overlays = Vec::new();
            for path in outline {
                overlays.push(Overlay::Outline(load_figure(path, grid)?));
            }
            if let Some(path) = atoms {
                overlays.push(Overlay::Atoms(load_measure(path)?));
            }
            let svg = render_svg(&fig, &overlays, &RenderStyle::default())?;
            Ok(Outcome { text: svg, code: 0 })
        }
    }
}

fn emit(out: &Outcome, dest: &Option<PathBuf>) -> Result<(), Error> {
    match dest {
        Some(path) => std::fs::write(path, format!("{}\n", out.text.trim_end()))?,
        None => println!("{}", out.text.trim_end()),
    }
    Ok(())
}

fn infeasible(e: &Error) -> bool {
    matches!(
        e,
        Error::Infeasible(_)
            | Error::InfeasibleRadius { .. }
            | Error::NonConvexBulge { .. }
            | Error::Bracket(_)
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage and parse problems are input errors: exit 1 (help and
            // version requests still exit 0).
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli.command, &cli.global) {
        Ok(out) => {
            if emit(&out, &cli.global.o).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) if infeasible(&e) => {
            let doc = json!({ "error": format!("{e}") });
            let out = Outcome { text: doc.to_string(), code: 2 };
            let _ = emit(&out, &cli.global.o);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
