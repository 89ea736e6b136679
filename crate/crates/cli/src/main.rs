//! Command-line front end for the exact tilt-stability kernel.
//!
//! Exit codes: `0` success, `1` domain error (the inputs parse but violate a
//! mathematical precondition), `2` usage error (unparseable flags or
//! malformed values). All rationals cross the boundary as exact `p/q`
//! strings; output is JSON except for `verify-paper` (plain text) and CSV
//! exports.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fanotilt::json::{
    binding_string, char_value, parse_char, parse_lattice, parse_point, parse_rat,
    quad_char_value, quad_value, rat_string, scan_value, wall_value, ParseError,
};
use fanotilt::plot;
use fanotilt::verify;
use fanotilt_core::{
    check_bg, chi, enumerate_walls, index_one_certificate, numerical_wall, nu, rat_int,
    reduced_point, region_membership, Error as MathError, FanoData, PlanePoint, Rat, RegionSpec,
    TiltParam,
};
use num_traits::Signed;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "fanotilt",
    version,
    about = "Exact tilt-stability computations on Fano threefolds of Picard rank one"
)]
struct Cli {
    /// Write output to this file (for `plot`: directory for the CSV files)
    /// instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of a character on a chosen variety.
    Chi {
        /// Fano index (1, 2, 3, or 4).
        #[arg(long)]
        r: i64,
        /// Degree H^3.
        #[arg(long)]
        d: i64,
        /// Character "e0,e1,e2,e3" in degree coordinates, rational entries.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Twist a character by a rational beta, or by its own beta-bar.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Rational twist parameter.
        #[arg(long, conflicts_with = "at_betabar", allow_hyphen_values = true)]
        beta: Option<String>,
        /// Twist by the character's beta-bar (generally irrational).
        #[arg(long)]
        at_betabar: bool,
    },
    /// The invariant beta-bar of a character.
    Betabar {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Tilt slope of a character at a parameter point, in exact
    /// cross-multipliable form.
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// alpha^2 > 0, rational.
        #[arg(long, allow_hyphen_values = true)]
        alpha2: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// The numerical wall where two characters have equal tilt slope.
    Wall {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Enumerate the walls for a target character over a candidate lattice.
    ScanWalls {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Candidate rank bound.
        #[arg(long, default_value_t = 3)]
        max_rank: u32,
        /// Lattice denominators "n0,n1,n2,n3": candidates run over
        /// e_i in (d/n_i) Z.
        #[arg(long, default_value = "1,1,2,6")]
        lattice: String,
        /// Output format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Membership of a plane point (or a character's reduced point) in the
    /// region R_m.
    Region {
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// Character whose reduced point is tested.
        #[arg(long, conflicts_with = "point", allow_hyphen_values = true)]
        v: Option<String>,
        /// Projective point "p0,p1,p2" to test directly.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Region parameter m > 0; defaults to 3/(2rd) when --r/--d given.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
    },
    /// Sign report for the twisted third degree at beta-bar.
    CheckBg {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Exact positivity certificate for the index-one bound functions.
    CertifyIndex1 {
        #[arg(long)]
        d: i64,
    },
    /// Run the deterministic verification suite; exit 0 iff all checks pass.
    VerifyPaper,
    /// Export figure data (parabolas, tangents, region boundary, walls) as
    /// CSV files into the --out directory.
    Plot {
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// Optional target character for the wall table.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// Region parameter; defaults to 3/(2rd) when --r/--d given.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Decimal digits for sampled grids.
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long, default_value_t = 3)]
        max_rank: u32,
        #[arg(long, default_value = "1,1,2,6")]
        lattice: String,
    },
}

/// What a subcommand produced, before the --out/stdout decision.
enum Output {
    /// One-line JSON document.
    Json(Value),
    /// Preformatted text (verification report, CSV).
    Text(String),
    /// verify-paper report that failed some check: printed, then exit 1.
    FailedReport(String),
    /// Files already written by the command (plot); lines name them.
    Written(String),
}

enum CliError {
    /// A flag value failed to parse; exit 2.
    Usage { flag: &'static str, error: ParseError },
    /// Inputs parsed but violate a mathematical precondition; exit 1.
    Domain(MathError),
    /// Flag combination errors detected after clap; exit 2.
    BadFlags(String),
    /// Filesystem failure; exit 1.
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage { flag, error } => write!(f, "usage error: --{flag}: {error}"),
            CliError::Domain(e) => write!(f, "domain error: {e}"),
            CliError::BadFlags(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<MathError> for CliError {
    fn from(e: MathError) -> CliError {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

fn usage(flag: &'static str) -> impl FnOnce(ParseError) -> CliError {
    move |error| CliError::Usage { flag, error }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap prints help/version to stdout (exit 0) and usage errors to
        // stderr (exit 2).
        Err(e) => e.exit(),
    };
    let out = cli.out;
    match run(cli.command, out.as_deref()) {
        Ok(output) => {
            // `Written` means plot already put its files under --out; its
            // file list always goes to stdout.
            let (text, code, dest) = match output {
                Output::Json(v) => (format!("{v}\n"), ExitCode::SUCCESS, out.as_deref()),
                Output::Text(t) => (t, ExitCode::SUCCESS, out.as_deref()),
                Output::FailedReport(t) => (t, ExitCode::from(1), out.as_deref()),
                Output::Written(t) => (t, ExitCode::SUCCESS, None),
            };
            match deliver(&text, dest) {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("io error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("{e}");
            match e {
                CliError::Usage { .. } | CliError::BadFlags(_) => ExitCode::from(2),
                CliError::Domain(_) | CliError::Io(_) => ExitCode::from(1),
            }
        }
    }
}

/// Prints to stdout, or writes to the --out file.
fn deliver(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text),
    }
}

fn run(command: Command, out: Option<&Path>) -> Result<Output, CliError> {
    match command {
        Command::Chi { r, d, v } => {
            let f = FanoData::new(r, d)?;
            let v = parse_char(&v).map_err(usage("v"))?;
            Ok(Output::Json(json!({ "chi": rat_string(&chi(&f, &v)) })))
        }
        Command::Twist { v, beta, at_betabar } => {
            let v = parse_char(&v).map_err(usage("v"))?;
            match (beta, at_betabar) {
                (Some(b), false) => {
                    let b = parse_rat(&b).map_err(usage("beta"))?;
                    Ok(Output::Json(char_value(&v.twist_rational(&b))))
                }
                (None, true) => {
                    let bb = v.beta_bar()?;
                    Ok(Output::Json(quad_char_value(&v.twist(&bb))))
                }
                _ => Err(CliError::BadFlags("twist needs exactly one of --beta, --at-betabar".into())),
            }
        }
        Command::Betabar { v } => {
            let v = parse_char(&v).map_err(usage("v"))?;
            Ok(Output::Json(json!({ "beta_bar": quad_value(&v.beta_bar()?) })))
        }
        Command::Nu { v, alpha2, beta } => {
            let v = parse_char(&v).map_err(usage("v"))?;
            let alpha2 = parse_rat(&alpha2).map_err(usage("alpha2"))?;
            let beta = parse_rat(&beta).map_err(usage("beta"))?;
            let p = TiltParam::new(alpha2, beta)?;
            let slope = nu(&p, &v);
            Ok(Output::Json(json!({
                "nu": { "num": rat_string(slope.num()), "den_alpha_coeff": rat_string(slope.den()) },
                "infinite": slope.is_infinite(),
            })))
        }
        Command::Wall { v, w } => {
            let v = parse_char(&v).map_err(usage("v"))?;
            let w = parse_char(&w).map_err(usage("w"))?;
            Ok(Output::Json(match numerical_wall(&v, &w)? {
                Some(wall) => wall_value(&wall),
                None => json!({ "kind": "none" }),
            }))
        }
        Command::ScanWalls { r, d, v, max_rank, lattice, format } => {
            let f = FanoData::new(r, d)?;
            let v = parse_char(&v).map_err(usage("v"))?;
            let lattice = parse_lattice(&lattice).map_err(usage("lattice"))?;
            let report = enumerate_walls(&f, &v, lattice, max_rank)?;
            match format.as_str() {
                "json" => Ok(Output::Json(scan_value(&report))),
                "csv" => Ok(Output::Text(plot::walls_table(&report).render())),
                other => Err(CliError::BadFlags(format!(
                    "unknown format '{other}' (expected json or csv)"
                ))),
            }
        }
        Command::Region { r, d, v, point, m } => {
            let m = region_parameter(r, d, m.as_deref())?;
            let p = match (v, point) {
                (Some(v), None) => {
                    let v = parse_char(&v).map_err(usage("v"))?;
                    reduced_point(&v)?
                }
                (None, Some(s)) => {
                    let [p0, p1, p2] = parse_point(&s).map_err(usage("point"))?;
                    PlanePoint::new(p0, p1, p2)?
                }
                _ => {
                    return Err(CliError::BadFlags(
                        "region needs exactly one of --v, --point".into(),
                    ))
                }
            };
            let region = RegionSpec::new(m.clone())?;
            let status = region_membership(&p, &region)?;
            let mut doc = json!({
                "m": rat_string(&m),
                "status": match status.membership {
                    fanotilt_core::Membership::Interior => "interior",
                    fanotilt_core::Membership::Boundary => "boundary",
                    fanotilt_core::Membership::Exterior => "exterior",
                },
            });
            if let Some(b) = &status.binding {
                doc.as_object_mut()
                    .expect("doc is an object")
                    .insert("binding".into(), Value::String(binding_string(b)));
            }
            Ok(Output::Json(doc))
        }
        Command::CheckBg { v } => {
            let v = parse_char(&v).map_err(usage("v"))?;
            let report = check_bg(&v)?;
            Ok(Output::Json(json!({
                "beta_bar": quad_value(&report.beta_bar),
                "ch3_twisted": quad_value(&report.ch3_twisted),
                "satisfied": report.satisfied,
                "boundary": report.boundary,
            })))
        }
        Command::CertifyIndex1 { d } => {
            let cert = index_one_certificate(d)?;
            Ok(Output::Json(json!({
                "d": cert.d,
                "fprime_discriminant": rat_string(&cert.fprime_discriminant),
                "g_at_zero": quad_value(&cert.g_at_zero),
                "gprime_min": quad_value(&cert.gprime_min),
                "all_positive": cert.all_positive,
            })))
        }
        Command::VerifyPaper => {
            let checks = verify::run_all();
            let text = verify::render(&checks);
            if verify::all_passed(&checks) {
                Ok(Output::Text(text))
            } else {
                Ok(Output::FailedReport(text))
            }
        }
        Command::Plot { r, d, v, m, digits, max_rank, lattice } => {
            let dir = out.ok_or_else(|| {
                CliError::BadFlags("plot requires --out DIR for its CSV files".into())
            })?;
            let m = region_parameter(r, d, m.as_deref())?;
            fs::create_dir_all(dir)?;
            let mut files = vec![
                ("parabola_delta0.csv", plot::parabola_table(&rat_int(0), digits)),
                ("parabola_m.csv", plot::parabola_table(&m, digits)),
                ("tangents.csv", plot::tangents_table(-3, 3, digits)),
                ("region_boundary.csv", plot::region_boundary_table(&m, digits)),
            ];
            if let Some(v) = v {
                let (Some(r), Some(d)) = (r, d) else {
                    return Err(CliError::BadFlags(
                        "plot --v needs --r and --d for the wall scan".into(),
                    ));
                };
                let f = FanoData::new(r, d)?;
                let v = parse_char(&v).map_err(usage("v"))?;
                let lattice = parse_lattice(&lattice).map_err(usage("lattice"))?;
                let report = enumerate_walls(&f, &v, lattice, max_rank)?;
                files.push(("walls.csv", plot::walls_table(&report)));
            }
            let mut lines = String::new();
            for (name, table) in files {
                let path = dir.join(name);
                fs::write(&path, table.render())?;
                lines.push_str(&format!("wrote {}\n", path.display()));
            }
            Ok(Output::Written(lines))
        }
    }
}

/// The region parameter: explicit `--m`, else `3/(2rd)` from a valid
/// variety, else a flag error. Must be positive.
fn region_parameter(r: Option<i64>, d: Option<i64>, m: Option<&str>) -> Result<Rat, CliError> {
    let m = match (m, r, d) {
        (Some(s), _, _) => parse_rat(s).map_err(usage("m"))?,
        (None, Some(r), Some(d)) => {
            let f = FanoData::new(r, d)?;
            rat_int(3) / (rat_int(2) * f.index_rat() * f.degree_rat())
        }
        _ => return Err(CliError::BadFlags("need --m, or --r and --d to derive it".into())),
    };
    if !m.is_positive() {
        return Err(CliError::Domain(MathError::Precondition("m must be positive")));
    }
    Ok(m)
}
