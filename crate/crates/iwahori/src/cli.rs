//! The `iwahori` command line.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use iwahori_core::{
    act, classify, classify_fine_i4, dimension, distinguished_point, enumerate_labels,
    involution_label, normal_form, sample_point_with, Error, FlagPoint, Level, OrbitLabel,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parse::{parse_coeff, parse_matrix, parse_point, ParseError};
use crate::verify::{run_all, run_check, CheckReport, CHECK_NAMES};

#[derive(Debug, Parser)]
#[command(name = "iwahori", version, about = "Orbits of the Iwahori chain on the affine flag variety of SL2")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Precision used when sampling.
    #[arg(long, global = true, default_value_t = 32)]
    pub prec: i64,
    /// Seed for sampling and verification.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of the coset of a matrix, e.g. "[[1, t^-1], [0, 1]]" or "[[...]]@16".
    NormalForm { matrix: String },
    /// Orbit labels of a point at every level up to --level.
    Classify {
        point: String,
        #[arg(long, default_value = "I4Rot")]
        level: Level,
    },
    /// Left translation of a point by a matrix.
    Act { matrix: String, point: String },
    /// Loop rotation t -> gamma*t of a point.
    Rotate { gamma: String, point: String },
    /// Translation of a point by the simple reflection s1.
    Involute { point: String },
    /// Random point of an orbit.
    Sample {
        label: OrbitLabel,
        #[arg(long)]
        level: Level,
    },
    /// Distinguished point, dimension and involution image of an orbit.
    OrbitInfo {
        label: OrbitLabel,
        #[arg(long)]
        level: Level,
    },
    /// All orbits at a level with index in a range.
    Labels {
        #[arg(long)]
        level: Level,
        #[arg(long, allow_hyphen_values = true)]
        n_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        n_max: i64,
    },
    /// Run the randomized consistency checks.
    Verify {
        /// One of normal-form, invariance, partition, involution, structure, beta.
        #[arg(long)]
        check: Option<String>,
    },
}

/// Text and JSON renderings of one command's result.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

#[derive(Debug)]
pub enum CliError {
    Parse { what: &'static str, error: ParseError },
    Library(Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { what, error } => write!(f, "cannot parse {what}: {error}"),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

fn point_arg(text: &str) -> Result<FlagPoint, CliError> {
    parse_point(text).map_err(|error| CliError::Parse { what: "point", error })
}

fn point_output(x: &FlagPoint) -> Output {
    Output {
        text: x.to_string(),
        json: json!({ "point": x.to_string() }),
        code: 0,
    }
}

fn levels_up_to(level: Level) -> impl Iterator<Item = Level> {
    Level::ALL.into_iter().filter(move |l| *l <= level)
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::NormalForm { matrix } => {
            let g = parse_matrix(matrix).map_err(|error| CliError::Parse { what: "matrix", error })?;
            Ok(point_output(&normal_form(&g)?))
        }
        Command::Classify { point, level } => {
            let x = point_arg(point)?;
            let mut text = String::new();
            let mut labels = serde_json::Map::new();
            for l in levels_up_to(*level) {
                let label = classify(&x, l);
                writeln!(text, "{l}: {label}").unwrap();
                labels.insert(l.to_string(), json!(label.to_string()));
            }
            let mut json = json!({ "point": x.to_string(), "labels": labels });
            if *level == Level::I4Rot {
                if let Some(beta) = classify_fine_i4(&x).beta {
                    writeln!(text, "beta: {beta}").unwrap();
                    json["beta"] = json!(beta.to_string());
                }
            }
            Ok(Output { text: text.trim_end().to_string(), json, code: 0 })
        }
        Command::Act { matrix, point } => {
            let g = parse_matrix(matrix).map_err(|error| CliError::Parse { what: "matrix", error })?;
            Ok(point_output(&act(&g, &point_arg(point)?)?))
        }
        Command::Rotate { gamma, point } => {
            let gamma = parse_coeff(gamma).map_err(|error| CliError::Parse { what: "rotation parameter", error })?;
            Ok(point_output(&point_arg(point)?.rotate(&gamma)?))
        }
        Command::Involute { point } => Ok(point_output(&point_arg(point)?.involute())),
        Command::Sample { label, level } => {
            if cli.prec < 1 {
                return Err(CliError::Usage("--prec must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let x = sample_point_with(label, *level, &mut rng)?;
            Ok(point_output(&x))
        }
        Command::OrbitInfo { label, level } => {
            let point = distinguished_point(label, *level)?;
            let (rank, affine) = dimension(label, *level)?;
            let is_point = (rank, affine) == (0, 0);
            let image = involution_label(label, *level);
            let mut text = format!(
                "label: {label}\nlevel: {level}\ndistinguished point: {point}\ndimension: ({rank}, {affine})\npoint orbit: {}\n",
                if is_point { "yes" } else { "no" }
            );
            let involution = match &image {
                Ok(l) => {
                    writeln!(text, "involution: {l}").unwrap();
                    json!(l.to_string())
                }
                Err(_) => {
                    writeln!(text, "involution: undefined at level {level}").unwrap();
                    Value::Null
                }
            };
            let json = json!({
                "label": label.to_string(),
                "level": level.to_string(),
                "distinguished_point": point.to_string(),
                "dimension": [rank, affine],
                "point_orbit": is_point,
                "involution": involution,
            });
            Ok(Output { text: text.trim_end().to_string(), json, code: 0 })
        }
        Command::Labels { level, n_min, n_max } => {
            if n_min > n_max {
                return Err(CliError::Usage("--n-min must not exceed --n-max".into()));
            }
            let mut text = String::new();
            let mut rows = Vec::new();
            for (label, is_point) in enumerate_labels(*level, *n_min, *n_max) {
                let (rank, affine) = dimension(&label, *level)?;
                let mark = if is_point { "  point" } else { "" };
                writeln!(text, "{label}  ({rank}, {affine}){mark}").unwrap();
                rows.push(json!({
                    "label": label.to_string(),
                    "dimension": [rank, affine],
                    "point_orbit": is_point,
                }));
            }
            Ok(Output { text: text.trim_end().to_string(), json: Value::Array(rows), code: 0 })
        }
        Command::Verify { check } => {
            let reports = match check {
                None => run_all(cli.seed),
                Some(name) => run_check(name, cli.seed).ok_or_else(|| {
                    CliError::Usage(format!("unknown check {name:?}; expected one of {}", CHECK_NAMES.join(", ")))
                })?,
            };
            Ok(verify_output(&reports))
        }
    }
}

fn verify_output(reports: &[CheckReport]) -> Output {
    let mut text = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            text,
            "{status} {} trials={} failures={} seed={} ({:.2}s)",
            r.check_name,
            r.trials,
            r.failures.len(),
            r.master_seed,
            r.elapsed.as_secs_f64()
        )
        .unwrap();
        for f in r.failures.iter().take(5) {
            writeln!(text, "  inputs: {}", f.inputs.join("; ")).unwrap();
            writeln!(text, "  expected: {}", f.expected).unwrap();
            writeln!(text, "  actual: {}", f.actual).unwrap();
        }
    }
    let passed = reports.iter().all(CheckReport::passed);
    Output {
        text: text.trim_end().to_string(),
        json: serde_json::to_value(reports).expect("reports serialize"),
        code: if passed { 0 } else { 1 },
    }
}

/// Parses `args`, runs the command and prints the result.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
