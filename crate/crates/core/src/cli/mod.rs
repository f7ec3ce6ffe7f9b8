//! Command-line front end. `main.rs` only parses arguments and calls [`run`].

mod input;
mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::atlas::{build_atlas, count_classes, to_csv, to_dot, to_jsonl};
use crate::classify::{
    singularity_class_at, singularity_locus_equations, ClassifyOptions, GeometrySource, Target,
};
use crate::ekr::{build_ekr, validate_word, EkrSpec, Model, Shift};
use crate::error::Error;
use crate::geometry::DEFAULT_GENERATOR_CAP;

pub use input::{parse_assignment, parse_point};
pub use verify::{
    constant_draw, draw_rational, run_verify, VerificationOutcome, VerifyConfig, VerifySummary,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GEOMETRY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spflag",
    version,
    about = "Exact singularity classes of special 2-flags"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an EKR or a named model at a point.
    Classify(ClassifyArgs),
    /// Check that every EKR of a given length classifies to its own label.
    Verify(VerifyArgs),
    /// Emit the stratification records of a given length.
    Atlas(AtlasArgs),
    /// Count singularity classes of a given width and length.
    Count(CountArgs),
    /// Print the local equations of a singularity class.
    Locus(LocusArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Compute F and L(D^j) by pointwise linear algebra instead of closed forms.
    #[arg(long)]
    pub generic_geometry: bool,
    /// Cap on small-flag generators.
    #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
    pub cap: usize,
}

impl Common {
    fn options(&self) -> ClassifyOptions {
        ClassifyOptions {
            geometry: if self.generic_geometry {
                GeometrySource::Generic
            } else {
                GeometrySource::ClosedForm
            },
            cap: self.cap,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// EKR label, e.g. 1.2.1.3.
    #[arg(long, conflicts_with = "model")]
    pub word: Option<String>,
    /// ca_2, ex_2, bcd(m,n), appxB_D(b3,c3,c4) or appxB_E(b3,c3).
    #[arg(long)]
    pub model: Option<String>,
    /// JSON file with word and constants.
    #[arg(long, conflicts_with = "model")]
    pub constants: Option<PathBuf>,
    /// Constant b_l as l=value; repeatable.
    #[arg(long = "b", value_name = "L=VALUE")]
    pub b: Vec<String>,
    /// Constant c_l as l=value; repeatable.
    #[arg(long = "c", value_name = "L=VALUE")]
    pub c: Vec<String>,
    /// Comma-separated rational coordinates; defaults to the origin.
    #[arg(long)]
    pub point: Option<String>,
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Jsonl,
    Csv,
    Dot,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub length: usize,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include the all-zero constant draw.
    #[arg(long)]
    pub zero_constants: bool,
    #[command(flatten)]
    pub common: Common,
    /// text (summary), json (full summary) or jsonl (one outcome per line).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AtlasArgs {
    #[arg(long)]
    pub length: usize,
    /// json, jsonl, csv or dot.
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub width: usize,
    #[arg(long)]
    pub length: usize,
}

#[derive(Debug, Args)]
pub struct LocusArgs {
    #[arg(long)]
    pub word: String,
    /// text or json.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Output {
    text: String,
    out: Option<PathBuf>,
    code: i32,
}

impl Output {
    fn ok(text: String, out: Option<PathBuf>) -> Self {
        Output {
            text,
            out,
            code: EXIT_OK,
        }
    }
}

/// Runs a parsed command, writing results to `stdout` (or the `--out` file)
/// and diagnostics to `stderr`. Returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Verify(a) => verify(a),
        Command::Atlas(a) => atlas(a),
        Command::Count(a) => count(a),
        Command::Locus(a) => locus(a),
    };
    let written = result.and_then(|o| {
        match &o.out {
            Some(path) => std::fs::write(path, &o.text)?,
            None => stdout.write_all(o.text.as_bytes())?,
        }
        Ok(o.code)
    });
    match written {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_geometric() {
                EXIT_GEOMETRY
            } else {
                EXIT_USAGE
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn classify(a: &ClassifyArgs) -> std::result::Result<Output, Failure> {
    let options = a.common.options();
    let point = a.point.as_deref().map(parse_point).transpose()?;
    let report = if let Some(name) = &a.model {
        if !a.b.is_empty() || !a.c.is_empty() {
            return Err(Failure::Usage(
                "--b/--c apply to --word, not --model".into(),
            ));
        }
        let d = Model::parse(name)?.distribution();
        let p = point.unwrap_or_else(|| d.chart().origin());
        singularity_class_at(Target::Distribution(&d), &p, options)?
    } else {
        let spec = ekr_spec(a)?;
        let build = build_ekr(&spec);
        let p = point.unwrap_or_else(|| build.chart().origin());
        singularity_class_at(Target::Ekr(&build), &p, options)?
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    Ok(Output::ok(text, a.out.clone()))
}

fn ekr_spec(a: &ClassifyArgs) -> std::result::Result<EkrSpec, Failure> {
    let mut spec = match (&a.constants, &a.word) {
        (Some(path), word) => {
            let spec = EkrSpec::from_json(&std::fs::read_to_string(path)?)?;
            if let Some(w) = word {
                if validate_word(w)? != *spec.word() {
                    return Err(Failure::Usage(format!(
                        "--word {w} differs from the constants file word {}",
                        spec.word()
                    )));
                }
            }
            spec
        }
        (None, Some(w)) => EkrSpec::new(validate_word(w)?),
        (None, None) => {
            return Err(Failure::Usage(
                "one of --word, --model or --constants is required".into(),
            ))
        }
    };
    for (shift, list) in [(Shift::B, &a.b), (Shift::C, &a.c)] {
        for item in list {
            let (step, value) = parse_assignment(item)?;
            spec.set(shift, step, value)?;
        }
    }
    Ok(spec)
}

fn verify(a: &VerifyArgs) -> std::result::Result<Output, Failure> {
    if a.length == 0 {
        return Err(Failure::Usage("--length must be at least 1".into()));
    }
    let config = VerifyConfig {
        length: a.length,
        trials: a.trials,
        seed: a.seed,
        zero_constants: a.zero_constants,
        options: a.common.options(),
    };
    let summary = run_verify(&config);
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&summary).expect("summary serializes");
            s.push('\n');
            s
        }
        Format::Jsonl => summary
            .outcomes
            .iter()
            .map(|o| serde_json::to_string(o).expect("outcome serializes") + "\n")
            .collect(),
        Format::Text => verify_text(&summary),
        other => return Err(Failure::Usage(format!("verify does not emit {other:?}"))),
    };
    Ok(Output {
        text,
        out: a.out.clone(),
        code: if summary.all_passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    })
}

fn verify_text(s: &VerifySummary) -> String {
    let mut text = format!(
        "length {} seed {}: {} words, {} runs, {} passed, {} failed\n",
        s.length,
        s.seed,
        s.words,
        s.total,
        s.passed,
        s.total - s.passed
    );
    for f in s.failures() {
        let got = match (&f.computed, &f.error) {
            (Some(w), _) => w.to_string(),
            (None, Some(e)) => format!("error: {e}"),
            (None, None) => "nothing".into(),
        };
        text.push_str(&format!(
            "FAIL {} draw {} constants {} computed {}\n",
            f.word,
            f.draw,
            f.constants.to_json(),
            got
        ));
    }
    text
}

fn atlas(a: &AtlasArgs) -> std::result::Result<Output, Failure> {
    if a.length == 0 {
        return Err(Failure::Usage("--length must be at least 1".into()));
    }
    let records = build_atlas(a.length);
    let text = match a.format {
        Format::Jsonl => to_jsonl(&records),
        Format::Csv => to_csv(&records),
        Format::Dot => to_dot(&records),
        Format::Json => serde_json::to_string_pretty(&records).expect("records serialize") + "\n",
        Format::Text => return Err(Failure::Usage("atlas emits json, jsonl, csv or dot".into())),
    };
    Ok(Output::ok(text, a.out.clone()))
}

fn count(a: &CountArgs) -> std::result::Result<Output, Failure> {
    if a.width == 0 || a.length == 0 {
        return Err(Failure::Usage(
            "--width and --length must be at least 1".into(),
        ));
    }
    Ok(Output::ok(
        format!("{}\n", count_classes(a.width, a.length)),
        None,
    ))
}

fn locus(a: &LocusArgs) -> std::result::Result<Output, Failure> {
    let w = validate_word(&a.word)?;
    let eqs = singularity_locus_equations(&w);
    let text = match a.format {
        Format::Text => eqs.iter().map(|e| format!("{e}\n")).collect(),
        Format::Json => serde_json::to_string(&eqs).expect("equations serialize") + "\n",
        _ => return Err(Failure::Usage("locus emits text or json".into())),
    };
    Ok(Output::ok(text, None))
}
