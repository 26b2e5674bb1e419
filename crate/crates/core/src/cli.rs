//! Command-line surface. [`run`] takes the argument list and writes to the
//! given streams, so the binary is a thin wrapper and commands can be tested
//! in-process.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::dyadic::{Dyadic, ParseDyadicError};
use crate::forms::Game;
use crate::notation::{parse_game, ParseError};
use crate::numbers::{
    classify, distinct_values, enumerate_forms, right_gap_pairs, right_gap_pairs_any_shape,
    value_of, weak_zugzwang_counterexamples, Classification, EnumerationError, FittingQuery,
};
use crate::order::relation;
use crate::reduction::canonicalize;
use crate::rulesets::{HackenbushString, RulesetParseError, TopplingRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cgt",
    version,
    about = "Evaluate and classify short partizan game forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the value if EXPR is a number, else its canonical form.
    Eval { expr: String },
    /// Print the canonical form.
    Canon { expr: String },
    /// Compare two games: one of `<`, `>`, `=`, `||`.
    Cmp { left: String, right: String },
    /// Print every classifier's verdict as JSON.
    Classify { expr: String },
    /// Print the simplest member of the fitting set, or test one dyadic.
    Fitting {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        probe: Option<String>,
    },
    /// Evaluate a Hackenbush string or Toppling Dominoes row.
    Ruleset { game: RulesetKind, position: String },
    /// Search an enumerated universe for counterexamples.
    Scan {
        kind: ScanKind,
        #[arg(long)]
        day: u32,
        #[arg(long, default_value_t = 2)]
        max_options: usize,
        /// For inf-right-gap, also consider forms with several options per side.
        #[arg(long)]
        any_shape: bool,
    },
    /// List an enumerated universe, or just count it with --stats.
    Enumerate {
        #[arg(long)]
        day: u32,
        #[arg(long, default_value_t = 2)]
        max_options: usize,
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RulesetKind {
    Hackenbush,
    Toppling,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScanKind {
    WeakZugzwang,
    InfRightGap,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Dyadic(#[from] ParseDyadicError),
    #[error("{0}")]
    Ruleset(#[from] RulesetParseError),
    #[error("{0}")]
    Budget(#[from] EnumerationError),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval { expr } => writeln!(out, "{}", eval(parse_game(expr)?))?,
        Command::Canon { expr } => writeln!(out, "{}", canonicalize(parse_game(expr)?))?,
        Command::Cmp { left, right } => {
            let rel = relation(parse_game(left)?, parse_game(right)?);
            writeln!(out, "{}", rel.symbol())?
        }
        Command::Classify { expr } => writeln!(out, "{}", classify_json(parse_game(expr)?))?,
        Command::Fitting { expr, probe } => {
            let query = FittingQuery::new(parse_game(expr)?);
            match probe {
                Some(x) => writeln!(out, "{}", query.contains(x.parse::<Dyadic>()?))?,
                None => match query.simplest() {
                    Some(x) => writeln!(out, "{x}")?,
                    None => writeln!(out, "empty")?,
                },
            }
        }
        Command::Ruleset { game, position } => {
            let form = match game {
                RulesetKind::Hackenbush => position.parse::<HackenbushString>()?.to_form(),
                RulesetKind::Toppling => position.parse::<TopplingRow>()?.to_form(),
            };
            writeln!(out, "{}", eval(form))?;
            writeln!(out, "literal: {form}")?
        }
        Command::Scan {
            kind,
            day,
            max_options,
            any_shape,
        } => scan(*kind, *day, *max_options, *any_shape, out)?,
        Command::Enumerate {
            day,
            max_options,
            stats,
        } => {
            let forms = enumerate_forms(*day, *max_options)?;
            if *stats {
                writeln!(out, "forms: {}", forms.len())?;
                writeln!(out, "values: {}", distinct_values(&forms).len())?;
            } else {
                for g in forms {
                    writeln!(out, "{g}")?;
                }
            }
        }
    }
    Ok(())
}

/// The `eval` rendering: a dyadic value, or the canonical form.
pub fn eval(g: Game) -> String {
    match value_of(g) {
        Some(x) => x.to_string(),
        None => canonicalize(g).to_string(),
    }
}

#[derive(Serialize)]
struct ClassifyReport {
    #[serde(flatten)]
    classification: Classification,
    canonical: String,
}

pub fn classify_json(g: Game) -> String {
    let report = ClassifyReport {
        classification: classify(g),
        canonical: canonicalize(g).to_string(),
    };
    serde_json::to_string(&report).expect("report serializes")
}

#[derive(Serialize)]
struct Finding {
    scan: &'static str,
    form: String,
    canonical: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    right_option: Option<String>,
}

#[derive(Serialize)]
struct ScanSummary {
    scan: &'static str,
    day: u32,
    max_options: usize,
    forms: usize,
    findings: usize,
}

fn scan(
    kind: ScanKind,
    day: u32,
    max_options: usize,
    any_shape: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let forms = enumerate_forms(day, max_options)?;
    let findings: Vec<Finding> = match kind {
        ScanKind::WeakZugzwang => weak_zugzwang_counterexamples(&forms)
            .into_iter()
            .map(|g| Finding {
                scan: "weak-zugzwang",
                form: g.to_string(),
                canonical: canonicalize(g).to_string(),
                right_option: None,
            })
            .collect(),
        ScanKind::InfRightGap => if any_shape {
            right_gap_pairs_any_shape(&forms)
        } else {
            right_gap_pairs(&forms)
        }
        .into_iter()
        .map(|(g, r)| Finding {
            scan: "inf-right-gap",
            form: g.to_string(),
            canonical: canonicalize(g).to_string(),
            right_option: Some(r.to_string()),
        })
        .collect(),
    };
    for f in &findings {
        writeln!(
            out,
            "{}",
            serde_json::to_string(f).expect("finding serializes")
        )?;
    }
    let summary = ScanSummary {
        scan: findings.first().map_or(scan_name(kind), |f| f.scan),
        day,
        max_options,
        forms: forms.len(),
        findings: findings.len(),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    )?;
    Ok(())
}

fn scan_name(kind: ScanKind) -> &'static str {
    match kind {
        ScanKind::WeakZugzwang => "weak-zugzwang",
        ScanKind::InfRightGap => "inf-right-gap",
    }
}
