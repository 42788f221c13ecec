//! `gpc`: load definitions, run check suites and emit reports with witnesses.
//!
//! Exit status: 0 when every selected check passes, 1 on check failures, 2 on
//! parse, schema or parameter errors.

mod suites;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gpc_core::catalog::{self, Params};
use gpc_core::{adapted_lift, from_json, to_json, validate_context, Definition, Error, Rational};
use serde::Serialize;

use suites::{parse_selection, SuiteOutcome};

#[derive(Parser)]
#[command(
    name = "gpc",
    version,
    about = "Exact checks for generalized almost para-contact structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report here (relative paths resolve against GPC_REPORT_DIR when set).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Print failing conditions only.
    #[arg(long, global = true)]
    witness_only: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a definition and check antisymmetry and Jacobi of the algebra.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run check suites on a definition.
    Check {
        file: PathBuf,
        /// Comma-separated suites: def1, paracomplex, normality31, normality32, classify,
        /// eigenbundles, isotropy, closure, bialgebroid, classical, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        out: Output,
    },
    /// Print the generalized lift of a classical structure as a definition.
    Lift { file: PathBuf },
    /// Print the adapted lift to M × R as a paracomplex definition.
    Extend { file: PathBuf },
    /// List or emit catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(long, value_parser = parse_rational)]
        r: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        t: Option<Rational>,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

/// Failure mode of a command, mapped onto the exit status.
enum Failure {
    Checks,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Def1Violation { .. }
            | Error::ApcViolation { .. }
            | Error::DegenerateStructure(_)
            | Error::PreconditionViolation(_) => {
                eprintln!("error: {e}");
                Failure::Checks
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Report {
    structure: String,
    command: &'static str,
    summary: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<String>,
    suites: Vec<SuiteOutcome>,
}

fn load(path: &Path) -> Result<Definition, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn report_path(explicit: Option<&Path>, structure: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("GPC_REPORT_DIR").map(PathBuf::from);
    match (explicit, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.to_path_buf()),
        (None, Some(d)) => Some(d.join(format!("{structure}.report.json"))),
        (None, None) => None,
    }
}

fn emit(report: &Report, out: &Output) -> Result<(), Failure> {
    write_stdout(&render_report(report, out.witness_only));
    if let Some(path) = report_path(out.report.as_deref(), &report.structure) {
        let json = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)
                .map_err(|e| Failure::Input(format!("{}: {e}", parent.display())))?;
        }
        fs::write(&path, json).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if report.summary == "pass" {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn render_report(report: &Report, witness_only: bool) -> String {
    let mut o = String::new();
    for s in &report.suites {
        if witness_only && s.passed() {
            continue;
        }
        let _ = writeln!(o, "{} [{}] {}", report.structure, s.suite, s.summary);
        if let Some(e) = &s.error {
            let _ = writeln!(o, "  error: {e}");
        }
        if let Some(c) = &s.classification {
            let _ = writeln!(o, "  classification: {c}");
        }
        for r in &s.results {
            match &r.witness {
                None if !witness_only => {
                    let _ = writeln!(o, "  ok   {} ({} checked)", r.condition, r.checked);
                }
                None => {}
                Some(w) => {
                    let _ = writeln!(
                        o,
                        "  FAIL {} at {}: lhs = {}, rhs = {}",
                        r.condition, w.input, w.lhs, w.rhs
                    );
                }
            }
        }
        if witness_only {
            continue;
        }
        for b in &s.bundles {
            let _ = writeln!(
                o,
                "  {} rank ({}, {}): {}",
                b.label,
                b.rank[0],
                b.rank[1],
                b.generators.join("; ")
            );
            let _ = writeln!(o, "    e+: {}", b.lightcone_plus.join("; "));
            let _ = writeln!(o, "    e-: {}", b.lightcone_minus.join("; "));
        }
        for b in &s.brackets {
            let _ = writeln!(o, "  bracket {} = {}", b.input, b.value);
        }
        for n in &s.notes {
            let _ = writeln!(o, "  note: {n}");
        }
    }
    o
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn finish(structure: String, command: &'static str, suites: Vec<SuiteOutcome>) -> Report {
    let summary = if suites.iter().all(SuiteOutcome::passed) {
        "pass"
    } else {
        "fail"
    };
    let classification = suites.iter().find_map(|s| s.classification.clone());
    Report {
        structure,
        command,
        summary,
        classification,
        suites,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file, out } => {
            let def = load(&file)?;
            let ctx = validate_context(&def.algebra);
            let outcome = SuiteOutcome::from_report("validate", ctx);
            emit(
                &finish(def.display_name().to_string(), "validate", vec![outcome]),
                &out,
            )
        }
        Command::Check { file, suite, out } => {
            let def = load(&file)?;
            let selection =
                parse_selection(&suite, def.classical.is_some()).map_err(Failure::Input)?;
            let outcomes = suites::run_all(&selection, &def);
            emit(
                &finish(def.display_name().to_string(), "check", outcomes),
                &out,
            )
        }
        Command::Lift { file } => {
            let def = load(&file)?;
            if def.classical.is_none() {
                return Err(Failure::Input(format!(
                    "{}: no classical block to lift",
                    file.display()
                )));
            }
            let mut lifted = Definition::new(def.name.clone(), def.algebra.clone());
            lifted.structure = def.generalized()?;
            write_stdout(&(to_json(&lifted) + "\n"));
            Ok(())
        }
        Command::Extend { file } => {
            let def = load(&file)?;
            let s = def.generalized()?.ok_or_else(|| {
                Failure::Input(format!(
                    "{}: no structure or classical block",
                    file.display()
                ))
            })?;
            let j = adapted_lift(&s)?;
            let mut ext = Definition::new(Some(j.name.clone()), j.algebra.clone());
            ext.paracomplex = Some(j);
            write_stdout(&(to_json(&ext) + "\n"));
            Ok(())
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for e in catalog::ENTRIES {
                let params = if e.params.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", e.params.join(", "))
                };
                write_stdout(&format!("{}{params}: {}\n", e.name, e.summary));
            }
            Ok(())
        }
        Command::Catalog {
            action: CatalogAction::Emit { name, r, t },
        } => {
            let def = catalog::build(&name, &Params { r, t })
                .map_err(|e| Failure::Input(e.to_string()))?;
            write_stdout(&(to_json(&def) + "\n"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
