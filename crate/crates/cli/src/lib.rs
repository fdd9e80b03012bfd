//! Command-line front end: loads a spec file or a builtin, runs one command
//! and renders a canonical JSON report.

pub mod commands;
pub mod report;
pub mod specfile;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context as _, Result};
use bhl_core::{Cyclotomic, Error, Field, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::Outcome;
use specfile::{load, parse_builtin_arg, parse_spec, SpecFile};

#[derive(Debug, Parser)]
#[command(name = "bhl", version, about = "Exact braided Hopf algebra checks and reconstruction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the bialgebra and antipode axioms.
    CheckHopf(Input),
    /// Solve for the antipode and compare it with a supplied one.
    Antipode(Input),
    /// Check Yetter-Drinfeld modules and their braiding.
    YdCheck(Input),
    /// Bosonize with the group algebra of the grading group.
    Bosonize(Input),
    /// Compute the relative coend and its Hopf structure.
    Reconstruct(Input),
    /// Reconstruct and compare with the original Hopf algebra.
    VerifyReconstruction(Input),
    /// Compare the coend against enlarged diagrams.
    Stability(Input),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// JSON spec file.
    pub spec: Option<PathBuf>,
    /// Builtin algebra, `NAME` or `NAME:p1,p2`.
    #[arg(long, conflicts_with = "spec")]
    pub builtin: Option<String>,
    /// Algebra to use when the spec defines several.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Diagram probes: `H` or degree exponents such as `1` or `1:0`.
    #[arg(long)]
    pub probes: Option<String>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckHopf(_) => "check-hopf",
            Command::Antipode(_) => "antipode",
            Command::YdCheck(_) => "yd-check",
            Command::Bosonize(_) => "bosonize",
            Command::Reconstruct(_) => "reconstruct",
            Command::VerifyReconstruction(_) => "verify-reconstruction",
            Command::Stability(_) => "stability",
        }
    }

    pub fn input(&self) -> &Input {
        match self {
            Command::CheckHopf(i)
            | Command::Antipode(i)
            | Command::YdCheck(i)
            | Command::Bosonize(i)
            | Command::Reconstruct(i)
            | Command::VerifyReconstruction(i)
            | Command::Stability(i) => i,
        }
    }
}

/// Result of a run, ready to print.
#[derive(Debug)]
pub struct Rendered {
    pub passed: bool,
    /// Canonical JSON report.
    pub json: String,
    /// Human summary; the only place timing appears.
    pub summary: String,
}

pub fn read_spec(input: &Input) -> Result<SpecFile> {
    match (&input.spec, &input.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_spec(&text)
        }
        (None, Some(b)) => {
            let (name, params) = parse_builtin_arg(b)?;
            Ok(SpecFile::from_builtin(&name, &params))
        }
        (None, None) => bail!(Error::InvalidParameter("give a spec file or --builtin".into())),
        (Some(_), Some(_)) => bail!(Error::InvalidParameter("give either a spec file or --builtin".into())),
    }
}

fn execute<K: Field>(cmd: &Command, spec: &SpecFile) -> Result<Outcome<K>> {
    let l = load::<K>(spec)?;
    let i = cmd.input();
    let (alg, probes) = (i.algebra.as_deref(), i.probes.as_deref());
    match cmd {
        Command::CheckHopf(_) => commands::check_hopf(&l, alg),
        Command::Antipode(_) => commands::antipode(&l, alg),
        Command::YdCheck(_) => commands::yd_check(&l, spec),
        Command::Bosonize(_) => commands::bosonize_cmd(&l, alg),
        Command::Reconstruct(_) => commands::reconstruct_cmd(&l, alg, probes),
        Command::VerifyReconstruction(_) => commands::verify(&l, alg, probes),
        Command::Stability(_) => commands::stability(&l, alg, probes),
    }
}

fn render<K: Field>(cmd: &Command, spec: &SpecFile, field_order: u32) -> Result<Rendered> {
    let start = Instant::now();
    let outcome = execute::<K>(cmd, spec)?;
    let elapsed = start.elapsed();
    let i = cmd.input();
    let inputs = json!({
        "command": cmd.name(),
        "spec": serde_json::to_value(spec)?,
        "algebra": i.algebra,
        "probes": i.probes,
    });
    let digest = report::sha256_hex(report::canonical(&inputs).as_bytes());
    let doc = json!({
        "command": cmd.name(),
        "algebra": outcome.algebra,
        "field_order": field_order,
        "inputs_sha256": digest,
        "passed": outcome.passed(),
        "checks": outcome.checks_json(),
        "data": outcome.data,
    });
    let failures = report::failure_lines(&outcome.report);
    let mut summary = format!(
        "{} {}: {} checks, {} failed, {:.1} ms\n",
        cmd.name(),
        outcome.algebra,
        outcome.report.checks.len(),
        failures.len(),
        elapsed.as_secs_f64() * 1e3
    );
    for f in failures {
        summary.push_str(&f);
        summary.push('\n');
    }
    Ok(Rendered {
        passed: outcome.passed(),
        json: report::canonical(&doc),
        summary,
    })
}

/// Runs one command. Rational arithmetic is used when every scalar is
/// rational, cyclotomic arithmetic otherwise.
pub fn run(cmd: &Command) -> Result<Rendered> {
    let spec = read_spec(cmd.input())?;
    let order = spec.required_field_order()?;
    let rendered = if order <= 2 {
        render::<Rational>(cmd, &spec, order)?
    } else {
        render::<Cyclotomic>(cmd, &spec, order)?
    };
    if let Some(out) = &cmd.input().out {
        std::fs::write(out, &rendered.json).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(rendered)
}

/// Sizes the global thread pool from `BHL_THREADS` when set.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("BHL_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("BHL_THREADS={v:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Stable error code of the underlying engine error, if any.
pub fn error_code(e: &anyhow::Error) -> &'static str {
    e.chain()
        .find_map(|c| c.downcast_ref::<Error>())
        .map_or("Error", Error::code)
}
