//! Command-line front end: module descriptors, commands and report rendering.

pub mod commands;
pub mod descriptor;

use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hztower::gallery;
use hztower::zcmod::ZCModule;
use serde_json::json;

use commands::{HomDescriptor, Output, COHOMOLOGY_BUILTINS};
use descriptor::{DescriptorError, ModuleDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Descriptor(#[from] DescriptorError),
    #[error("{0}")]
    Algebra(#[from] hztower::Error),
}

#[derive(Debug, Parser)]
#[command(name = "hztower", version, about = "Exact algebra for Z[C]-modules and HZ-length bounds of M ⋊ C")]
pub struct Cli {
    /// Structured JSON output instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    /// Descriptor file, or a built-in module name.
    pub input: String,
    /// Number of completion stages.
    #[arg(long, env = "HZTOWER_IMAX_DEFAULT", default_value_t = 12)]
    pub imax: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, minimal and characteristic polynomials, tameness, invariant-freeness.
    Analyze(ModuleArgs),
    /// HZ-length verdict with its certificate.
    Classify(ModuleArgs),
    /// Truncated completions M/MI^i and their transitions.
    Complete(ModuleArgs),
    /// H_1 and H_2 of M ⋊ C and the finite-stage cokernels.
    H2(ModuleArgs),
    /// Relative second cohomology and central extensions of a small group homomorphism.
    Cohomology {
        /// Homomorphism descriptor file, or a built-in name.
        input: String,
    },
    /// Run the verification suites.
    #[command(name = "verify-paper")]
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
    },
    /// List built-in modules and homomorphisms.
    Builtins,
}

/// Reads `input` as a file, falling back to the named table.
fn read_input(input: &str, builtin: impl Fn(&str) -> Option<String>) -> Result<String, CliError> {
    if let Some(text) = builtin(input) {
        if !Path::new(input).exists() {
            return Ok(text);
        }
    }
    std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("cannot read {input:?}: {e}")))
}

pub fn load_module(input: &str) -> Result<ZCModule, CliError> {
    let text = read_input(input, |name| {
        gallery::get(name).map(|m| ModuleDescriptor::from_module(&m, Some(name)).to_json())
    })?;
    Ok(ModuleDescriptor::parse(&text)?.to_module()?)
}

pub fn load_hom(input: &str) -> Result<HomDescriptor, CliError> {
    let text = read_input(input, |name| {
        COHOMOLOGY_BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, d)| d.to_string())
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("homomorphism descriptor: {e}")))
}

fn builtins() -> Output {
    let modules: Vec<_> = gallery::ENTRIES.iter().map(|e| json!({"name": e.name, "description": e.description})).collect();
    let homs: Vec<_> = COHOMOLOGY_BUILTINS.iter().map(|(n, d)| json!({"name": n, "descriptor": d})).collect();
    let mut text = String::from("modules:\n");
    for e in gallery::ENTRIES {
        text.push_str(&format!("  {:<14} {}\n", e.name, e.description));
    }
    text.push_str("homomorphisms:\n");
    for (n, d) in COHOMOLOGY_BUILTINS {
        text.push_str(&format!("  {n:<14} {d}\n"));
    }
    Output { result: json!({"modules": modules, "homomorphisms": homs}), text, ok: true }
}

fn dispatch(cmd: &Command) -> Result<(String, Option<String>, Output), CliError> {
    Ok(match cmd {
        Command::Analyze(a) => ("analyze".into(), Some(a.input.clone()), commands::analyze(&load_module(&a.input)?)?),
        Command::Classify(a) => ("classify".into(), Some(a.input.clone()), commands::classify_cmd(&load_module(&a.input)?)?),
        Command::Complete(a) => ("complete".into(), Some(a.input.clone()), commands::complete(&load_module(&a.input)?, a.imax)?),
        Command::H2(a) => ("h2".into(), Some(a.input.clone()), commands::h2(&load_module(&a.input)?, a.imax)?),
        Command::Cohomology { input } => ("cohomology".into(), Some(input.clone()), commands::cohomology(&load_hom(input)?)?),
        Command::Verify { list: true, .. } => {
            let names = hztower::verify::SUITES;
            let out = Output { result: json!({"suites": names}), text: names.join("\n") + "\n", ok: true };
            ("verify-paper".into(), None, out)
        }
        Command::Verify { suite, .. } => ("verify-paper".into(), suite.clone(), commands::run_checks(suite.as_deref())?),
        Command::Builtins => ("builtins".into(), None, builtins()),
    })
}

/// Runs one command; returns the text for stdout, the text for stderr and the exit code.
pub fn run(cli: &Cli) -> (String, String, i32) {
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok((command, input, out)) => {
            let code = if out.ok { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let stdout = if cli.json {
                let report = json!({
                    "command": command,
                    "input": input,
                    "result": out.result,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                out.text
            };
            (stdout, String::new(), code)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    }
}
