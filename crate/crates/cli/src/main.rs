//! `morita`: run algebra, form and involution constructions on JSON inputs.
//!
//! Exit codes: 0 success, 1 bad input, 2 a proven negative, 3 inconclusive.

mod commands;
mod demos;
mod json;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use morita_core::search::SearchConfig;
use morita_core::Error;
use serde_json::{json, Value};

use commands::Context;
use report::{Outcome, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Json(_) | CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                Error::NoSymmetricUnit
                | Error::NotRegular
                | Error::NotFaithful(_)
                | Error::NotGenerator
                | Error::NotProjective
                | Error::NotProgenerator(_)
                | Error::WrongType(_) => 2,
                Error::Inconclusive(_)
                | Error::Unsplit(_)
                | Error::FactorizationFailed(_)
                | Error::CharTooSmall { .. }
                | Error::Unsupported(_) => 3,
                _ => 1,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "morita", version, about = "Involutions, bilinear forms and Morita theory over exact fields")]
struct Cli {
    /// Input JSON: a file path, or inline JSON starting with `{`.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the field of the input algebra: `Q` or a prime.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true)]
    max_trials: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    Radical,
    Center,
    Idempotents,
    Basic,
    FormCorrespond,
    Hyperbolic,
    AntiStructureM2,
    ReduceStandard,
    Transfer,
    Orbit,
    PosetCheck,
    Incidence,
    PosetOfAlgebra,
    Steinitz,
    /// Run a bundled example; `demo list` names them.
    Demo { name: String },
    /// Experimental: look for Goldman elements in A ⊗ A.
    GoldmanSearch,
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Radical => "radical".into(),
            Command::Center => "center".into(),
            Command::Idempotents => "idempotents".into(),
            Command::Basic => "basic".into(),
            Command::FormCorrespond => "form-correspond".into(),
            Command::Hyperbolic => "hyperbolic".into(),
            Command::AntiStructureM2 => "anti-structure-m2".into(),
            Command::ReduceStandard => "reduce-standard".into(),
            Command::Transfer => "transfer".into(),
            Command::Orbit => "orbit".into(),
            Command::PosetCheck => "poset-check".into(),
            Command::Incidence => "incidence".into(),
            Command::PosetOfAlgebra => "poset-of-algebra".into(),
            Command::Steinitz => "steinitz".into(),
            Command::Demo { name } => format!("demo {name}"),
            Command::GoldmanSearch => "goldman-search".into(),
        }
    }

    fn citation(&self) -> &'static str {
        match self {
            Command::Demo { name } => demos::citation(name),
            _ => commands::citation(&self.name()),
        }
    }
}

fn read_input(input: Option<&str>) -> Result<Value, CliError> {
    let text = match input {
        None => return Err(CliError::Input("this command needs --input".into())),
        Some(s) if s.trim_start().starts_with('{') => s.to_string(),
        Some(path) => std::fs::read_to_string(path)?,
    };
    Ok(serde_json::from_str(&text)?)
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut search = SearchConfig::with_seed(cli.seed);
    if let Some(t) = cli.max_trials {
        search.max_trials = t;
    }
    let field = cli.field.as_deref().map(json::field_from_flag).transpose()?;
    let ctx = Context { search, field };
    if let Command::Demo { name } = &cli.command {
        return demos::run(name, &ctx);
    }
    let input = read_input(cli.input.as_deref())?;
    match &cli.command {
        Command::Radical => commands::radical(&input, &ctx),
        Command::Center => commands::center_cmd(&input, &ctx),
        Command::Idempotents => commands::idempotents(&input, &ctx),
        Command::Basic => commands::basic(&input, &ctx),
        Command::FormCorrespond => commands::form_correspond(&input, &ctx),
        Command::Hyperbolic => commands::hyperbolic(&input, &ctx),
        Command::AntiStructureM2 => commands::anti_structure_m2(&input, &ctx),
        Command::ReduceStandard => commands::reduce_standard(&input, &ctx),
        Command::Transfer => commands::transfer(&input, &ctx),
        Command::Orbit => commands::orbit(&input, &ctx),
        Command::PosetCheck => commands::poset_check(&input, &ctx),
        Command::Incidence => commands::incidence(&input, &ctx),
        Command::PosetOfAlgebra => commands::poset_of_algebra_cmd(&input, &ctx),
        Command::Steinitz => commands::steinitz(&input, &ctx),
        Command::GoldmanSearch => commands::goldman_search(&input, &ctx),
        Command::Demo { .. } => unreachable!("handled above"),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match run(&cli) {
        Ok(out) => (out.report, out.code as u8),
        Err(e) => {
            let code = e.exit_code();
            if code == 1 {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            let mut r = Report::new(&cli.command.name(), cli.command.citation());
            r.result = json!({ "error": error_kind(&e), "message": e.to_string() });
            (r, code)
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if !report.all_pass() {
        eprintln!("warning: some checks failed");
    }
    ExitCode::from(code)
}

fn error_kind(e: &CliError) -> &'static str {
    match e {
        CliError::Core(Error::NoSymmetricUnit) => "no symmetric unit",
        CliError::Core(Error::NotRegular) => "not regular",
        CliError::Core(Error::NotFaithful(_)) => "not faithful",
        CliError::Core(Error::NotGenerator) => "not a generator",
        CliError::Core(Error::NotProjective) => "not projective",
        CliError::Core(Error::NotProgenerator(_)) => "not a double progenerator",
        CliError::Core(Error::WrongType(_)) => "wrong type",
        CliError::Core(Error::Inconclusive(_)) => "inconclusive",
        CliError::Core(Error::Unsplit(_)) => "unsplit",
        CliError::Core(Error::FactorizationFailed(_)) => "factorization failed",
        CliError::Core(Error::CharTooSmall { .. }) => "characteristic too small",
        CliError::Core(Error::Unsupported(_)) => "unsupported",
        _ => "error",
    }
}
