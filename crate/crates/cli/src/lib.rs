//! The `cotlab` command: JSON documents describing a category (or a ring
//! morphism), its functors, modules and class specs; subcommands that run
//! checks on them; reports as aligned text or JSON.
//!
//! Exit status: 0 when no check fails, 1 when some check fails, 2 on
//! schema, I/O and usage errors.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use clap::{Parser, Subcommand};
use cotlab_transfer::{PerpSelector, Side};

pub use commands::Command;
pub use document::{load_file, Loaded, SpecDocument};
pub use error::{CliError, Result};
pub use report::{Check, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "cotlab", version, about = "Transfer of cotorsion pairs on finite instances")]
pub struct Cli {
    /// Emit the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Category axioms, zero trace, chain diagnostics, exactness of q_A /
    /// p_A and functoriality of every functor.
    Validate { file: String },
    /// Projectivity or injectivity of the document's functors, by the
    /// category-algebra route and by the intrinsic characterization.
    Classify {
        file: String,
        #[arg(long, value_parser = ["proj", "inj"])]
        side: String,
        #[arg(long)]
        functor: Option<String>,
    },
    /// The transfer map theta in one degree, with its rank data, the
    /// left derived functor dimension and omega where defined.
    Theta {
        file: String,
        /// ringmor, q:A, p:A, cs or sk (default ringmor on ring morphisms).
        #[arg(long)]
        backend: Option<String>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Perpendicular-class membership of every functor.
    Perp {
        file: String,
        #[arg(long, value_parser = ["qPerp", "pPerp", "sPerp", "perpS"])]
        selector: String,
        /// A class spec of the document, all / projectives / injectives, or
        /// A=injectives,B=all.
        #[arg(long)]
        classes: String,
    },
    /// Functors (or source modules) up to isomorphism with bounded dimension.
    Enumerate {
        file: String,
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        classify: bool,
    },
    /// The full battery of consistency checks.
    Report { file: String },
    /// The canonical form of a document (reduced integers, sorted keys).
    Canonical { file: String },
}

/// What a run prints and its exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli, argv: &[String]) -> Result<(String, i32)> {
    let (file, cmd) = match &cli.command {
        Sub::Validate { file } => (file, Command::Validate),
        Sub::Classify { file, side, functor } => {
            let side = if side == "proj" { Side::Projective } else { Side::Injective };
            (file, Command::Classify { side, functor: functor.clone() })
        }
        Sub::Theta { file, backend, degree, source, target } => {
            if *degree == 0 {
                return Err(CliError::Usage("--degree must be at least 1".into()));
            }
            let backend = backend.clone().unwrap_or_else(|| "ringmor".into());
            (file, Command::Theta { backend, degree: *degree, source: source.clone(), target: target.clone() })
        }
        Sub::Perp { file, selector, classes } => {
            let selector = PerpSelector::parse(selector).expect("validated by clap");
            (file, Command::Perp { selector, classes: classes.clone() })
        }
        Sub::Enumerate { file, max_dim, classify } => (file, Command::Enumerate { max_dim: *max_dim, classify: *classify }),
        Sub::Report { file } => (file, Command::Report),
        Sub::Canonical { file } => {
            let text = std::fs::read_to_string(file).map_err(|source| CliError::Io { path: file.clone(), source })?;
            return Ok((SpecDocument::parse(&text)?.to_canonical_json(), 0));
        }
    };
    let (_, loaded) = load_file(file)?;
    let checks = commands::run(&cmd, &loaded)?;
    let report = Report::new(argv.to_vec(), checks);
    let out = if cli.json { report.to_json() } else { report.to_text() };
    Ok((out, report.exit_code))
}

/// Parses and runs `argv` (without the program name).
pub fn run(argv: &[String]) -> Outcome {
    let full = std::iter::once("cotlab".to_string()).chain(argv.iter().cloned());
    let cli = match Cli::try_parse_from(full) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut text = e.render().to_string();
            if code != 0 && !text.contains("Usage:") {
                text.push_str(&format!("\n{}\n", <Cli as clap::CommandFactory>::command().render_usage()));
            }
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), exit_code: 0 }
            } else {
                Outcome { stdout: String::new(), stderr: text, exit_code: 2 }
            };
        }
    };
    match execute(&cli, argv) {
        Ok((stdout, exit_code)) => Outcome { stdout, stderr: String::new(), exit_code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("cotlab: {e}\n"), exit_code: e.exit_code() },
    }
}
