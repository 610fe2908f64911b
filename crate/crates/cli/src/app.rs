//! Argument parsing and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{self, CliError, CliResult, EnumKind, Generated, Output, Selection, Workbench};
use crate::document;

#[derive(Debug, Parser)]
#[command(name = "psbck", version, about = "Workbench for finite pseudo-BCK algebras with very true operators")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify every algebra and classify the maps, subsets, valuations and homs of a file.
    Validate(FileArg),
    /// Basic properties and class memberships of an algebra.
    Props {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Enumerate operators, deductive systems, morphisms or substructures.
    Enum {
        kind: Kind,
        #[command(flatten)]
        file: FileArg,
        #[command(flatten)]
        sel: SelectArgs,
    },
    /// Quotient by a normal deductive system.
    Quotient {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        ds: String,
    },
    /// Lift a very true operator to a quotient.
    Lift {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        vto: String,
        #[arg(long)]
        ds: String,
    },
    /// The canonical pair of truth-depressing hedges for a very true operator.
    Hedges {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        vto: String,
    },
    /// Factor a VT-homomorphism through a quotient.
    Factor {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        hom: String,
        #[arg(long)]
        vto: String,
        #[arg(long)]
        target_vto: String,
        #[arg(long)]
        ds: String,
    },
    /// Check or transform a pseudo-valuation.
    Valuation {
        #[command(subcommand)]
        action: ValuationAction,
    },
    /// Run the property suite on every algebra of a file, and optionally on generated ones.
    Suite {
        #[command(flatten)]
        file: FileArg,
        /// Number of generated algebras to add.
        #[arg(long, default_value_t = 0)]
        generated: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ValuationAction {
    /// Check the pseudo-valuation and valuation axioms.
    Check {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        valuation: String,
    },
    /// Compose a pseudo-valuation with a very true operator.
    Compose {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        vto: String,
    },
}

#[derive(Debug, Args)]
pub struct FileArg {
    /// Input document.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub vto: Option<String>,
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub target_vto: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Into,
    Clo,
    Vto,
    Ds,
    Dsn,
    Dsv,
    Hom,
    Vthom,
    Cong,
    Smarandache,
    Svto,
}

impl From<Kind> for EnumKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Into => EnumKind::Into,
            Kind::Clo => EnumKind::Clo,
            Kind::Vto => EnumKind::Vto,
            Kind::Ds => EnumKind::Ds,
            Kind::Dsn => EnumKind::Dsn,
            Kind::Dsv => EnumKind::Dsv,
            Kind::Hom => EnumKind::Hom,
            Kind::Vthom => EnumKind::Vthom,
            Kind::Cong => EnumKind::Cong,
            Kind::Smarandache => EnumKind::Smarandache,
            Kind::Svto => EnumKind::Svto,
        }
    }
}

/// What a run prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the workbench on `args` (including the program name). `max_n` is the
/// value of `PSBCK_MAX_N`, if set.
pub fn run<I, T>(args: I, max_n: Option<String>) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Run { stdout: String::new(), stderr: rendered, code: 2 }
            } else {
                Run { stdout: rendered, stderr: String::new(), code: 0 }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli, max_n) {
        Ok(out) => {
            let stdout = if json { render_json(&out.json) } else { out.text };
            Run { stdout, stderr: String::new(), code: out.status }
        }
        Err(e) => {
            let code = e.exit_code();
            if json {
                let body = serde_json::json!({
                    "schema": commands::SCHEMA,
                    "error": { "code": e.code(), "messages": e.messages() },
                });
                Run { stdout: render_json(&body), stderr: String::new(), code }
            } else {
                let stderr = e.messages().iter().map(|m| format!("error[{}]: {m}\n", e.code())).collect();
                Run { stdout: String::new(), stderr, code }
            }
        }
    }
}

fn render_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn load(file: &FileArg, max_n: Option<String>) -> CliResult<Workbench> {
    let limits = commands::limits(max_n)?;
    let text = std::fs::read_to_string(&file.file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.file.display())))?;
    let doc = document::parse(&text).map_err(CliError::Parse)?;
    Ok(Workbench::new(doc, limits))
}

fn dispatch(cli: Cli, max_n: Option<String>) -> CliResult<Output> {
    match cli.command {
        Command::Validate(file) => Ok(commands::validate(&load(&file, max_n)?)),
        Command::Props { file, algebra } => {
            commands::props(&load(&file, max_n)?, &Selection { algebra, ..Selection::default() })
        }
        Command::Enum { kind, file, sel } => {
            let selection = Selection {
                algebra: sel.algebra,
                vto: sel.vto,
                target: sel.target,
                target_vto: sel.target_vto,
                q: sel.q,
                ..Selection::default()
            };
            commands::enumerate(&load(&file, max_n)?, kind.into(), &selection)
        }
        Command::Quotient { file, ds } => {
            commands::quotient(&load(&file, max_n)?, &Selection { ds: Some(ds), ..Selection::default() })
        }
        Command::Lift { file, vto, ds } => {
            commands::lift(&load(&file, max_n)?, &Selection { vto: Some(vto), ds: Some(ds), ..Selection::default() })
        }
        Command::Hedges { file, vto } => {
            commands::hedges(&load(&file, max_n)?, &Selection { vto: Some(vto), ..Selection::default() })
        }
        Command::Factor { file, hom, vto, target_vto, ds } => {
            let sel = Selection {
                hom: Some(hom),
                vto: Some(vto),
                target_vto: Some(target_vto),
                ds: Some(ds),
                ..Selection::default()
            };
            commands::factor(&load(&file, max_n)?, &sel)
        }
        Command::Valuation { action: ValuationAction::Check { file, valuation } } => commands::valuation_check(
            &load(&file, max_n)?,
            &Selection { valuation: Some(valuation), ..Selection::default() },
        ),
        Command::Valuation { action: ValuationAction::Compose { file, valuation, vto } } => {
            let sel = Selection { valuation: Some(valuation), vto: Some(vto), ..Selection::default() };
            commands::valuation_compose(&load(&file, max_n)?, &sel)
        }
        Command::Suite { file, generated, seed, max_n: size } => {
            let g = (generated > 0).then_some(Generated { count: generated, seed, max_n: size });
            commands::suite(&load(&file, max_n)?, g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_line_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_2() {
        let r = run(["psbck", "enum", "nope", "x.alg"], None);
        assert_eq!(r.code, 2);
        assert!(r.stderr.contains("nope"));
        let r = run(["psbck", "validate", "/definitely/missing.alg"], None);
        assert_eq!(r.code, 2);
        assert!(r.stderr.starts_with("error[E_USAGE]: cannot read"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let r = run(["psbck", "--help"], None);
        assert_eq!(r.code, 0);
        assert!(r.stdout.contains("validate"));
    }
}
