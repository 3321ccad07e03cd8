//! Argument parsing and subcommand dispatch.
//!
//! [`dispatch`] never touches the process: it returns the exit code and the
//! buffered output, which keeps the binary a thin wrapper and the commands
//! testable in-process.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use operad_forge_core::{
    compose_pl, degree_bounds, enumerate_trees, factorize, generator_series, indecomposables, max_term, min_term,
    parse_tree, SetOperad, Tree,
};

use crate::json::{sum_to_json, tree_to_json};
use crate::parallel::{self, threads_from_env, with_pool};
use crate::verify::{self, Check, OperadKind};

/// Exit code for a completed command whose verification failed.
pub const EXIT_FAILED: i32 = 1;
/// Exit code for bad arguments, malformed trees and out-of-range indices.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "operad-forge", version, about = "Labelled rooted trees, pre-Lie composition and free-operad checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every labelled rooted tree on n vertices.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the degree of a tree.
    Degree {
        tree: Option<String>,
        /// One tree per line.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Compose two trees at a position.
    Compose {
        #[arg(long, value_parser = ["pl", "max", "min", "nap"])]
        operad: String,
        #[arg(short = 'i')]
        i: usize,
        t: String,
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Extremal-degree terms of a pre-Lie composition and their predicted degrees.
    Minmax {
        #[arg(short = 'i')]
        i: usize,
        t: String,
        s: String,
    },
    /// Factor a tree into indecomposables.
    Factorize {
        tree: Option<String>,
        /// One tree per line.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// List or count the indecomposable trees on n vertices.
    Indecomposables {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Coefficients of the generator series.
    Hilbert {
        #[arg(long)]
        order: usize,
    },
    /// Run an exhaustive check.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Operad axioms over all basis elements up to an arity.
    Axioms {
        #[arg(long, value_parser = ["pl", "max", "min", "nap"])]
        operad: String,
        #[arg(long)]
        max_arity: usize,
    },
    /// Operation trees over indecomposables evaluate injectively onto all trees.
    Freeness {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Extremal terms are unique and match the predicted degrees.
    Minmax {
        #[arg(long)]
        max_arity: usize,
    },
    /// The pre-Lie relation at the operad level.
    Prelie,
    /// Find two operation trees with the same evaluation.
    Collisions {
        #[arg(long, value_parser = ["min", "nap"])]
        operad: String,
        #[arg(short = 'n')]
        n: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    match with_pool(threads, || run(cli.command)) {
        Ok(Ok((ok, stdout))) => Outcome { code: if ok { 0 } else { EXIT_FAILED }, stdout, stderr: String::new() },
        Ok(Err(e)) | Err(e) => usage_error(e),
    }
}

fn usage_error(e: anyhow::Error) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") }
}

fn tree_arg(text: &str) -> Result<Tree> {
    parse_tree(text).with_context(|| format!("cannot parse tree {text:?}"))
}

/// The positional tree plus every non-blank line of `--input`.
fn tree_inputs(tree: Option<String>, input: Option<PathBuf>) -> Result<Vec<String>> {
    let mut out: Vec<String> = tree.into_iter().collect();
    if let Some(path) = input {
        let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
        out.extend(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from));
    }
    if out.is_empty() {
        bail!("give a tree or --input FILE");
    }
    Ok(out)
}

fn render(check: Check) -> (bool, String) {
    let mut out = String::new();
    for line in &check.lines {
        out.push_str(line);
        out.push('\n');
    }
    (check.ok, out)
}

fn run(command: Command) -> Result<(bool, String)> {
    let mut out = String::new();
    match command {
        Command::Enumerate { n, json } => {
            for t in enumerate_trees(n)? {
                if json {
                    writeln!(out, "{}", tree_to_json(&t))?;
                } else {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Command::Degree { tree, input } => {
            let batch = input.is_some();
            for text in tree_inputs(tree, input)? {
                let t = tree_arg(&text)?;
                if batch {
                    writeln!(out, "{t}\t{}", t.degree())?;
                } else {
                    writeln!(out, "{}", t.degree())?;
                }
            }
        }
        Command::Compose { operad, i, t, s, json } => {
            let (t, s) = (tree_arg(&t)?, tree_arg(&s)?);
            match operad.parse::<OperadKind>()? {
                OperadKind::PreLie => {
                    let sum = compose_pl(&t, i, &s)?;
                    writeln!(out, "{}", if json { sum_to_json(&sum) } else { sum.to_string() })?;
                }
                OperadKind::Set(kind) => {
                    let u = kind.compose(&t, i, &s)?;
                    writeln!(out, "{}", if json { tree_to_json(&u) } else { u.to_string() })?;
                }
            }
        }
        Command::Minmax { i, t, s } => {
            let (t, s) = (tree_arg(&t)?, tree_arg(&s)?);
            let lo = min_term(&t, i, &s)?;
            let hi = max_term(&t, i, &s)?;
            let (lo_bound, hi_bound) = degree_bounds(&t, i, &s)?;
            writeln!(out, "min {lo} degree {}", lo.degree())?;
            writeln!(out, "max {hi} degree {}", hi.degree())?;
            writeln!(out, "bounds {lo_bound} {hi_bound}")?;
        }
        Command::Factorize { tree, input } => {
            let batch = input.is_some();
            for text in tree_inputs(tree, input)? {
                let w = factorize(&tree_arg(&text)?)?;
                if batch {
                    writeln!(out, "{text}\t{w}")?;
                } else {
                    writeln!(out, "{w}")?;
                }
            }
        }
        Command::Indecomposables { n, count } => {
            if count {
                writeln!(out, "{}", parallel::count_indecomposables(n)?)?;
            } else {
                for t in indecomposables(n)? {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Command::Hilbert { order } => {
            if order < 2 {
                bail!("--order must be at least 2");
            }
            let beta = generator_series(order);
            writeln!(out, "{beta}")?;
            for n in 2..=order {
                writeln!(out, "{n}:{}", beta.coeff(n))?;
            }
        }
        Command::Verify { check } => {
            let check = match check {
                VerifyCommand::Axioms { operad, max_arity } => verify::axioms(operad.parse()?, max_arity),
                VerifyCommand::Freeness { n } => verify::freeness(n)?,
                VerifyCommand::Minmax { max_arity } => verify::minmax(max_arity),
                VerifyCommand::Prelie => verify::prelie(),
                VerifyCommand::Collisions { operad, n } => verify::collisions(operad.parse::<SetOperad>()?, n)?,
            };
            return Ok(render(check));
        }
    }
    Ok((true, out))
}
