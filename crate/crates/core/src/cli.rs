//! The `digroup` command line.
//!
//! Exit codes: 0 when the command succeeds and the property it reports
//! holds, 1 when the property is false (validation fails, not isomorphic,
//! a claim fails), 2 for usage and input errors.
//!
//! Any `FILE` argument may also be written `builtin:NAME`, e.g.
//! `builtin:N` or `builtin:cyclic(4)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::builtin::Builtin;
use crate::digroup::{validate_digroup, Digroup, DigroupError};
use crate::enumerate::{
    enumerate_digroups, verify_claims_with, ClassCounts, SearchMode, SearchOptions,
};
use crate::io::{
    catalog_line, parse_digroup, parse_triple, render_table, serialize_digroup, serialize_triple,
    DigroupFile,
};
use crate::morphism::find_isomorphism;
use crate::subdigroup::all_subdigroups;
use crate::table::DigroupTable;
use crate::translations::cayley_embedding;
use crate::triple::{digroup_from_triple, triple_from_digroup, validate_triple, TripleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "digroup", version, about = "Finite digroup toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a digroup file and print every violated law
    Check {
        file: String,
        /// Also print the operation tables
        #[arg(long)]
        render: bool,
    },
    /// Order, commutativity, group test, Liu inverses, subdigroup count
    Info { file: String },
    /// List all subdigroups
    Subs { file: String },
    /// Print an isomorphism between two digroups, or "not isomorphic"
    Iso { first: String, second: String },
    /// Emit the translation product with the embedding and its diagonal
    Embed {
        file: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Standard-triple workflows
    #[command(subcommand)]
    Triple(TripleCommand),
    /// Classify digroups of order N up to isomorphism
    Enumerate(EnumerateArgs),
    /// Check the minimality and uniqueness claims for M and N
    Claims {
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Write a named digroup: M, N, S3, trivial(n), cyclic(n), Zn
    Builtin {
        name: String,
        #[command(flatten)]
        out: OutArg,
        /// Print the operation tables instead of the document
        #[arg(long)]
        render: bool,
    },
}

#[derive(Debug, Subcommand)]
enum TripleCommand {
    /// Build the standard triple of a digroup
    Extract {
        file: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Validate a triple file
    Check { file: String },
    /// Build the digroup of a triple file
    Build {
        file: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write to this file instead of stdout
    #[arg(long = "out", value_name = "FILE")]
    path: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    order: usize,
    /// Use the brute-force scan (orders up to 3)
    #[arg(long)]
    naive: bool,
    /// Print class tallies only
    #[arg(long)]
    count_only: bool,
    #[command(flatten)]
    out: OutArg,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Keep only the first K classes
    #[arg(long, value_name = "K")]
    max_solutions: Option<usize>,
    /// Allow orders above 6
    #[arg(long)]
    allow_large_order: bool,
}

/// An input or usage problem; always exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<i32, Usage>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
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
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_table(spec: &str) -> Result<DigroupTable, Usage> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(name.parse::<Builtin>()?.build().into_table());
    }
    let text = fs::read_to_string(spec).map_err(|e| Usage(format!("{spec}: {e}")))?;
    parse_digroup(&text).map_err(|e| Usage(format!("{spec}: {e}")))
}

/// Loads and validates; an axiom failure is reported and yields exit 1.
fn load_digroup(spec: &str, err: &mut dyn Write) -> Result<Result<Digroup, i32>, Usage> {
    match Digroup::new(load_table(spec)?) {
        Ok(d) => Ok(Ok(d)),
        Err(DigroupError::Invalid(report)) => {
            write!(err, "{spec} is not a digroup: {report}")?;
            Ok(Err(EXIT_FALSE))
        }
        Err(e) => Err(Usage(e.to_string())),
    }
}

macro_rules! digroup_or_exit {
    ($spec:expr, $err:expr) => {
        match load_digroup($spec, $err)? {
            Ok(d) => d,
            Err(code) => return Ok(code),
        }
    };
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<(), Usage> {
    match path {
        Some(p) => write_file(p, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn write_file(p: &Path, text: &str) -> Result<(), Usage> {
    fs::write(p, text).map_err(|e| Usage(format!("{}: {e}", p.display())))
}

#[derive(Serialize)]
struct EmbedFile {
    product: DigroupFile,
    /// Pairs `(i, j)` of translation indices, per product element.
    pairs: Vec<(usize, usize)>,
    eta: Vec<usize>,
    diagonal: Vec<usize>,
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file, render } => {
            let t = load_table(&file)?;
            let report = validate_digroup(&t);
            if render {
                write!(out, "{}", render_table(&t))?;
            }
            writeln!(out, "{}", report.to_string().trim_end())?;
            Ok(if report.ok { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Info { file } => {
            let d = digroup_or_exit!(&file, err);
            let subs = all_subdigroups(&d)?;
            writeln!(out, "order: {}", d.order())?;
            writeln!(out, "identity: {}", d.label(d.identity()))?;
            match d.non_commuting_pair() {
                None => writeln!(out, "commutative: yes")?,
                Some((x, y)) => writeln!(
                    out,
                    "commutative: no ({0}⇀{1} = {2}, {0}↼{1} = {3})",
                    d.label(x),
                    d.label(y),
                    d.label(d.left(x, y)),
                    d.label(d.right(x, y))
                )?,
            }
            writeln!(out, "group: {}", if d.is_group() { "yes" } else { "no" })?;
            let inverses: Vec<String> = d
                .elements()
                .map(|x| format!("{}->{}", d.label(x), d.label(d.liu_inverse(x))))
                .collect();
            writeln!(out, "liu inverses: {}", inverses.join(" "))?;
            writeln!(out, "subdigroups: {}", subs.len())?;
            Ok(EXIT_OK)
        }
        Command::Subs { file } => {
            let d = digroup_or_exit!(&file, err);
            for h in all_subdigroups(&d)? {
                let labels: Vec<String> = h.elements().map(|x| d.label(x)).collect();
                writeln!(out, "{{{}}}", labels.join(", "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let a = digroup_or_exit!(&first, err);
            let b = digroup_or_exit!(&second, err);
            match find_isomorphism(&a, &b) {
                Some(m) => {
                    for x in a.elements() {
                        writeln!(out, "{} -> {}", a.label(x), b.label(m.apply(x)))?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Embed { file, out: path } => {
            let d = digroup_or_exit!(&file, err);
            let p = cayley_embedding(&d)?;
            let doc = EmbedFile {
                product: DigroupFile::from(p.table.table()),
                pairs: p.pair_labels.clone(),
                eta: p.eta.image().to_vec(),
                diagonal: p.diagonal.to_vec(),
            };
            let mut text = serde_json::to_string_pretty(&doc)?;
            text.push('\n');
            emit(out, &path.path, &text)?;
            Ok(EXIT_OK)
        }
        Command::Triple(cmd) => triple(cmd, out, err),
        Command::Enumerate(args) => enumerate(args, out),
        Command::Claims { workers } => {
            let opts = SearchOptions::default().with_workers(workers);
            if workers == 0 {
                return Err(Usage("at least one worker is required".into()));
            }
            let report = verify_claims_with(&opts);
            write!(out, "{report}")?;
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Builtin {
            name,
            out: path,
            render,
        } => {
            let d = name.parse::<Builtin>()?.build();
            let text = if render {
                render_table(d.table())
            } else {
                serialize_digroup(d.table())
            };
            emit(out, &path.path, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn triple(cmd: TripleCommand, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let read = |file: &str| -> Result<_, Usage> {
        let text = fs::read_to_string(file).map_err(|e| Usage(format!("{file}: {e}")))?;
        parse_triple(&text).map_err(|e| Usage(format!("{file}: {e}")))
    };
    match cmd {
        TripleCommand::Extract { file, out: path } => {
            let d = digroup_or_exit!(&file, err);
            emit(out, &path.path, &serialize_triple(&triple_from_digroup(&d)))?;
            Ok(EXIT_OK)
        }
        TripleCommand::Check { file } => {
            let report = validate_triple(&read(&file)?);
            writeln!(out, "{}", report.to_string().trim_end())?;
            Ok(if report.ok { EXIT_OK } else { EXIT_FALSE })
        }
        TripleCommand::Build { file, out: path } => match digroup_from_triple(&read(&file)?) {
            Ok(d) => {
                emit(out, &path.path, &serialize_digroup(d.table()))?;
                Ok(EXIT_OK)
            }
            Err(e @ (TripleError::Invalid(_) | TripleError::NotADigroup(_))) => {
                writeln!(err, "{e}")?;
                Ok(EXIT_FALSE)
            }
            Err(e) => Err(Usage(e.to_string())),
        },
    }
}

fn enumerate(args: EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let opts = SearchOptions {
        max_solutions: args.max_solutions,
        workers: args.workers,
        mode: if args.naive {
            SearchMode::Naive
        } else {
            SearchMode::Propagating
        },
        allow_large_order: args.allow_large_order,
    };
    let catalog = enumerate_digroups(args.order, &opts)?;
    let text = if args.count_only {
        let c = ClassCounts::tally(&catalog);
        format!(
            "total={} commutative={} non_commutative={} groups={} non_group={}\n",
            c.total, c.commutative, c.non_commutative, c.groups, c.non_group
        )
    } else {
        catalog.iter().map(|e| catalog_line(e) + "\n").collect()
    };
    emit(out, &args.out.path, &text)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("digroup").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["check", "builtin:M"]).0, EXIT_OK);
        assert_eq!(call(&["iso", "builtin:M", "builtin:Z2"]).0, EXIT_FALSE);
        assert_eq!(call(&["iso", "builtin:M", "builtin:trivial(2)"]).0, EXIT_OK);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "/nonexistent/file.json"]).0, EXIT_USAGE);
        assert_eq!(call(&["enumerate", "9"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn enumerate_count_only() {
        let (code, out, _) = call(&["enumerate", "2", "--count-only"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("total=2 "), "{out}");
    }

    #[test]
    fn info_on_n() {
        let (code, out, _) = call(&["info", "builtin:N"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("commutative: no"));
        assert!(out.contains("group: no"));
    }
}
