//! The `distdom` command-line tool.
//!
//! Exit codes: 0 success (exact value, valid certificate), 1 invalid
//! certificate, 2 usage or input error, 3 value only bracketed, 4 search
//! inconclusive, 70 internal error.

pub mod config;
pub mod problems;
pub mod range;
pub mod render;
pub mod sweep;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use self::config::Config;
use self::problems::{run_problem, Problem};
use self::range::RangeArg;
use self::sweep::{run_sweep, write_csv, write_json_lines, SweepSpec};
use crate::construct::{classify, Method};
use crate::digraph::{export_graph, ExportFormat, Family, GeneralizedDigraph};
use crate::domination::verify;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_CERTIFICATE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BRACKET: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
    Dot,
    Edges,
}

#[derive(Debug, Parser)]
#[command(name = "distdom", version, about = "Distance-k domination in generalized de Bruijn and Kautz digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML file with oracle limits and a default sweep envelope.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Node budget for exhaustive search; 0 disables it.
    #[arg(long, global = true)]
    oracle_budget: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct Instance {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(short = 'n')]
    n: u64,
    #[arg(short = 'd')]
    d: u64,
}

#[derive(Debug, Args)]
struct Envelope {
    #[arg(short = 'n')]
    n: Option<RangeArg>,
    #[arg(short = 'd')]
    d: Option<RangeArg>,
    #[arg(short = 'k')]
    k: Option<RangeArg>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute or bracket the distance-k domination number of one digraph.
    Gamma {
        #[command(flatten)]
        instance: Instance,
        #[arg(short = 'k')]
        k: u32,
    },
    /// Classify every instance in a parameter range.
    Sweep {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[command(flatten)]
        envelope: Envelope,
        /// Leave the `ms` column empty so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check whether a vertex set distance-k dominates a digraph.
    Verify {
        #[command(flatten)]
        instance: Instance,
        #[arg(short = 'k')]
        k: u32,
        /// Vertex set such as `{0,1}`, `0,1` or `0 1`.
        #[arg(long)]
        set: String,
    },
    /// Search a parameter range for counterexamples to an open conjecture.
    Problems {
        /// `debruijn-necessity` or `kautz-upper`.
        #[arg(value_parser = parse_problem)]
        problem: Problem,
        #[command(flatten)]
        envelope: Envelope,
    },
    /// Print the digraph as DOT or an edge list.
    Export {
        #[command(flatten)]
        instance: Instance,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_problem(s: &str) -> std::result::Result<Problem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse a set literal: residues separated by commas or whitespace,
/// optionally wrapped in braces.
pub fn parse_set_literal(text: &str, n: u64) -> Result<VertexSet> {
    let t = text.trim();
    let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(Error::invalid(format!("unbalanced braces in set `{text}`"))),
    };
    let members = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| Error::invalid(format!("bad vertex `{s}` in set `{text}`"))))
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_members(n, members)
}

fn default_envelope(env: &Envelope, cfg: &Config) -> (RangeArg, RangeArg, RangeArg) {
    (
        env.n.or(cfg.sweep.n).unwrap_or(RangeArg { lo: 2, hi: 60 }),
        env.d.or(cfg.sweep.d).unwrap_or(RangeArg { lo: 2, hi: 5 }),
        env.k.or(cfg.sweep.k).unwrap_or(RangeArg { lo: 1, hi: 4 }),
    )
}

fn json<T: Serialize>(value: &T) -> Result<serde_json::Value> {
    serde_json::to_value(value).map_err(|e| Error::internal(e.to_string()))
}

fn render<T: Serialize>(value: &T, format: Format, out: &mut dyn Write) -> Result<()> {
    let v = json(value)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&v).map_err(|e| Error::internal(e.to_string()))? + "\n",
        Format::Table => render::table(&v),
        other => return Err(Error::invalid(format!("format {other:?} is not available for this command"))),
    };
    write_all(out, text.as_bytes())
}

fn write_all(out: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    out.write_all(bytes).map_err(|e| Error::invalid(format!("write failed: {e}")))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let limits = cfg.limits(cli.oracle_budget);
    match cli.command {
        Command::Gamma { instance, k } => {
            let g = GeneralizedDigraph::new(instance.family, instance.n, instance.d)?;
            let result = classify(&g, k, &limits)?;
            render(&result.record(), cli.format.unwrap_or(Format::Json), out)?;
            Ok(match result.method {
                m if m.is_exact() => EXIT_OK,
                Method::BracketOnly => EXIT_BRACKET,
                _ => EXIT_INCONCLUSIVE,
            })
        }
        Command::Sweep { family, envelope, no_timing } => {
            let (n, d, k) = default_envelope(&envelope, &cfg);
            let spec = SweepSpec { family, n, d, k, limits, timing: !no_timing };
            let rows = run_sweep(&spec);
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => write_csv(&rows, out)?,
                Format::Json => write_json_lines(&rows, out)?,
                Format::Table => write_all(out, render::table(&json(&rows)?).as_bytes())?,
                other => return Err(Error::invalid(format!("format {other:?} is not available for sweep"))),
            }
            Ok(EXIT_OK)
        }
        Command::Verify { instance, k, set } => {
            let g = GeneralizedDigraph::new(instance.family, instance.n, instance.d)?;
            let set = parse_set_literal(&set, g.n())?;
            let cert = verify(&g, &set, k)?;
            render(&cert.record(), cli.format.unwrap_or(Format::Json), out)?;
            Ok(if cert.valid { EXIT_OK } else { EXIT_INVALID_CERTIFICATE })
        }
        Command::Problems { problem, envelope } => {
            let (n, d, k) = default_envelope(&envelope, &cfg);
            let report = run_problem(problem, n, d, k, &limits)?;
            render(&report, cli.format.unwrap_or(Format::Json), out)?;
            Ok(EXIT_OK)
        }
        Command::Export { instance } => {
            let g = GeneralizedDigraph::new(instance.family, instance.n, instance.d)?;
            let format = match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => ExportFormat::Dot,
                Format::Edges => ExportFormat::EdgeList,
                other => return Err(Error::invalid(format!("format {other:?} is not available for export"))),
            };
            write_all(out, export_graph(&g, format)?.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Run the tool on `args` (including the program name). Output goes to
/// `stdout` unless `--out` names a file; diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.out.clone() {
        Some(path) => match File::create(&path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                execute(cli, &mut w).and_then(|code| {
                    w.flush().map_err(|e| Error::invalid(format!("write to {} failed: {e}", path.display())))?;
                    Ok(code)
                })
            }
            Err(e) => Err(Error::invalid(format!("cannot create {}: {e}", path.display()))),
        },
        None => execute(cli, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(std::env::args_os(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        return EXIT_USAGE;
    }
    code
}
