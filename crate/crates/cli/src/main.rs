//! `cyclovan`: cyclotomic polynomials, minimal vanishing sums, and
//! 0,1-multiples from the command line.
//!
//! Exit status is 0 on success, 1 for invalid input or any other error, and
//! 2 when a mathematical check ran to completion and failed.

mod cache;
mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cache::Cache;
use crate::commands::Request;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "cyclovan", version, about = "Cyclotomic polynomials and minimal vanishing sums of roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Leave `elapsed_ms` out of the report.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Directory for cached enumerate/search/verify-conjecture results.
    #[arg(long, global = true, env = "CYCLOVAN_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The cyclotomic polynomial Φ_N.
    Cyclo { n: usize },
    /// Euler's totient φ(N).
    Phi { n: u64 },
    /// The Möbius function μ(N).
    Mobius { n: u64 },
    /// The height A(N), the largest absolute coefficient of Φ_N.
    Height { n: usize },
    /// Whether Φ_N is flat.
    Flat { n: usize },
    /// The 0,1-polynomial Φ_N^T of an even N with Φ_N flat.
    Transform { n: usize },
    /// The product formula for Φ_PQ and its parity split.
    Lamleung { p: usize, q: usize },
    /// Gaps between consecutive exponents of Φ_N^T.
    Gaps { n: usize },
    /// Least degree of Φ_2PQ^T over its rotations.
    Theorem2pq { p: usize, q: usize },
    /// Minimal vanishing sums of N-th roots of unity, up to rotation.
    Enumerate {
        n: usize,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// 0,1-multiples of Φ_N and the least-degree members with enough terms.
    Search {
        n: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 3)]
        min_terms: usize,
    },
    /// Least degree of a member with at least three terms at N = 2PQ.
    VerifyConjecture { p: usize, q: usize },
    /// Low-exponent witnesses for the members of small degree at N.
    LemmaS { n: usize },
}

impl Command {
    fn request(&self) -> Request {
        match *self {
            Command::Cyclo { n } => Request::Cyclo { n },
            Command::Phi { n } => Request::Phi { n },
            Command::Mobius { n } => Request::Mobius { n },
            Command::Height { n } => Request::Height { n },
            Command::Flat { n } => Request::Flat { n },
            Command::Transform { n } => Request::Transform { n },
            Command::Lamleung { p, q } => Request::Lamleung { p, q },
            Command::Gaps { n } => Request::Gaps { n },
            Command::Theorem2pq { p, q } => Request::Theorem2pq { p, q },
            Command::Enumerate { n, max_weight } => Request::Enumerate { n, max_weight: max_weight.unwrap_or(n) },
            Command::Search { n, max_degree, min_terms } => {
                Request::Search { n, max_degree: max_degree.unwrap_or(n.saturating_sub(1)), min_terms }
            }
            Command::VerifyConjecture { p, q } => Request::VerifyConjecture { p, q },
            Command::LemmaS { n } => Request::LemmaS { n },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("warning: could not size the worker pool: {e}");
        }
    }

    let request = cli.command.request();
    let cache = request.cacheable().then(|| cli.cache_dir.clone()).flatten().map(Cache::new);
    let started = Instant::now();

    let replayed = cache.as_ref().and_then(|c| c.load(&request));
    let cached = replayed.is_some();
    let outcome = match replayed {
        Some(outcome) => outcome,
        None => match commands::execute(&request) {
            Ok(outcome) => {
                if let Some(c) = &cache {
                    if let Err(e) = c.store(&request, &outcome) {
                        eprintln!("warning: could not write cache entry: {e}");
                    }
                }
                outcome
            }
            Err(e) => return report_error(&request, &e, cli.format),
        },
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;

    match cli.format {
        Format::Json => {
            let mut envelope = Map::new();
            envelope.insert("command".into(), json!(request.name()));
            envelope.insert("parameters".into(), request.parameters());
            envelope.insert("result".into(), outcome.result.clone());
            envelope.insert("tool_version".into(), json!(TOOL_VERSION));
            if !cli.no_timing {
                envelope.insert("elapsed_ms".into(), json!(elapsed_ms));
            }
            if cached {
                envelope.insert("cached".into(), json!(true));
            }
            emit(&format!("{}\n", serde_json::to_string_pretty(&Value::Object(envelope)).expect("serializable")));
        }
        Format::Text => {
            emit(&render::text(&request, &outcome.result));
            if cached {
                eprintln!("(cached)");
            }
            if !cli.no_timing {
                eprintln!("elapsed: {elapsed_ms} ms");
            }
        }
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("VERIFICATION FAILED: {}", request.name());
        ExitCode::from(2)
    }
}

/// Writes to stdout; a reader that went away (`| head`) is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|()| out.flush());
}

fn report_error(request: &Request, e: &cyclovan::Error, format: Format) -> ExitCode {
    match format {
        Format::Json => {
            let body = json!({
                "command": request.name(),
                "parameters": request.parameters(),
                "error": { "kind": commands::error_kind(e), "message": e.to_string() },
                "tool_version": TOOL_VERSION,
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable")));
        }
        Format::Text => eprintln!("error: {e}"),
    }
    ExitCode::from(1)
}
