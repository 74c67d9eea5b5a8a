//! `ordcolor`: list 3-coloring of ordered graphs from the command line.
//!
//! Exit codes: 0 colorable, free or passed; 1 not colorable, pattern found
//! or check failed; 2 refused (precondition not met); 3 input error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::RunReport;

#[derive(Parser)]
#[command(name = "ordcolor", version, about = "List 3-coloring for ordered graphs")]
struct Cli {
    /// Print the report as a JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Alg {
    Oracle,
    #[value(name = "2sat")]
    TwoSat,
    Chordal,
    Jw,
    J16,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Backend {
    #[value(name = "link-reduction")]
    Reduction,
    #[value(name = "link-enum")]
    Enumeration,
}

#[derive(Subcommand)]
enum Command {
    /// Decide L-colorability of a graph file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "oracle")]
        alg: Alg,
        /// Width for `--alg jw`.
        #[arg(long, default_value_t = 1)]
        w: usize,
        /// Padding for `--alg j16`.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// With `--alg j16`: the input is free of the mirrored pattern.
        #[arg(long)]
        reversed: bool,
        /// Link-check backend for `--alg jw`.
        #[arg(long, value_enum, default_value = "link-reduction")]
        backend: Backend,
        /// Vertex cap for `--alg oracle`.
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Report whether a graph avoids a pattern (catalog id or graph file).
    CheckFree { file: PathBuf, pattern: String },
    /// Complexity of list 3-coloring graphs that avoid a pattern.
    Classify { pattern: String },
    /// Generate a hardness gadget from an NAE file (h1, h2) or a graph file.
    Gen {
        input: PathBuf,
        #[arg(long)]
        gadget: String,
        #[arg(long)]
        order: Option<String>,
        /// Mirror the generated gadget.
        #[arg(long)]
        reversed: bool,
        /// Graph output; stdout when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Provenance output; defaults to `<out>.prov`.
        #[arg(long)]
        prov: Option<PathBuf>,
    },
    /// Check a generated gadget against its provenance sidecar.
    Verify { file: PathBuf, prov: PathBuf },
    /// Emit a reproducible random instance (ChaCha8 seeded by `--seed`).
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Edge probability.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Probability that a list is {1,2,3}.
        #[arg(long, default_value_t = 0.5)]
        full: f64,
        /// Reject graphs containing this pattern id.
        #[arg(long)]
        free_of: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        tries: usize,
        /// Emit a monotone NAE instance with this many clauses over `--n` variables.
        #[arg(long)]
        nae_clauses: Option<usize>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// Input problems: unreadable files, parse errors, bad arguments.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = match cli.command {
        Command::Solve { file, alg, w, k, l, reversed, backend, cap } => {
            commands::solve(&file, alg, w, k, l, reversed, backend, cap)
        }
        Command::CheckFree { file, pattern } => commands::check_free(&file, &pattern),
        Command::Classify { pattern } => commands::classify(&pattern),
        Command::Gen { input, gadget, order, reversed, out, prov } => {
            commands::gen(&input, &gadget, order.as_deref(), reversed, out.as_deref(), prov.as_deref())
        }
        Command::Verify { file, prov } => commands::verify(&file, &prov),
        Command::Random { seed, n, p, full, free_of, tries, nae_clauses, out } => {
            commands::random(seed, n, p, full, free_of.as_deref(), tries, nae_clauses, out.as_deref())
        }
    };
    match result {
        Ok(Some(mut report)) => {
            report.elapsed = start.elapsed();
            print!("{}", if cli.json { report.json() } else { report.text() });
            ExitCode::from(report.verdict.exit_code() as u8)
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(InputError(msg)) => {
            if cli.json {
                println!("{}", serde_json::json!({ "verdict": "input-error", "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(3)
        }
    }
}

pub type CmdResult = Result<Option<RunReport>, InputError>;
