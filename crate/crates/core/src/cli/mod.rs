//! Command-line front end. [`run`] parses `std::env::args`; [`run_with`]
//! takes explicit arguments and writers.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::link::SignConvention;

pub use output::{cell_text, parse_csv, Document, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// `QxT`: `Q` values of q-degree (`0..Q`) and `T` values of t-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowArg {
    pub q: u32,
    pub t: u32,
}

impl FromStr for WindowArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (q, t) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("window `{s}` is not of the form QxT"))?;
        let parse = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("window `{s}`: {e}"));
        let w = WindowArg { q: parse(q)?, t: parse(t)? };
        if w.q == 0 || w.t == 0 {
            return Err(format!("window `{s}` is empty"));
        }
        Ok(w)
    }
}

#[derive(Debug, Parser)]
#[command(name = "haiman", version, about = "Generalized Haiman ideals, q,t-Catalan numbers and related checks in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Record wall-clock timings in JSON output (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Pair {
    #[arg(long)]
    pub d1: u32,
    #[arg(long)]
    pub d2: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum HilbertMode {
    Closed,
    Basis,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DomainView {
    Vertices,
    Zonotope,
    Lambda,
    Diagrams,
    Trapezoid,
    Bijection,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators of J(d1, d2), one row each.
    Gens {
        #[command(flatten)]
        pair: Pair,
        /// Also check that they span every slice up to this total degree.
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Hilbert series of J(d1, d2) by one route, or all three compared.
    Hilbert {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = HilbertMode::Closed)]
        mode: HilbertMode,
        /// Compute all three routes and compare them.
        #[arg(long)]
        all: bool,
        /// Coefficient window `QxT`; each side at most 2 d1 + d2 + 8.
        #[arg(long)]
        window: Option<WindowArg>,
    },
    /// Generalized q,t-Catalan number F(d) or series H(d).
    Catalan {
        /// Ascending comma-separated degree vector, e.g. `1,2,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        /// Print H(d) instead of F(d).
        #[arg(long)]
        series: bool,
    },
    /// Poincaré series of the three-strand braid recursion.
    Hhh {
        #[arg(long)]
        d1: u32,
        /// Number of extra two-strand twists to unwind.
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = SignConvention::RecursionConsistent)]
        sign_convention: SignConvention,
        /// Exploratory comparison with the ideal for these d2 values.
        #[arg(long, value_delimiter = ',')]
        compare: Vec<u32>,
    },
    /// Fundamental domain and the area/dinv bijection.
    Domain {
        #[arg(long, value_enum, default_value_t = DomainView::Bijection)]
        view: DomainView,
        #[arg(long)]
        d1: Option<u32>,
        #[arg(long)]
        d2: Option<u32>,
        /// Degree vector for `vertices` and `zonotope`.
        #[arg(long, value_delimiter = ',')]
        d: Vec<u32>,
    },
    /// Run a verification manifest (default: the full suite).
    Verify {
        /// TOML manifest listing `[[checks]]` with `name`, `d1_max`, `d2_max`.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Print the default manifest and exit.
        #[arg(long)]
        print_default: bool,
    },
}

/// A usage-level error (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Outcome of a command: the document and whether verification passed.
pub struct Outcome {
    pub doc: Document,
    pub passed: bool,
    pub warnings: Vec<String>,
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.global.jobs {
        if j == 0 {
            let _ = writeln!(err, "error: --jobs must be positive");
            return EXIT_USAGE;
        }
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| commands::dispatch(&cli.command, &cli.global));
    let outcome = match result {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    for w in &outcome.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let text = outcome.doc.render(cli.global.format);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
