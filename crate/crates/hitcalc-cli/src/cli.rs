//! Command-line definitions and dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hitcalc_core::exec;
use hitcalc_core::quotient::{HitCalc, HitCalcConfig, SupportPart, DEFAULT_COLUMN_CAP};
use hitcalc_core::ExecMode;

use crate::cache::Cache;
use crate::commands;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hitcalc",
    about = "Minimal generating sets and quotient dimensions of F2 polynomial algebras over the mod-2 Steenrod algebra",
    version
)]
pub struct Cli {
    /// Memory guard in MiB for the retained elimination state.
    #[arg(long, global = true, default_value_t = 2048)]
    pub max_mem: u64,

    /// Column cap for degree contexts.
    #[arg(long, global = true, default_value_t = DEFAULT_COLUMN_CAP)]
    pub max_columns: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum PartArg {
    All,
    Zero,
    Positive,
}

impl From<PartArg> for SupportPart {
    fn from(p: PartArg) -> Self {
        match p {
            PartArg::All => SupportPart::All,
            PartArg::Zero => SupportPart::Zero,
            PartArg::Positive => SupportPart::Positive,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum GroupArg {
    /// Adjacent transpositions only.
    Sym,
    /// Full general linear group.
    Gl,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MapOp {
    /// Variable insertion q_(l,t).
    Q,
    /// The division form psi_(l,L).
    Psi,
    /// The projection p_(l,L).
    P,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Quick,
    Paper,
    Extended,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quotient dimension at (t, n).
    Dim {
        #[arg(short = 't', long)]
        vars: usize,
        #[arg(short = 'n', long)]
        degree: u64,
        /// Print the elimination trace.
        #[arg(long)]
        trace: bool,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Admissible monomial basis at (t, n), optionally filtered.
    Basis {
        #[arg(short = 't', long)]
        vars: usize,
        #[arg(short = 'n', long)]
        degree: u64,
        /// Weight vector filter, comma separated (e.g. 3,2,2,2).
        #[arg(long)]
        omega: Option<String>,
        /// Support filter.
        #[arg(long, value_enum)]
        part: Option<PartArg>,
        /// Write the listing to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kameko map data from degree t+2n down to n.
    Kameko {
        #[arg(short = 't', long)]
        vars: usize,
        /// The target (lower) degree n.
        #[arg(short = 'n', long)]
        degree: u64,
        /// Break the kernel into support/weight components.
        #[arg(long)]
        split: bool,
        #[arg(long)]
        json: bool,
    },
    /// Invariant dimensions under the symmetric or general linear group.
    Invariants {
        #[arg(short = 't', long)]
        vars: usize,
        #[arg(short = 'n', long)]
        degree: u64,
        #[arg(long, value_enum, default_value = "gl")]
        group: GroupArg,
        /// Restrict to one weight component.
        #[arg(long)]
        omega: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a structural map to monomials read from stdin (one per line).
    Maps {
        #[arg(long, value_enum)]
        op: MapOp,
        /// Insertion/projection index l.
        #[arg(short = 'l', long)]
        index: usize,
        /// The list L, comma separated (may be empty).
        #[arg(short = 'L', long, default_value = "")]
        list: String,
        /// Target variable count t (for q/psi; for p this is the source).
        #[arg(short = 't', long)]
        vars: usize,
        /// For psi: apply the division formula without the exponent
        /// condition.
        #[arg(long)]
        lenient: bool,
    },
    /// Check that the structural maps carry admissible monomials to
    /// admissible monomials at (t, n, omega).
    Conjecture {
        #[arg(short = 't', long)]
        vars: usize,
        #[arg(short = 'n', long)]
        degree: u64,
        #[arg(long)]
        omega: String,
    },
    /// Elimination trace at (t, n) in the reference print order.
    Trace {
        #[arg(short = 't', long)]
        vars: usize,
        #[arg(short = 'n', long)]
        degree: u64,
        #[arg(long)]
        json: bool,
    },
    /// Replay the reference value suites.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    /// List cache entries and the cache directory.
    Inspect,
    /// Remove every cache entry.
    Clear,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };

    let threads = std::env::var("HITCALC_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    if let Some(k) = threads {
        exec::init_threads(k);
    }
    let mode = match threads {
        Some(1) => ExecMode::Sequential,
        _ => ExecMode::default(),
    };
    let engine = HitCalc::with_config(HitCalcConfig {
        column_cap: cli.max_columns,
        mode,
        ..HitCalcConfig::default()
    });
    let cache = Cache::from_env();
    let ctx = commands::Context {
        engine,
        cache,
        max_mem_bytes: cli.max_mem.saturating_mul(1024 * 1024),
    };

    let result = match cli.command {
        Command::Dim {
            vars,
            degree,
            trace,
            json,
        } => commands::dim(&ctx, vars, degree, trace, json),
        Command::Basis {
            vars,
            degree,
            omega,
            part,
            out,
        } => commands::basis(&ctx, vars, degree, omega, part.map(Into::into), out),
        Command::Kameko {
            vars,
            degree,
            split,
            json,
        } => commands::kameko(&ctx, vars, degree, split, json),
        Command::Invariants {
            vars,
            degree,
            group,
            omega,
            json,
        } => commands::invariants(&ctx, vars, degree, group, omega, json),
        Command::Maps {
            op,
            index,
            list,
            vars,
            lenient,
        } => commands::maps(op, index, &list, vars, lenient),
        Command::Conjecture {
            vars,
            degree,
            omega,
        } => commands::conjecture(&ctx, vars, degree, &omega),
        Command::Trace { vars, degree, json } => commands::trace(&ctx, vars, degree, json),
        Command::Verify { suite } => {
            return match verify::run_suite(suite, &ctx) {
                Ok(report) => {
                    if report.failed.is_empty() {
                        EXIT_OK
                    } else {
                        EXIT_MISMATCH
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    commands::exit_code_for(&e)
                }
            };
        }
        Command::Cache { action } => commands::cache_cmd(&ctx, action),
    };

    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            commands::exit_code_for(&e)
        }
    }
}
