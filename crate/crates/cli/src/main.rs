//! `wardforge`: property reports, constructions, identity checks, pair
//! classification, exhaustive enumeration and the theorem suite over finite
//! Cayley tables.
//!
//! Exit codes: 0 on success (a refuted theorem check is a result, not a
//! failure), 1 when `verify --strict` meets an unexpected refutation, 2 on
//! usage and parse errors, 3 when a construction's precondition fails.

mod commands;
mod report;
mod source;
mod tablefile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "wardforge", version, about = "Explore Ward, double Ward and related quasigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report properties, group structure and class membership of a table.
    Check {
        /// Table file or group spec (cyclic:N, dihedral:N, sym3, q8, klein, AxB).
        source: String,
        /// Check Ward and double Ward membership at this 1-based point only.
        #[arg(long, value_name = "K")]
        pointed: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a construction and write the resulting table.
    Derive {
        /// der, ret, Der, Ret, D, dual, derbar, retbar, parastrophe:I,
        /// affine:N:A:B:C or translatable:K.
        construction: String,
        /// Table file or group spec; omitted for affine.
        source: Option<String>,
        /// Write the table here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check an identity (or a catalog name) on one or two tables.
    Identity {
        /// An identity such as "(x.z).(y.z) = x.y", or a catalog name.
        expr: String,
        /// The first operation `.`.
        #[arg(long, value_name = "SOURCE")]
        table: String,
        /// The second operation `*`.
        #[arg(long, value_name = "SOURCE")]
        table2: Option<String>,
        /// 1-based value of the constant e.
        #[arg(long, value_name = "K")]
        e: Option<usize>,
        /// 1-based value of the constant f.
        #[arg(long, value_name = "K")]
        f: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a pair of operations by the interchange laws they satisfy.
    Pair {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Run one theorem check, or all of them.
    Verify {
        /// A check id, or "all".
        target: String,
        /// Largest order enumerated by the checks.
        #[arg(long, env = "WARDFORGE_MAX_ORDER", default_value_t = 4)]
        max_order: usize,
        /// Include the slower searches and larger sweeps.
        #[arg(long)]
        extended: bool,
        /// Exit with status 1 when a check is refuted unexpectedly.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// List all quasigroups of an order that satisfy a filter.
    Enumerate {
        #[arg(long, value_name = "N")]
        order: usize,
        /// A catalog name or an identity; constants are searched for.
        #[arg(long, value_name = "NAME|EXPR")]
        filter: Option<String>,
        /// Stop after this many matches.
        #[arg(long, value_name = "M")]
        limit: Option<usize>,
        /// Write one numbered file per table into this directory.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// The exit status of a failed command.
fn failure_code(err: &anyhow::Error) -> u8 {
    let precondition = err
        .chain()
        .any(|cause| cause.is::<commands::PreconditionFailed>());
    if precondition {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            source,
            pointed,
            json,
        } => commands::check(&source, pointed, json),
        Command::Derive {
            construction,
            source,
            out,
        } => commands::derive(&construction, source.as_deref(), out.as_deref()),
        Command::Identity {
            expr,
            table,
            table2,
            e,
            f,
            json,
        } => commands::identity(&expr, &table, table2.as_deref(), e, f, json),
        Command::Pair {
            first,
            second,
            json,
        } => commands::pair(&first, &second, json),
        Command::Verify {
            target,
            max_order,
            extended,
            strict,
            json,
        } => commands::verify(&target, max_order, extended, strict, json),
        Command::Enumerate {
            order,
            filter,
            limit,
            out,
            json,
        } => commands::enumerate(order, filter.as_deref(), limit, out.as_deref(), json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(failure_code(&err))
        }
    }
}
