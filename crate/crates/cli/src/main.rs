//! `redcomb` — exact reductive-group combinatorics from the command line.
//!
//! Every subcommand prints a single JSON document on standard output. By
//! default the document wraps the echoed inputs and the results together
//! with the library version; `--quiet` prints the bare results object,
//! which is the form the golden tests pin down. Rationals are serialized
//! as strings in lowest terms (`"2"`, `"-3/2"`) so no consumer ever
//! rounds them.
//!
//! Exit codes: 0 on success (including "the verdict is false" — a verdict
//! is a result, not an error), 2 for malformed or out-of-domain input,
//! 1 for internal assertion failures.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

mod exec;
mod parse;
mod runfile;

#[derive(Parser)]
#[command(
    name = "redcomb",
    version,
    about = "Exact combinatorics of reductive groups: adjoint polygons, parabolic statistics, Bruhat cells, and uniform dimension bounds"
)]
struct Cli {
    /// Print only the results object, without the input echo and version.
    #[arg(long, global = true)]
    quiet: bool,

    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads. Reserved for future fan-out; every current command
    /// runs on a single thread regardless of the value.
    #[arg(long, global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Adjoint polygon of a point: evaluate at an argument, or summarize.
    Polygon {
        /// Group spec: `gl:<e>`, `gsp:<e>`, or `go:<e>`.
        #[arg(long, visible_alias = "family")]
        group: String,
        /// Comma-separated rational coordinates, e.g. `1,0,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Argument to evaluate at; omit to print dim/max/integer values.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },

    /// Dimension statistics of the parabolic attached to a point.
    Stats {
        #[arg(long, visible_alias = "family")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },

    /// Positivity of a point against a standard parabolic's delta character.
    Positivity {
        #[arg(long, visible_alias = "family")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Parabolic spec: `none`, `all`, simple-root indices `0,2`, or a
        /// GL block composition `blocks:2,1`.
        #[arg(long)]
        parabolic: String,
    },

    /// Minimal double-coset representatives between two parabolics.
    Bruhat {
        #[arg(long, visible_alias = "family")]
        group: String,
        /// Left parabolic spec (same micro-syntax as --parabolic).
        #[arg(long)]
        q: String,
        /// Right parabolic spec.
        #[arg(long)]
        p: String,
    },

    /// Fiber codimension bound over the positive Bruhat cells of a point.
    FiberCodim {
        #[arg(long, visible_alias = "family")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        q: String,
    },

    /// Dimension-bound inequalities for one problem instance.
    Bound {
        #[arg(long, visible_alias = "family")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Target dimension n.
        #[arg(long)]
        n: u64,
        /// Centralizer dimension bound; defaults to dim G.
        #[arg(long)]
        dim_centralizer: Option<u64>,
    },

    /// Uniform threshold N0 above which the bound conditions hold.
    #[command(name = "n0")]
    N0 {
        #[arg(long, visible_alias = "group")]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Target dimension n.
        #[arg(long)]
        n: u64,
    },

    /// Exceptional-case screen on numerical Hodge data.
    HodgeCheck {
        /// Weight d.
        #[arg(long)]
        d: u32,
        /// Ambient dimension g.
        #[arg(long)]
        g: u64,
        /// Topological Euler characteristic (bar quantity).
        #[arg(long, allow_negative_numbers = true)]
        chi_top_bar: i64,
        /// Structure-sheaf Euler characteristic (bar quantity).
        #[arg(long, allow_negative_numbers = true)]
        chi_o_bar: i64,
        /// Declare the Hodge structure polarized/symmetric.
        #[arg(long)]
        symmetric: bool,
    },

    /// Full pipeline from a Hodge profile to the uniform threshold.
    LvPipeline {
        /// Weight d.
        #[arg(long)]
        d: u32,
        /// Comma-separated Hodge numbers h^0,...,h^d (exclusive with --chis).
        #[arg(long, conflicts_with = "chis")]
        h: Option<String>,
        /// Comma-separated alternating characteristics chi_0,...,chi_d.
        #[arg(long, allow_hyphen_values = true)]
        chis: Option<String>,
        /// Declare the profile symmetric (palindromic Hodge numbers).
        #[arg(long)]
        symmetric: bool,
        /// Base dimension added to dim H for the target n.
        #[arg(long)]
        dim_base: u64,
    },

    /// Admissible surface classes and Hilbert polynomials for a given c2.
    SurfaceHilbert {
        #[arg(long)]
        c2: u64,
    },

    /// Execute a JSON problem file; `-` reads standard input.
    Run {
        /// Path to the problem file.
        path: String,
    },
}

fn dispatch(cmd: &Commands) -> anyhow::Result<(String, serde_json::Value, serde_json::Value)> {
    match cmd {
        Commands::Polygon { group, point, at } => {
            let (i, r) = exec::polygon(group, point, at.as_deref())?;
            Ok(("polygon".into(), i, r))
        }
        Commands::Stats { group, point } => {
            let (i, r) = exec::stats(group, point)?;
            Ok(("stats".into(), i, r))
        }
        Commands::Positivity {
            group,
            point,
            parabolic,
        } => {
            let (i, r) = exec::positivity(group, point, parabolic)?;
            Ok(("positivity".into(), i, r))
        }
        Commands::Bruhat { group, q, p } => {
            let (i, r) = exec::bruhat(group, q, p)?;
            Ok(("bruhat".into(), i, r))
        }
        Commands::FiberCodim { group, point, q } => {
            let (i, r) = exec::fiber_codim(group, point, q)?;
            Ok(("fiber-codim".into(), i, r))
        }
        Commands::Bound {
            group,
            point,
            n,
            dim_centralizer,
        } => {
            let (i, r) = exec::bound(group, point, *n, *dim_centralizer)?;
            Ok(("bound".into(), i, r))
        }
        Commands::N0 { family, point, n } => {
            let (i, r) = exec::n0(family, point, *n)?;
            Ok(("n0".into(), i, r))
        }
        Commands::HodgeCheck {
            d,
            g,
            chi_top_bar,
            chi_o_bar,
            symmetric,
        } => {
            let (i, r) = exec::hodge_check(*d, *g, *chi_top_bar, *chi_o_bar, *symmetric)?;
            Ok(("hodge-check".into(), i, r))
        }
        Commands::LvPipeline {
            d,
            h,
            chis,
            symmetric,
            dim_base,
        } => {
            let (i, r) = exec::lv(*d, h.as_deref(), chis.as_deref(), *symmetric, *dim_base)?;
            Ok(("lv-pipeline".into(), i, r))
        }
        Commands::SurfaceHilbert { c2 } => {
            let (i, r) = exec::surfaces(*c2)?;
            Ok(("surface-hilbert".into(), i, r))
        }
        Commands::Run { path } => runfile::run(path),
    }
}

fn execute(cli: &Cli) -> anyhow::Result<String> {
    let (command, inputs, results) = dispatch(&cli.command)?;
    let doc = if cli.quiet {
        results
    } else {
        json!({
            "command": command,
            "inputs": inputs,
            "results": results,
            "version": env!("CARGO_PKG_VERSION"),
        })
    };
    Ok(if cli.pretty {
        serde_json::to_string_pretty(&doc)?
    } else {
        doc.to_string()
    })
}

fn init_logging() {
    let level = match std::env::var("LOG_LEVEL") {
        Ok(raw) => match raw.as_str() {
            "error" => log::LevelFilter::Error,
            "warn" => log::LevelFilter::Warn,
            "info" => log::LevelFilter::Info,
            "debug" => log::LevelFilter::Debug,
            other => {
                eprintln!("warning: unrecognized LOG_LEVEL {other:?}; using \"warn\"");
                log::LevelFilter::Warn
            }
        },
        Err(_) => log::LevelFilter::Warn,
    };
    env_logger::Builder::new().filter_level(level).init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    log::debug!(
        "dispatching with --threads {} (single-threaded execution)",
        cli.threads
    );
    match catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(Ok(doc)) => {
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("internal error: an invariant check failed; see the panic message above");
            ExitCode::from(1)
        }
    }
}
