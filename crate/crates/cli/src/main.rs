mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jacobi_core::cache::Cache;
use jacobi_core::{Engine, EngineConfig, Error};

#[derive(Parser)]
#[command(name = "jacobi", version, about = "Exact computations with Jacobi diagrams and torus knot invariants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Cache directory (defaults to $JACOBI_CACHE_DIR or the user cache root).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the disk cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Highest degree any command may reach.
    #[arg(long, global = true)]
    degree_limit: Option<usize>,

    /// Bound on elimination work; exceeding it exits with status 3.
    #[arg(long, global = true)]
    work_limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the diagram spaces per degree.
    Dims {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long)]
        framed: bool,
    },
    /// The Kontsevich integral of a torus knot.
    Torus {
        #[arg(short, long, allow_negative_numbers = true)]
        m: i64,
        #[arg(short, long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Print log_# of the invariant.
        #[arg(long)]
        log: bool,
        /// Keep the framing mp instead of projecting to the unframed quotient.
        #[arg(long)]
        framed: bool,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance suite, or the named parts of it.
    Verify {
        suites: Vec<String>,
    },
    /// The wheels element Ω in symmetrized coordinates.
    Omega {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Basis labels and chord representatives in one degree.
    Basis {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        framed: bool,
    },
    /// Change of basis from round to symmetrized labels.
    AppendixA {
        #[arg(long)]
        degree: usize,
    },
    /// Apply the Adams operation ψ^m to a framed element given as JSON.
    Adams {
        #[arg(short, long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        input: PathBuf,
    },
    /// The Alexander polynomial of a torus knot at t = e^h.
    Alexander {
        #[arg(short, long, allow_negative_numbers = true)]
        m: i64,
        #[arg(short, long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Inspect or clear the quotient cache.
    Cache {
        #[arg(value_enum, default_value_t = CacheAction::Info)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Info,
    Clear,
}

pub struct Output {
    pub json: String,
    pub text: String,
    pub code: u8,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::Structure(_)
        | Error::DegreeTooLarge { .. }
        | Error::DegreeMismatch { .. }
        | Error::DegreeZero { .. }
        | Error::FramingMismatch
        | Error::NotGroupLike(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut config = EngineConfig::default();
    if let Some(dir) = &cli.cache_dir {
        config.cache = Some(Cache::new(dir));
    }
    if cli.no_cache {
        config.cache = None;
    }
    if let Some(d) = cli.degree_limit {
        config.degree_limit = d;
    }
    if let Some(w) = cli.work_limit {
        config.work_limit = w;
    }
    let mut format = cli.format;
    let cache = config.cache.clone();
    let engine = Engine::new(config);
    let result = match cli.command {
        Command::Dims { max_degree, framed } => commands::dims(&engine, max_degree, framed),
        Command::Torus { m, p, max_degree, log, framed, json } => {
            if json {
                format = Format::Json;
            }
            commands::torus(&engine, m, p, max_degree, log, framed)
        }
        Command::Verify { suites } => commands::verify(&engine, &suites),
        Command::Omega { max_degree } => commands::omega(&engine, max_degree),
        Command::Basis { degree, framed } => commands::basis(&engine, degree, framed),
        Command::AppendixA { degree } => commands::appendix_a(&engine, degree),
        Command::Adams { m, input } => commands::adams(&engine, m, &input),
        Command::Alexander { m, p, order } => commands::alexander(m, p, order),
        Command::Cache { action } => commands::cache(cache.as_ref(), action == CacheAction::Clear),
    };
    match result {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
