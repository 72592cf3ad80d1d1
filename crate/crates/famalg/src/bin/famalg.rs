//! `famalg` — exact family-algebra computations for sl(n).
//!
//! Subcommands: `verify`, `independence`, `exponents`, `dump`.  See
//! `famalg <command> --help` for flags.  The environment variable
//! `FAMALG_THREADS` bounds the worker pool.

use clap::{Parser, Subcommand, ValueEnum};

use famalg::cli::{run, Command, DumpObject, Format, RunConfig};
use famalg::{DEFAULT_POINTS, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "famalg",
    version,
    about = "Exact-arithmetic family algebra of the adjoint representation of sl(n)"
)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the defining-relation suite as exact polynomial identities.
    Verify {
        /// sl(n) parameter; supported: 2..=5.
        #[arg(long)]
        n: usize,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include the long-running comparisons skipped by default at n = 5.
        #[arg(long)]
        extended: bool,
        /// Record wall-clock time per relation (JSON then varies per run).
        #[arg(long)]
        timings: bool,
        /// Comma-separated relation ids or id prefixes; "all" keeps everything.
        #[arg(long, value_delimiter = ',')]
        relations: Vec<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit the monomial transversal and its randomized rank certificate.
    Independence {
        /// sl(n) parameter; supported: 2..=5.
        #[arg(long)]
        n: usize,
        /// Seed for evaluation points and the working modulus.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random evaluation points stacked into the certificate.
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Check the generalized-exponents table: closed forms vs charge statistics.
    Exponents {
        /// sl(n) parameter; supported: 4..=8.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print one object with a variable legend.
    Dump {
        /// sl(n) parameter; supported: 2..=5.
        #[arg(long)]
        n: usize,
        /// What to dump: F | casimir | generator.
        object: String,
        /// Generator name (L, R, S, M, N) when OBJECT is "generator".
        name: Option<String>,
        /// Casimir index when OBJECT is "casimir" (c_k, 0 <= k <= n+2).
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

fn main() {
    if let Ok(v) = std::env::var("FAMALG_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
    let args = Args::parse();
    let (cmd, cfg) = translate(args.cmd);
    let code = run(&cmd, &cfg, &mut std::io::stdout());
    std::process::exit(code);
}

fn translate(cmd: Cmd) -> (Command, RunConfig) {
    match cmd {
        Cmd::Verify { n, seed, extended, timings, relations, format } => (
            Command::Verify { n },
            RunConfig {
                seed,
                format: format.into(),
                extended,
                timings,
                relations,
                ..RunConfig::default()
            },
        ),
        Cmd::Independence { n, seed, points, format } => (
            Command::Independence { n },
            RunConfig { seed, points, format: format.into(), ..RunConfig::default() },
        ),
        Cmd::Exponents { n, format } => (
            Command::Exponents { n },
            RunConfig { format: format.into(), ..RunConfig::default() },
        ),
        Cmd::Dump { n, object, name, k, format } => {
            let object = match object.to_ascii_lowercase().as_str() {
                "f" => DumpObject::F,
                "casimir" => DumpObject::Casimir { k },
                // Unknown names fall through as generators; the runner
                // rejects them with an invalid-configuration exit.
                "generator" => DumpObject::Generator { name: name.unwrap_or_default() },
                other => DumpObject::Generator { name: other.to_string() },
            };
            (
                Command::Dump { n, object },
                RunConfig { format: format.into(), ..RunConfig::default() },
            )
        }
    }
}
