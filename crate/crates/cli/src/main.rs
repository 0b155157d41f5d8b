use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::Failure;

#[derive(Parser)]
#[command(name = "blocktilt", version, about = "Blocks, characters and tilting multiplicities of category O for gl(∞), so(∞) and sp(∞)")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CacheArgs {
    /// Directory holding kl-cache.ndjson; without it nothing is persisted.
    #[arg(long, env = "BLOCKTILT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Verma,
    Tilting,
}

#[derive(Subcommand)]
enum Command {
    /// Integrality flags, integral Weyl group and facet of a weight.
    Classify {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Verma multiplicity {D(λ):Δ(μ)} in a tilting module.
    TiltingMult {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Recompute two levels higher and check the value is unchanged.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Truncated character of a Verma or tilting module.
    Character {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "verma")]
        kind: Kind,
        #[arg(long)]
        depth: usize,
        /// Working level; defaults to support + depth + 1.
        #[arg(long)]
        level: Option<usize>,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Kazhdan–Lusztig polynomial P_{x,y} in a product of Weyl groups.
    Kl {
        /// Coxeter descriptor such as A3 or B2xA1.
        descriptor: String,
        /// Word for x, e.g. "1 2"; "" or "e" for the identity.
        x: String,
        y: String,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Whether translation from λ to μ is an equivalence.
    TranslateCheck {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Block membership and block-equivalence data for two weights.
    Block {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Verma factors of the restriction of Δ(λ) to level n.
    Branch {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
        /// Ambient level; defaults to max(n, support + depth + 1).
        #[arg(long)]
        level: Option<usize>,
    },
}

fn run(cli: &Cli) -> Result<commands::Output, Failure> {
    match &cli.command {
        Command::Classify { ty, weight, level } => commands::classify(ty, weight, *level),
        Command::TiltingMult {
            ty,
            lambda,
            mu,
            verify,
            cache,
        } => commands::tilting_mult(ty, lambda, mu, *verify, cache.cache_dir.as_deref()),
        Command::Character {
            ty,
            weight,
            kind,
            depth,
            level,
            cache,
        } => commands::character(
            ty,
            weight,
            matches!(kind, Kind::Tilting),
            *depth,
            *level,
            cache.cache_dir.as_deref(),
        ),
        Command::Kl {
            descriptor,
            x,
            y,
            cache,
        } => commands::kl(descriptor, x, y, cache.cache_dir.as_deref()),
        Command::TranslateCheck { ty, lambda, mu } => commands::translate_check(ty, lambda, mu),
        Command::Block { ty, lambda, mu } => commands::block(ty, lambda, mu),
        Command::Branch {
            ty,
            weight,
            n,
            depth,
            level,
        } => commands::branch(ty, weight, *n, *depth, *level),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::TiltingMult { .. } => "tilting-mult",
        Command::Character { .. } => "character",
        Command::Kl { .. } => "kl",
        Command::TranslateCheck { .. } => "translate-check",
        Command::Block { .. } => "block",
        Command::Branch { .. } => "branch",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", render::envelope(name, out.json));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if cli.json {
                println!("{}", render::error_envelope(name, &failure));
            }
            eprintln!("error: {}: {}", failure.kind(), failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
