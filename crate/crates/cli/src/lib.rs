//! Command-line front end: argument definitions, commands and output
//! records. The `oblock` binary is a thin wrapper around [`run`].

pub mod commands;
pub mod records;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, CliError, Outcome};

/// Environment variable overriding the KL cache directory.
pub const CACHE_ENV: &str = "OBLOCK_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "oblock",
    version,
    about = "Graded Verma flags, tilting characters and rigidity for blocks of category O"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Directory holding cached KL tables.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the KL cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Compute singular tilting flags by Ringel duality only, skipping the
    /// translation cross-check.
    #[arg(long, global = true)]
    pub fast: bool,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Tex,
}

#[derive(Debug, Clone, Args)]
pub struct BlockArgs {
    /// Cartan type, e.g. A3, B2, G2 or A1xA1.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan: String,

    /// Simple reflections fixing the weight, 1-based and comma separated;
    /// empty for the regular block.
    #[arg(long, default_value = "", value_name = "LIST")]
    pub walls: String,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Tie {
    Forward,
    Reverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group order, w0 and the simples of the block.
    Group {
        #[command(flatten)]
        block: BlockArgs,
    },
    /// One Kazhdan-Lusztig polynomial, or every nontrivial one.
    Kl {
        #[arg(long = "type", value_name = "TYPE")]
        cartan: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Grading layers of a Verma module.
    Verma {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
    },
    /// Verma flag and layers of an indecomposable projective.
    Projective {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
    },
    /// Verma flag, layers and Loewy length of a tilting module.
    Tilting {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
    },
    /// Layer balancing trace for a tilting module.
    Hazi {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = Tie::Forward)]
        tie: Tie,
    },
    /// Rigidity verdicts for one tilting module or all of them.
    Rigidity {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        x: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Runs every invariant; exits 1 if any fails.
    Verify {
        #[command(flatten)]
        block: BlockArgs,
        /// Verify every wall subset instead of `--walls`.
        #[arg(long, conflicts_with = "walls")]
        all: bool,
    },
}
