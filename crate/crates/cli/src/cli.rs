use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Lazy burning analysis of Latin squares.
///
/// Exit codes: 0 on success (and consistent reports), 1 on a verification
/// or consistency failure, 2 on usage or I/O errors.
#[derive(Parser, Debug)]
#[command(name = "latinburn", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Display 1-based row/column/symbol labels (input stays 0-based).
    #[arg(long, global = true)]
    pub human: bool,

    /// Largest order for the exhaustive verification suites.
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,

    /// Seed: an RNG seed for `gen random` and `verify`, or a burn seed
    /// spec for `burn` ("r,c;r,c;..." for HL, "R0;C2;S1" for H3L).
    #[arg(long, global = true, value_name = "S")]
    pub seed: Option<String>,

    /// Lift the order guards on the exhaustive searches.
    #[arg(long, global = true)]
    pub override_guard: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a square and write it in `.ls` form.
    Gen(GenArgs),
    /// Compute scc, mcs, and both lazy burning numbers of a square.
    Analyze(AnalyzeArgs),
    /// Run one lazy burn from an explicit seed and print the trace.
    Burn(BurnArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,

    /// Output file (stdout when omitted).
    #[arg(short, long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// The cyclic square of order N.
    Cyclic { n: usize },
    /// The K-th intercalate power (order 2^K).
    Ipow { k: usize },
    /// The product of two squares read from `.ls` files.
    Product { left: PathBuf, right: PathBuf },
    /// The Cayley-table square of a group spec such as `z6`, `z2^3`,
    /// `s3`, `d4`, or `z2xz4`.
    Cayley { group: String },
    /// A seeded pseudo-random square of order N (see `--seed`).
    Random { n: usize },
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Input `.ls` file.
    pub file: PathBuf,

    /// Also run the exhaustive oracles (under their order guards) and
    /// compare them against the formulas.
    #[arg(long)]
    pub oracle: bool,

    /// Validate the grid as a group table before analyzing.
    #[arg(long)]
    pub as_group: bool,
}

#[derive(Args, Debug)]
pub struct BurnArgs {
    /// Input `.ls` file.
    pub file: PathBuf,

    /// Which hypergraph to burn.
    #[arg(long, value_enum)]
    pub mode: BurnMode,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurnMode {
    /// Entries as vertices, lines as hyperedges.
    #[value(name = "HL", alias = "hl")]
    Hl,
    /// Lines as vertices, entries as hyperedges.
    #[value(name = "H3L", alias = "h3l")]
    H3l,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run every suite (the default when no suite flag is given).
    #[arg(long)]
    pub all: bool,
    /// Exhaustive small orders: oracles vs formulas on every square.
    #[arg(long)]
    pub exhaustive: bool,
    /// Order-5 spot check via the complement search.
    #[arg(long)]
    pub order5: bool,
    /// Cyclic family: scc = 2 up to `--n-max`.
    #[arg(long)]
    pub cyclic: bool,
    /// Intercalate powers: scc(I^k) = k + 1.
    #[arg(long)]
    pub ipow: bool,
    /// scc bounds over every corpus.
    #[arg(long)]
    pub bounds: bool,
    /// Randomized burn/peel characterization.
    #[arg(long)]
    pub characterization: bool,
    /// The curated worked examples.
    #[arg(long)]
    pub examples: bool,
    /// Group suite: scc(L(G)) = alpha + 1 and the coset formula.
    #[arg(long)]
    pub groups: bool,
    /// Chain/cover-sequence round trips.
    #[arg(long)]
    pub roundtrip: bool,

    /// Largest cyclic order for the cyclic and round-trip suites.
    #[arg(long, value_name = "N")]
    pub n_max: Option<usize>,
    /// Number of randomized characterization samples.
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Directory for counterexample dumps (default: current directory).
    #[arg(long, value_name = "DIR")]
    pub dump_dir: Option<PathBuf>,
}
