use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Subgraph complementation toolkit: solvers, gadget generators, property
/// sweeps and graph format conversion. Output is JSON unless `--human` is given.
#[derive(Debug, Parser)]
#[command(name = "subcomp", version)]
pub struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether some S makes G ⊕ S a member of the target class.
    /// Exit status 0 = Yes, 1 = No, 2 = Unknown (budget exhausted).
    Solve(SolveArgs),
    /// Generate a reduction instance as graph6 plus a JSON certificate.
    Gen(GenArgs),
    /// Run a property sweep; exit status 3 on any failure.
    Verify(VerifyArgs),
    /// Convert a graph between graph6 and JSON.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// A subclass of K_t-free graphs, given by --recognizer.
    Kt,
    /// Complements of that class.
    KtBar,
    /// H-free graphs for --pattern (exhaustive search).
    Pattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecognizerArg {
    /// All K_t-free graphs.
    Ktfree,
    /// d-degenerate graphs, d from --degeneracy (default t-2).
    Degenerate,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub target: Target,

    /// Clique size t for the kt and kt-bar targets.
    #[arg(short = 't', value_parser = clap::value_parser!(u64).range(1..))]
    pub t: Option<u64>,

    /// Forbidden pattern for the pattern target, e.g. K3, P4, C5, K1,5, ~P3.
    #[arg(long)]
    pub pattern: Option<String>,

    #[arg(long, value_enum, default_value = "ktfree")]
    pub recognizer: RecognizerArg,

    /// Degeneracy bound for the degenerate recognizer.
    #[arg(long)]
    pub degeneracy: Option<usize>,

    /// Use exhaustive search instead of the polynomial algorithm.
    #[arg(long)]
    pub brute: bool,

    /// Cap on subsets examined by exhaustive search.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Input graph (graph6 or JSON); `-` for stdin.
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Star,
    Path,
    Cycle,
    K15,
    P7,
    P8,
    C8,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,

    /// Parameter t for the star, path and cycle constructions.
    #[arg(short = 't')]
    pub t: Option<usize>,

    /// Append a clause of fresh variables before building a formula gadget.
    #[arg(long)]
    pub dummy_clause: bool,

    /// Output prefix; writes PREFIX.g6 and PREFIX.json. Defaults to the
    /// input path with its extension replaced by the gadget kind.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,

    /// Source graph (graph6 or JSON) or DIMACS CNF formula.
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Gs,
    Dual,
    KtOracle,
    Split,
    Gadget,
    Inductive,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,

    /// Largest vertex count swept (variables, for the gadget suite).
    #[arg(long)]
    pub max_n: Option<usize>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Random cases per vertex count beyond the exhaustive range, or
    /// formulas for the gadget suite.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Json,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub from: Format,

    #[arg(long, value_enum)]
    pub to: Format,

    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}
