use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "permdeg", version, about = "Exact permutability degrees of small finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory of cached subgroup lattices.
    #[arg(long, env = "PERMDEG_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the lattice cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Use cached lattices without re-checking the subgroup axioms.
    #[arg(long, global = true)]
    pub trust_cache: bool,
    /// Largest group order that may be built.
    #[arg(long, global = true, default_value_t = 5000)]
    pub max_order: usize,
    /// Largest subgroup lattice that may be enumerated.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_lattice: usize,
    /// Attach wall-clock time and cache hits to reports.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute d, sd, pd and related subgroups for one or more groups.
    Compute {
        /// Group specs such as `D:8`, `S:3xC:5` or `file:table.json`.
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Check theorem statements and report verdicts.
    Verify(VerifyArgs),
    /// Print a preset table.
    Table {
        #[arg(value_enum)]
        preset: TablePreset,
        /// Largest n for the dihedral table.
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Inspect or empty the lattice cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem identifiers (e.g. T4_1_lower, P6_1) or `all`.
    #[arg(required = true)]
    pub theorems: Vec<String>,
    /// Groups for the per-group checks.
    #[arg(long, value_enum, default_value_t = CorpusChoice::Full)]
    pub corpus: CorpusChoice,
    /// Explicit group specs; replaces --corpus.
    #[arg(long = "group", value_name = "SPEC")]
    pub groups: Vec<String>,
    /// Primes for P6_1.
    #[arg(long, value_delimiter = ',', default_values_t = [3u64, 5, 7, 11, 13])]
    pub primes: Vec<u64>,
    /// Largest prime accepted by P6_1.
    #[arg(long, default_value_t = permdeg::theorems::P61_DEFAULT_CAP)]
    pub max_p: u64,
    /// L_FORMULA is checked for 1 <= n <= max-n.
    #[arg(long, default_value_t = 100)]
    pub max_n: usize,
    /// Which verdicts to list before the summary.
    #[arg(long, value_enum, default_value_t = Show::All)]
    pub show: Show,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusChoice {
    Full,
    Small,
    OpenQuestions,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    All,
    Applicable,
    Failures,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TablePreset {
    OpenQuestions,
    Dihedral,
    Fixtures,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheAction {
    List,
    Clear,
}
