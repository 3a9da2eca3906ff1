use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "braidforge", version, about = "Braid groups, braided surfaces, orbifold invariants and Jones representations")]
pub struct Cli {
    /// Print a JSON document instead of a table
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbifold characteristic numbers and Einstein obstruction checks
    Invariants(InvariantsArgs),
    /// Enumerate the Hurwitz orbit of a braid system
    HurwitzOrbit(SystemArgs),
    /// Braid words: equality, normal form, permutation
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Finite presentations: abelianization and quotients
    #[command(subcommand)]
    Presentation(PresentationCommand),
    /// Jones representation matrices on a link-pattern module
    Rep(RepArgs),
    /// Approximate a gate by the image of a braid word
    Compile(CompileArgs),
    /// Euler characteristic and monodromy of the branched cover of a braid system
    CoverReport(CoverArgs),
    /// Covering statistics of short braid words against Haar-random targets
    DensityProbe(ProbeArgs),
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Geometry as JSON (`-` for stdin); alternatively give every field as a flag
    pub file: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub euler_m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub signature_m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub euler_sigma: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub self_intersection: Option<i64>,
    #[arg(long)]
    pub cone_order: Option<i64>,
    /// Σ is non-orientable
    #[arg(long)]
    pub non_orientable: bool,
}

#[derive(Debug, Args)]
pub struct SystemSource {
    /// Use the standard system (σ_1, …, σ_{m−1}) of degree m
    #[arg(long, requires = "degree", conflicts_with = "file")]
    pub standard: bool,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Braid-system file: `degree m`, then `conjugator | index sign` per line (`-` for stdin)
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    #[command(flatten)]
    pub source: SystemSource,
    /// Stop after this many systems
    #[arg(long, default_value_t = 100_000)]
    pub cap: usize,
    /// Also print every system in the orbit
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Base {
    Disc,
    Sphere,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub source: SystemSource,
    /// Base surface of the cover
    #[arg(long, value_enum, default_value_t = Base::Disc)]
    pub base: Base,
}

#[derive(Debug, Subcommand)]
pub enum BraidCommand {
    /// Decide whether two words give the same braid
    Eq {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long)]
        strands: usize,
    },
    /// Left-greedy normal form
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: usize,
    },
    /// Underlying permutation
    Perm {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum PresentationCommand {
    /// Abelianization as Z^r + Z/d1 + … + Z/dk
    Abelianize {
        /// Presentation file: generator count, then one relator per line (`-` for stdin)
        file: PathBuf,
    },
    /// Add relators γ^ν for the given loops and orders
    OrbifoldQuotient {
        file: PathBuf,
        /// Loop word, repeated once per loop
        #[arg(long = "loop", allow_hyphen_values = true, required = true)]
        loops: Vec<String>,
        /// Cone order for the matching loop
        #[arg(long = "order", required = true)]
        orders: Vec<u64>,
    },
    /// Check for conjugation-only relators and report the free rank
    CGroup { file: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct RepParams {
    /// Strand count
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Through-strands of the module
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    /// Angle θ of A = e^{iθ}, e.g. `2pi/5`
    #[arg(long, default_value = "2pi/5", allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[command(flatten)]
    pub params: RepParams,
    /// Skip unitarization and print the link-pattern basis matrices
    #[arg(long)]
    pub raw: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    MeetInMiddle,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    /// `i`, `x`, `y`, `z`, `h`, `s`, `t`, `haar` (seeded), or a JSON matrix file
    #[arg(long)]
    pub target: String,
    #[arg(long, default_value_t = 12)]
    pub depth: usize,
    /// Seed for `--target haar`
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    /// Keep only this many closest nodes per level
    #[arg(long)]
    pub beam: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
    pub strategy: StrategyArg,
    /// Visit every freely reduced word instead of merging equal images
    #[arg(long)]
    pub no_dedup: bool,
    #[command(flatten)]
    pub params: RepParams,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub params: RepParams,
}
