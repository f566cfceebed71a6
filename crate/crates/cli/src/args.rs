//! Command-line argument surface.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use flagcode::constructions::CheckMode;
use flagcode::{make_field, FieldSpec, TypeVector};

#[derive(Parser, Debug)]
#[command(
    name = "flagcode",
    version,
    about = "Construct, analyze and verify flag codes over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code with one of the systematic constructions
    Construct(ConstructArgs),
    /// Analyze a flag-code file: parameter table plus certificate
    Analyze(AnalyzeArgs),
    /// Run a named verification suite (exit status 1 on any failure)
    Verify(VerifyArgs),
    /// Print the applicable cardinality bound for a type vector
    Bound(BoundArgs),
    /// Dump a Grassmannian or the (1, n-1) flag variety
    Enumerate(EnumerateArgs),
}

/// Field selection: either `--q <prime>` (shorthand for m = 1) or
/// `--p <prime> --m <degree> [--modulus c0,c1,...]`.
#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field size shorthand: prime p with m = 1
    #[arg(long, global = false)]
    pub q: Option<u64>,
    /// Prime characteristic
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree (default 1)
    #[arg(long)]
    pub m: Option<u32>,
    /// Modulus coefficients, x^0 first, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    pub fn build(&self) -> Result<FieldSpec> {
        let (p, m) = match (self.q, self.p) {
            (Some(q), None) => {
                if self.m.is_some_and(|m| m != 1) {
                    bail!("--q fixes m = 1; use --p/--m for extension fields");
                }
                (q, 1)
            }
            (None, Some(p)) => (p, self.m.unwrap_or(1)),
            (Some(_), Some(_)) => bail!("--q and --p are mutually exclusive"),
            (None, None) => bail!("a field is required: --q <prime> or --p <prime> [--m <degree>]"),
        };
        make_field(p, m, self.modulus.as_deref()).context("invalid field parameters")
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionName {
    /// Distance D-2 flag code for an arbitrary type
    Qodfc,
    /// Distance D-2l flag code (sunflower band of width l)
    CEll,
    /// Non-disjoint distance D-2 code sharing one hyperplane
    Hyperplane,
    /// The full flag variety of type (1, n-1)
    #[value(name = "variety-1-nm1")]
    Variety1Nm1,
    /// The field-extension k-spread of the first 2k coordinates
    Spread,
    /// Sunflower of dimension j+1 with a one-dimensional center
    Sunflower,
    /// Maximum-distance constant dimension code above n/2
    MaxCdc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Which construction to run
    #[arg(value_enum)]
    pub construction: ConstructionName,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Ambient dimension
    #[arg(long)]
    pub n: Option<usize>,
    /// Type vector, comma-separated (e.g. 1,2,3)
    #[arg(long = "type", value_delimiter = ',')]
    pub type_dims: Option<Vec<usize>>,
    /// Sunflower band width for c-ell
    #[arg(long)]
    pub ell: Option<usize>,
    /// Spread dimension for spread/sunflower/max-cdc
    #[arg(long)]
    pub k: Option<usize>,
    /// Truncation depth (sunflower) or high-dimension offset (max-cdc)
    #[arg(long)]
    pub j: Option<usize>,
    /// Write the code to this path
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Payload format
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Force distance self-checks on (`--checked`) or off
    /// (`--checked false`); default verifies below a million flag pairs
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub checked: Option<bool>,
    /// Enumeration cap for the variety construction
    #[arg(long, default_value_t = 1_000_000)]
    pub cap: usize,
}

impl ConstructArgs {
    pub fn check_mode(&self) -> CheckMode {
        match self.checked {
            None => CheckMode::Auto,
            Some(true) => CheckMode::Always,
            Some(false) => CheckMode::Never,
        }
    }

    pub fn require_n(&self) -> Result<usize> {
        self.n.context("--n is required for this construction")
    }

    pub fn require_type(&self) -> Result<TypeVector> {
        let n = self.require_n()?;
        let dims = self
            .type_dims
            .clone()
            .context("--type is required for this construction")?;
        TypeVector::new(n, dims).context("invalid type vector")
    }
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Flag-code JSON file
    pub input: PathBuf,
    /// Write the certificate JSON to this path
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `json` additionally prints the certificate to stdout
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    /// Reproduce the worked reference codes and tables
    PaperExamples,
    /// Exhaustive oracle/checker agreement over a whole flag variety
    EquivalenceExhaustive,
    /// Build the construction grid and verify every contract
    ConstructionGrid,
    /// Cardinality bounds on every constructed code
    Bounds,
    /// Duality invariants on deterministic pseudo-random codes
    Duality,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteName,
    /// Field for equivalence-exhaustive (default 2)
    #[arg(long)]
    pub q: Option<u64>,
    /// Ambient dimension for equivalence-exhaustive (default 4)
    #[arg(long)]
    pub n: Option<usize>,
    /// Type vector for equivalence-exhaustive (default 1,2,3)
    #[arg(long = "type", value_delimiter = ',')]
    pub type_dims: Option<Vec<usize>>,
    /// Cap on enumerated flags
    #[arg(long, default_value_t = 1_000_000)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Ambient dimension
    #[arg(long)]
    pub n: usize,
    /// Type vector, comma-separated
    #[arg(long = "type", value_delimiter = ',', required = true)]
    pub type_dims: Vec<usize>,
    /// Which disjointness situation to bound; prints both when omitted
    #[arg(long, value_enum)]
    pub case: Option<CaseName>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseName {
    Disjoint,
    Nondisjoint,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationTarget {
    Grassmannian,
    #[value(name = "variety-1-nm1")]
    Variety1Nm1,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub target: EnumerationTarget,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Ambient dimension
    #[arg(long)]
    pub n: usize,
    /// Subspace dimension (grassmannian only)
    #[arg(long)]
    pub k: Option<usize>,
    /// Hard cap on the number of enumerated items
    #[arg(long, default_value_t = 100_000)]
    pub cap: usize,
    /// Write the dump to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Payload format
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}
