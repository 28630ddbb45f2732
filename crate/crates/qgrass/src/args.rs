//! Command-line flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qgrass", version, about = "Exact verification reports for quantum Grassmann superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of closed-form dimensions against enumeration, per degree.
    Dims(SpaceArgs),
    /// Apply a generator or atom word, or one side pair of a named relation, to a monomial.
    Act(ActArgs),
    /// Verify the quantum group relations on a space.
    CheckUq(AlgebraArgs),
    /// Verify the module-algebra law for every generator.
    CheckLeibniz(AlgebraArgs),
    /// Verify the Weyl cross-relation suites.
    CheckWeyl(SuiteArgs),
    /// Verify the differential-operator suites.
    CheckDq(SuiteArgs),
    /// Build a Hopf algebra presentation and verify its axioms.
    Hopf(HopfArgs),
    /// Highest-weight vectors and simplicity of graded components.
    Simple(SimpleArgs),
    /// Sweep of q-integer and q-binomial identities.
    Qtest(QtestArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// `generic` or `root`; `--d` alone implies `root`.
    #[arg(long, value_parser = ["generic", "root"])]
    pub q: Option<String>,
    /// Order of the root of unity q.
    #[arg(long)]
    pub d: Option<u32>,
    /// Expected characteristic of q; checked against `--d`.
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long)]
    pub t_max: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    #[command(flatten)]
    pub common: Common,
    /// omega, omega-restricted, dual or dual-restricted.
    #[arg(long, default_value = "omega")]
    pub family: String,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// gl or sl.
    #[arg(long, default_value = "gl")]
    pub algebra: String,
}

#[derive(Args, Debug, Clone)]
pub struct ActArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, default_value = "gl")]
    pub algebra: String,
    /// Space-separated letters such as `E1 F2 K1^-1` or `d1 x2 s1^-1`; the last acts first.
    #[arg(long, conflicts_with = "relation")]
    pub word: Option<String>,
    /// Relation name as printed in a report.
    #[arg(long, requires = "suite")]
    pub relation: Option<String>,
    /// Suite that defines `--relation`, e.g. `uq-gl` or `dq-super`.
    #[arg(long)]
    pub suite: Option<String>,
    /// Monomial `(a1,..|f1,..)`, or `u * v` for a Leibniz law.
    #[arg(long)]
    pub input: String,
}

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Comma-separated suite names; the command's default set when absent.
    #[arg(long, value_delimiter = ',')]
    pub suite: Option<Vec<String>>,
}

#[derive(Args, Debug, Clone)]
pub struct HopfArgs {
    #[command(flatten)]
    pub common: Common,
    /// taft-mn, taft-mu, dq, aq or gq.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub restricted: bool,
    /// Alternate coproduct on `dq`.
    #[arg(long)]
    pub minus: bool,
    /// Impose `K^ell = 1` on `aq` and `gq`.
    #[arg(long)]
    pub k_ell: bool,
    /// Check the axioms on every basis element (finite families only).
    #[arg(long)]
    pub exhaustive: bool,
    /// Also check primitivity of the ell-th powers and divided powers.
    #[arg(long)]
    pub primitivity: bool,
    /// Matrix for `taft-mu`: rows separated by `;`, entries such as `q3`, `-q^2`, `1`.
    #[arg(long)]
    pub mu: Option<String>,
    /// Nilpotency orders for `taft-mu`, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub ells: Option<Vec<u32>>,
    /// Group orders for the generalized `taft-mu`, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub ords: Option<Vec<u32>>,
}

#[derive(Args, Debug, Clone)]
pub struct SimpleArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, default_value_t = 0)]
    pub t_min: i64,
}

#[derive(Args, Debug, Clone)]
pub struct QtestArgs {
    #[command(flatten)]
    pub common: Common,
    /// Root-of-unity orders to sweep; `--d` selects a single one.
    #[arg(long, value_delimiter = ',', default_value = "3,5,6,8")]
    pub orders: Vec<u32>,
    /// Sweep `s` up to this multiple of ell.
    #[arg(long, default_value_t = 3)]
    pub span: i64,
}
