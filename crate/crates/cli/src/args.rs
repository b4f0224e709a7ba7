use std::num::NonZeroU64;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subtuple_core::{Budget, ComputationMode, RemainderPoolMode};

#[derive(Debug, Parser)]
#[command(
    name = "subtuple",
    version,
    about = "Exact tail probabilities for the occurrence-in-subtuple problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability of finding z or more of y designated types among x draws
    Pvalue(PvalueArgs),
    /// Cross-check the closed form against enumeration over a parameter grid
    Validate(ValidateArgs),
    /// Derive (n, x, y, z) from a regulation edge list and report its p-value
    Enrich(EnrichArgs),
    /// Report the p-value over a range of z or x
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct PvalueArgs {
    /// Number of element types
    #[arg(long)]
    pub n: u64,
    /// Number of items drawn
    #[arg(long)]
    pub x: u64,
    /// Number of designated types
    #[arg(long)]
    pub y: u64,
    /// Threshold count of designated types found
    #[arg(long)]
    pub z: u64,
    #[command(flatten)]
    pub compute: ComputeArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    /// Computation route
    #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
    pub mode: ModeArg,
    /// Remainder pool convention
    #[arg(long, value_enum, default_value_t = RemainderArg::Corrected)]
    pub remainder: RemainderArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Significant digits of the decimal rendering
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u16).range(1..=10000))]
    pub precision: u16,
    /// Monte Carlo sample count
    #[arg(long, default_value = "100000")]
    pub samples: NonZeroU64,
    /// Monte Carlo seed
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Cap on items visited by the enumerating routes
    #[arg(long, default_value_t = Budget::DEFAULT.limit())]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Fast,
    Naive,
    Exhaustive,
    Montecarlo,
}

impl From<ModeArg> for ComputationMode {
    fn from(value: ModeArg) -> Self {
        match value {
            ModeArg::Fast => ComputationMode::Fast,
            ModeArg::Naive => ComputationMode::Naive,
            ModeArg::Exhaustive => ComputationMode::Exhaustive,
            ModeArg::Montecarlo => ComputationMode::Montecarlo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RemainderArg {
    Corrected,
    Paper,
}

impl From<RemainderArg> for RemainderPoolMode {
    fn from(value: RemainderArg) -> Self {
        match value {
            RemainderArg::Corrected => RemainderPoolMode::Corrected,
            RemainderArg::Paper => RemainderPoolMode::PaperFaithful,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Rational,
    Decimal,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Largest n of the fast-vs-naive grid
    #[arg(long, default_value_t = 8)]
    pub max_n: u64,
    /// Largest x of both grids (also capped by n(n-1))
    #[arg(long, default_value_t = 12)]
    pub max_x: u64,
    /// Largest y of both grids (also capped by n)
    #[arg(long, default_value_t = 5)]
    pub max_y: u64,
    /// Largest n of the fast-vs-exhaustive grid
    #[arg(long, default_value_t = 4)]
    pub oracle_max_n: u64,
    /// Remainder convention checked against the exhaustive oracle
    #[arg(long, value_enum, default_value_t = RemainderArg::Corrected)]
    pub oracle_remainder: RemainderArg,
    /// Cap on items visited per enumerated instance
    #[arg(long, default_value_t = Budget::DEFAULT.limit())]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct EnrichArgs {
    /// Edge list, one `SOURCE -> TARGET` per line
    #[arg(long)]
    pub edges: PathBuf,
    /// Known regulators, one identifier per line
    #[arg(long)]
    pub regulators: PathBuf,
    /// Gene universe, one identifier per line (inferred from the inputs if absent)
    #[arg(long)]
    pub universe: Option<PathBuf>,
    /// Collapse duplicate edges instead of failing
    #[arg(long)]
    pub dedupe: bool,
    /// Drop identifiers outside the universe instead of failing
    #[arg(long)]
    pub allow_unknown: bool,
    /// Drop self-loops instead of failing
    #[arg(long)]
    pub allow_self_loops_drop: bool,
    #[command(flatten)]
    pub compute: ComputeArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: u64,
    /// Number of items drawn (required unless sweeping x)
    #[arg(long)]
    pub x: Option<u64>,
    #[arg(long)]
    pub y: u64,
    /// Threshold (required unless sweeping z)
    #[arg(long)]
    pub z: Option<u64>,
    /// Inclusive z range, `A..B`
    #[arg(long, value_parser = parse_range, conflicts_with = "sweep_x", required_unless_present = "sweep_x")]
    pub sweep_z: Option<RangeInclusive<u64>>,
    /// Inclusive x range, `A..B`
    #[arg(long, value_parser = parse_range)]
    pub sweep_x: Option<RangeInclusive<u64>>,
    #[command(flatten)]
    pub compute: ComputeArgs,
}

/// Parses `A..B` or `A..=B` as an inclusive range.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected `A..B`, got `{text}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo = lo
        .trim()
        .parse::<u64>()
        .map_err(|e| format!("range start `{lo}`: {e}"))?;
    let hi = hi
        .trim()
        .parse::<u64>()
        .map_err(|e| format!("range end `{hi}`: {e}"))?;
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..2"), Ok(0..=2));
        assert_eq!(parse_range("3..=5"), Ok(3..=5));
        let reversed = parse_range("4..1").unwrap();
        assert_eq!((*reversed.start(), *reversed.end()), (4, 1));
        assert!(parse_range("4").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
