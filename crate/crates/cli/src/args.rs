use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use quatalg::{rational, Params, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "quatalg",
    version,
    about = "Exact derivation, biderivation and centroid computations for generalized quaternion algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// λ1 as an integer or p/q
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_rational)]
    pub l1: Option<Rational>,

    /// λ2 as an integer or p/q
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_rational)]
    pub l2: Option<Rational>,

    /// λ3 as an integer or p/q
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_rational)]
    pub l3: Option<Rational>,

    /// Structure-tensor JSON file, instead of --l1/--l2/--l3
    #[arg(long, global = true, value_name = "FILE")]
    pub algebra: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,

    /// Seed for the randomized verifiers
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Trials for the randomized verifiers [default: 100 for two-local, 50 for the centroid lemma]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print the multiplication table
    Table,
    /// Derivation algebra and its closed form
    Derivations,
    /// Probe-space certificate for local derivations
    Local,
    /// Randomized check that 2-local derivations are derivations
    TwoLocal,
    /// Biderivations with their symmetric/skew split
    Biderivations,
    /// Commuting linear maps
    Commuting,
    /// Centroid, quasi-centroid and the centroid-derivation lemma
    Centroid,
    /// Quasi-centroid
    QuasiCentroid,
    /// Run every applicable check
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Params(Params),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub source: Source,
    pub command: Command,
    pub output: Output,
    pub seed: u64,
    pub trials: Option<usize>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn usage(kind: ErrorKind, msg: &str) -> clap::Error {
    Cli::command().error(kind, msg)
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let source = match (cli.l1, cli.l2, cli.l3, cli.algebra) {
        (Some(a), Some(b), Some(c), None) => Source::Params(Params::new(a, b, c)),
        (None, None, None, Some(path)) => Source::File(path),
        (None, None, None, None) => {
            return Err(usage(
                ErrorKind::MissingRequiredArgument,
                "an algebra is required: pass --l1, --l2 and --l3, or --algebra FILE",
            ))
        }
        (_, _, _, Some(_)) => {
            return Err(usage(
                ErrorKind::ArgumentConflict,
                "--algebra cannot be combined with --l1/--l2/--l3",
            ))
        }
        _ => {
            return Err(usage(
                ErrorKind::MissingRequiredArgument,
                "--l1, --l2 and --l3 must all be given",
            ))
        }
    };
    Ok(RunConfig {
        source,
        command: cli.command,
        output: cli.output,
        seed: cli.seed,
        trials: cli.trials.map(|t| t as usize),
    })
}
