//! The `hcmod` command line: argument parsing, dispatch and output.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hcmod_core::Error;

mod commands;
mod render;
pub mod selftest;

pub use commands::ComponentGroupReport;

#[derive(Parser, Debug)]
#[command(name = "hcmod", version, about = "Classify Harish-Chandra modules supported on nilpotent orbit closures")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify irreducible modules with full support for one or more orbits.
    Classify(ClassifyArgs),
    /// Component group of the centralizer for the Spin pair.
    ComponentGroup(ComponentGroupArgs),
    /// ab-diagrams of a shape with a given number of `a` labels.
    AbDiagrams(AbDiagramArgs),
    /// The slice catalog and its quantizability table.
    #[command(subcommand)]
    Slices(SlicesCommand),
    /// Exceptional real forms.
    #[command(subcommand)]
    Exceptional(ExceptionalCommand),
    /// Root data for E6, E7, E8.
    #[command(subcommand)]
    Roots(RootsCommand),
    /// Run the built-in golden checks and a seeded randomized sweep.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Jordan type, e.g. `3,2,1`. Repeat to classify several orbits.
    #[arg(long, required = true)]
    pub tau: Vec<String>,
    /// `spin`, `inner:K` or `symplectic`.
    #[arg(long, default_value = "spin")]
    pub pair: String,
    /// Quantization parameter, one rational `p/q` per column; zero if omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Codimension-2 parts whose slice period is non-integral.
    #[arg(long, value_delimiter = ',')]
    pub nonintegral: Vec<usize>,
    /// `all` or `trivial-on-minus-one`.
    #[arg(long, default_value = "all")]
    pub genuine: String,
    /// Worker threads for several `--tau` values; output keeps input order.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct ComponentGroupArgs {
    #[arg(long)]
    pub tau: String,
    /// Also report subgroup orders of Gamma next to their closed forms.
    #[arg(long)]
    pub census: bool,
}

#[derive(Args, Debug)]
pub struct AbDiagramArgs {
    #[arg(long)]
    pub tau: String,
    /// Number of `a` labels, `0 < k < n`.
    #[arg(long)]
    pub k: usize,
    /// Also list the diagrams covering each one in the closure order.
    #[arg(long)]
    pub covers: bool,
}

#[derive(Subcommand, Debug)]
pub enum SlicesCommand {
    /// The five slice singularities.
    List,
    /// Quantizability on the `a2` slice with `K = SO_3`.
    Verdict {
        /// Slice period: a rational or `non-integral`.
        #[arg(long, allow_hyphen_values = true)]
        period: String,
        /// One of `1`, `i`, `-1`, `-i`.
        #[arg(long, allow_hyphen_values = true)]
        scalar: String,
    },
    /// Unobstructiveness of a slice for an involution class.
    Unobstructive {
        #[arg(long)]
        kind: String,
        /// `inner`, `outer` or `any`.
        #[arg(long, default_value = "any")]
        involution: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExceptionalCommand {
    /// All catalogued orbits.
    List,
    /// Counts and verdict for one orbit.
    Verdict {
        /// Real form, e.g. `E6(6)`.
        #[arg(long)]
        form: String,
        #[arg(long)]
        orbit: u32,
        /// `k`, `kbar` or `ktilde`.
        #[arg(long, default_value = "ktilde")]
        level: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Basis {
    /// Coordinates in the simple coroots.
    Coroot,
    /// Coordinates in the fundamental coweights.
    Coweight,
}

#[derive(Subcommand, Debug)]
pub enum RootsCommand {
    /// Evaluate roots or subalgebra weights on a coweight.
    Eval {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Subalgebra datum, e.g. `e6_6`.
        #[arg(long)]
        datum: Option<String>,
        /// Basis in which `--theta` is written.
        #[arg(long, value_enum, default_value_t = Basis::Coroot)]
        basis: Basis,
    },
    /// Print the Cartan matrix.
    Cartan {
        #[arg(long = "type")]
        root_type: String,
    },
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random cases in the sweep.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CharacterTable(_) | Error::Catalog(_) => Failure::internal(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::internal(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 on an internal failure, 2 on invalid input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
