//! The `sdesc` command line. Every subcommand is a thin adapter over the
//! library; output is deterministic and `--json` output is canonical (sorted
//! keys, big integers as decimal strings).
//!
//! Exit status: 0 success, 1 domain error or failed check, 2 malformed
//! input, 3 resource cap exceeded.

mod commands;
mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::DEFAULT_ENUMERATION_CAP;
use crate::error::Error;
use crate::juggling::DEFAULT_PSI_CAP;

pub use table::{emit_pk_table, emit_qk_table, DEFAULT_TABLE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sdesc",
    version,
    about = "Signed permutation statistics, maxdrop-restricted descent polynomials and 2-colored juggling sequences"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Descent set, descent count, maximum drop and bubble sort complexity.
    Stats(StatsArgs),
    /// One bubble sort sweep, or the full sort with its pass count.
    Sort(SortArgs),
    /// The restricted descent polynomial A_{n,k} or B_{n,k}.
    Poly(PolyArgs),
    /// b_{n,k}(S): members of B_{n,k} whose descent set contains S.
    Setcount(SetcountArgs),
    /// The bijection f or its inverse g.
    Bijection(BijectionArgs),
    /// Juggling sequences and the maps phi and psi.
    Juggle(JuggleArgs),
    /// Symmetry, unimodality and log-concavity of an integer sequence.
    Checkseq(CheckseqArgs),
    /// Kernel polynomial tables and the B_{n,k} grid.
    Table(TableArgs),
    /// Run the identity suites; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Signed permutation in one-line notation, e.g. "-3,4,-1,-5,2".
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct SortArgs {
    /// Signed word or signed permutation, e.g. "-3,4,-1,-5,2".
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
    /// Sort to the identity and report every pass and the pass count.
    #[arg(long, conflicts_with = "recursive")]
    pub complexity: bool,
    /// Compute the sweep by the block decomposition instead of adjacent swaps.
    #[arg(long)]
    pub recursive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Recurrence,
    Explicit,
    Series,
    All,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// A (permutations) or B (signed permutations).
    #[arg(long, default_value = "B")]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub method: MethodArg,
    /// Largest n enumerated by the brute-force route.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethodArg {
    Brute,
    Recursive,
    All,
}

#[derive(Debug, Args)]
pub struct SetcountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Descent positions in [0, n-1], e.g. "0,2,6,7" or "{}".
    #[arg(long, default_value = "")]
    pub set: String,
    #[arg(long, value_enum, default_value = "recursive")]
    pub method: CountMethodArg,
    /// Largest n enumerated by the brute-force route.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["f", "g"])))]
pub struct BijectionArgs {
    /// Apply f to --perm with --k and --set.
    #[arg(long)]
    pub f: bool,
    /// Apply g to --perm and --x, producing a signed permutation of length --n.
    #[arg(long)]
    pub g: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
    #[arg(long)]
    pub k: usize,
    /// Descent set S for f.
    #[arg(long, required_if_eq("f", "true"))]
    pub set: Option<String>,
    /// Value set X for g, e.g. "4,5,7".
    #[arg(long, required_if_eq("g", "true"))]
    pub x: Option<String>,
    /// Target length for g.
    #[arg(long, required_if_eq("g", "true"))]
    pub n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderArg {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("mode")
        .required(true)
        .args(["validate", "state", "landing", "phi", "phi_inverse", "psi", "psi_inverse", "render"])
))]
pub struct JuggleArgs {
    /// Validate --seq and report its kind and ball count.
    #[arg(long)]
    pub validate: bool,
    /// State of --seq.
    #[arg(long)]
    pub state: bool,
    /// Landing permutation of --seq for --k balls.
    #[arg(long)]
    pub landing: bool,
    /// phi(--perm) for --k.
    #[arg(long)]
    pub phi: bool,
    /// phi^-1(--seq) for --k.
    #[arg(long)]
    pub phi_inverse: bool,
    /// psi(--perm) for --k.
    #[arg(long)]
    pub psi: bool,
    /// psi^-1(--seq) for --n and --k.
    #[arg(long)]
    pub psi_inverse: bool,
    /// Arc diagram of --seq.
    #[arg(long, value_enum)]
    pub render: Option<RenderArg>,
    /// Throw sequence, e.g. "+5,-2,0,-1".
    #[arg(long, allow_hyphen_values = true)]
    pub seq: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub perm: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest k accepted by psi, whose period is n*k!.
    #[arg(long, default_value_t = DEFAULT_PSI_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct CheckseqArgs {
    /// Comma-separated integers, e.g. "1,4,6,6,4,2,1".
    #[arg(long, allow_hyphen_values = true)]
    pub seq: String,
    #[arg(long)]
    pub symmetric: bool,
    #[arg(long)]
    pub unimodal: bool,
    #[arg(long)]
    pub logconcave: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["qk", "pk", "bnk_grid"])))]
pub struct TableArgs {
    /// Rows Q_0 .. Q_{max-k} with shape verdicts.
    #[arg(long)]
    pub qk: bool,
    /// Rows P_0 .. P_{max-k} with shape verdicts.
    #[arg(long)]
    pub pk: bool,
    /// Every B_{n,k} (or A_{n,k} with --family A) for 0 <= k <= n <= max-n.
    #[arg(long)]
    pub bnk_grid: bool,
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, default_value = "B")]
    pub family: String,
    /// Largest k (or n for the grid) accepted.
    #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run (default: all). Repeatable.
    #[arg(long = "suite", value_parser = ["regression", "routes", "statistics", "bijections", "juggling", "conjecture", "cardinalities"])]
    pub suites: Vec<String>,
    /// Smaller exhaustive ranges.
    #[arg(long)]
    pub quick: bool,
}

/// Exit status for a library error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } => EXIT_PARSE,
        e if e.is_resource_limit() => EXIT_RESOURCE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its result to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    commands::dispatch(&cli, out, err)
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
