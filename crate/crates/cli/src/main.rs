//! `holocodes`: JSON frontend to the holocodes library.
//!
//! Every subcommand prints one `CommandResult` object on stdout. Exit code 0
//! means `status = "ok"`, 1 a domain error, 2 a usage error.

mod commands;
mod error;
mod json;

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use error::CliError;

#[derive(Parser)]
#[command(name = "holocodes", version, about = "Reed–Solomon, stabilizer, holographic, surface and building codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Field selection: `--q` for the default field of that order, or `--p`
/// with optional `--r` and `--modulus`.
#[derive(Args, Clone)]
pub struct FieldArgs {
    /// Field order (a prime power)
    #[arg(long)]
    q: Option<u32>,
    /// Characteristic
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree
    #[arg(long)]
    r: Option<u32>,
    /// Monic modulus coefficients c_0,…,c_r (low degree first)
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

#[derive(Args, Clone)]
pub struct SearchArgs {
    /// Cap on the number of codewords visited by exhaustive distance search
    #[arg(long, default_value_t = holocodes::code::DEFAULT_SEARCH_BOUND)]
    search_bound: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a finite field
    Field(FieldArgs),
    /// Build a (generalized) Reed–Solomon code and optionally encode a message
    RsEncode(commands::RsEncode),
    /// Exhaustive minimum distance of a code (`--input` code JSON)
    CodeDistance {
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Euclidean or Hermitian dual of a code
    CodeDual {
        #[arg(value_enum)]
        kind: DualKind,
        #[arg(long)]
        input: Option<String>,
    },
    /// Classical-to-quantum stabilizer constructions
    #[command(subcommand)]
    Crss(CrssCommand),
    /// Holographic encoder on the rooted tree
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Codes on Mumford-curve dual graphs
    #[command(subcommand)]
    Mumford(MumfordCommand),
    /// Pentagon tilings of the hyperbolic plane
    #[command(subcommand)]
    Tiling(TilingCommand),
    /// Homological surface codes
    #[command(subcommand)]
    Surface(SurfaceCommand),
    /// The toric code on an L×L torus
    Toric {
        #[arg(long = "L")]
        l: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Evaluation codes on the projective plane
    #[command(subcommand)]
    Building(BuildingCommand),
    /// Run the acceptance table, or print a reference table
    Reproduce {
        #[arg(long, value_enum)]
        table: Option<Table>,
        /// Run a single criterion
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DualKind {
    Euclidean,
    Hermitian,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Variant {
    /// A symplectically self-orthogonal code in F_q^{2n}
    SelfOrth,
    /// `{"c1": code, "c2": code}` with C1 ⊆ C2
    Nested,
    /// A Hermitian self-orthogonal code over F_{q²}
    Hermitian,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Table {
    Census,
}

#[derive(Subcommand)]
enum CrssCommand {
    /// Build a stabilizer code from classical input
    Build {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustive quantum distance of a stabilizer code
    Distance {
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Code-space dimension from the matrix oracle
    OracleDim {
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = holocodes::quantum::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,
    },
    /// The [[5,1,3]] qubit code
    FiveQubit,
    /// The three-qutrit perfect-tensor code
    Qutrit,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Encode inputs (`--message` or an `--input` element list)
    Encode {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, visible_alias = "n")]
        depth: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        message: Option<Vec<u32>>,
        #[arg(long)]
        input: Option<String>,
    },
    /// The encoding matrix, one row per unit input
    Matrix {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, visible_alias = "n")]
        depth: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum MumfordCommand {
    /// The code on the free legs of a gluing graph (`--input` graph JSON)
    Code {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: Option<String>,
    },
    /// Hang a tree of the given depth on each free leg
    Extend {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, visible_alias = "n")]
        depth: usize,
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Layer counts of the pentagon tiling
    Census {
        #[arg(long, visible_alias = "depth")]
        n: usize,
    },
    /// The disk region after N layers, as complex JSON
    Region {
        #[arg(long, visible_alias = "depth")]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Surface code of a complex (`--input` complex JSON)
    Code {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Subcommand)]
enum BuildingCommand {
    /// Point–line incidence graph of P²(F_q)
    Link {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Degree-m evaluation code on P²(F_q); with `--section`, its line outputs
    Code {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        section: Option<Vec<u32>>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Propagate line values across a cell (`--input` constraints JSON)
    Propagate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Serialize)]
struct CommandResult {
    status: &'static str,
    payload: Value,
    diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorReport>,
}

#[derive(Serialize)]
struct ErrorReport {
    code: String,
    message: String,
}

pub struct Output {
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    use commands::*;
    match command {
        Command::Field(f) => field(&f),
        Command::RsEncode(args) => rs_encode(&args),
        Command::CodeDistance { input, search } => code_distance(input.as_deref(), search.search_bound),
        Command::CodeDual { kind, input } => code_dual(kind, input.as_deref()),
        Command::Crss(c) => match c {
            CrssCommand::Build { variant, input, search } => crss_build(variant, input.as_deref(), search.search_bound),
            CrssCommand::Distance { input, search } => crss_distance(input.as_deref(), search.search_bound),
            CrssCommand::OracleDim { input, oracle_bound } => crss_oracle_dim(input.as_deref(), oracle_bound),
            CrssCommand::FiveQubit => crss_five_qubit(),
            CrssCommand::Qutrit => crss_qutrit(),
        },
        Command::Tree(t) => match t {
            TreeCommand::Encode { field, depth, k, message, input } => {
                tree_encode(&field, depth, k, message.as_deref(), input.as_deref())
            }
            TreeCommand::Matrix { field, depth, k } => tree_matrix(&field, depth, k),
        },
        Command::Mumford(m) => match m {
            MumfordCommand::Code { field, k, input } => mumford(&field, k, None, input.as_deref()),
            MumfordCommand::Extend { field, k, depth, input } => mumford(&field, k, Some(depth), input.as_deref()),
        },
        Command::Tiling(t) => match t {
            TilingCommand::Census { n } => tiling_census(n),
            TilingCommand::Region { n } => tiling_region(n),
        },
        Command::Surface(SurfaceCommand::Code { field, input, search }) => {
            surface(&field, input.as_deref(), search.search_bound)
        }
        Command::Toric { l, field, search } => toric(l, &field, search.search_bound),
        Command::Building(b) => match b {
            BuildingCommand::Link { field } => building_link(&field),
            BuildingCommand::Code { field, m, section, search } => {
                building_code(&field, m, section.as_deref(), search.search_bound)
            }
            BuildingCommand::Propagate { field, m, input } => building_propagate(&field, m, input.as_deref()),
        },
        Command::Reproduce { table, criterion } => reproduce(table, criterion),
    }
}

fn emit(result: &CommandResult) {
    let text = serde_json::to_string_pretty(result).expect("results serialize");
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let code = match e.kind() {
                ErrorKind::InvalidSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => "UnknownCommand",
                _ => "UsageError",
            };
            eprint!("{e}");
            let err = CliError::usage(code, e.to_string().lines().next().unwrap_or_default());
            emit(&CommandResult {
                status: "error",
                payload: Value::Null,
                diagnostics: Vec::new(),
                error: Some(ErrorReport { code: err.code, message: err.message }),
            });
            std::process::exit(2);
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            emit(&CommandResult { status: "ok", payload: out.payload, diagnostics: out.diagnostics, error: None })
        }
        Err(err) => {
            let exit = err.exit_code();
            emit(&CommandResult {
                status: "error",
                payload: err.payload,
                diagnostics: err.diagnostics,
                error: Some(ErrorReport { code: err.code, message: err.message }),
            });
            std::process::exit(exit);
        }
    }
}
