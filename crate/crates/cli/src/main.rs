mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qrm_core::lincode::{Limits, DEFAULT_CAP};

/// Generalized Reed-Muller codes, quantum codes built from them, and
/// punctured quantum codes.
///
/// Exit status: 0 all checks pass, 2 usage error, 3 a result was capped,
/// 4 a predicted parameter disagrees with the computed one, 5 a requested
/// witness provably does not exist.
#[derive(Debug, Parser)]
#[command(name = "qrm", version)]
struct Cli {
    /// Largest number of codewords any single enumeration may visit.
    #[arg(long, global = true, env = "QRM_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,

    /// Fail instead of falling back to bounds when the cap is reached.
    #[arg(long, global = true)]
    strict: bool,

    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Tabular output, one row per quantum code.
    #[arg(long, global = true)]
    csv: bool,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build R_q(order, m) and compare with its closed-form parameters.
    Grm(GrmArgs),
    /// Build a quantum code from GRM codes.
    #[command(subcommand)]
    Quantum(QuantumCmd),
    /// Compute a puncture code, search it, and puncture.
    #[command(subcommand)]
    Puncture(PunctureCmd),
    /// Run a construction over a parameter grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct GrmArgs {
    #[arg(short)]
    q: u32,
    #[arg(short)]
    m: usize,
    #[arg(long)]
    order: usize,
    /// Also check that the dual is R_q(order⊥, m).
    #[arg(long)]
    dual_check: bool,
    /// Print the generator matrix.
    #[arg(long)]
    dump: bool,
    /// Print the weight distribution.
    #[arg(long)]
    weights: bool,
}

#[derive(Debug, Subcommand)]
enum QuantumCmd {
    /// CSS code from R_q(nu1, m) ⊆ R_q(nu2, m).
    Css(CssArgs),
    /// Hermitian code from R_{q²}(nu, m).
    Hermitian(HermitianArgs),
}

#[derive(Debug, Args)]
struct CssArgs {
    #[arg(short)]
    q: u32,
    #[arg(short)]
    m: usize,
    #[arg(long)]
    nu1: usize,
    #[arg(long)]
    nu2: usize,
    /// Print the stabilizer matrix.
    #[arg(long)]
    dump: bool,
}

#[derive(Debug, Args)]
struct HermitianArgs {
    #[arg(short)]
    q: u32,
    #[arg(short, default_value_t = 1)]
    m: usize,
    #[arg(long)]
    nu: usize,
    #[arg(long)]
    dump: bool,
}

#[derive(Debug, Subcommand)]
enum PunctureCmd {
    Css {
        #[command(flatten)]
        code: CssArgs,
        #[command(flatten)]
        action: PunctureAction,
    },
    Hermitian {
        #[command(flatten)]
        code: HermitianArgs,
        #[command(flatten)]
        action: PunctureAction,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PunctureAction {
    /// Puncture along the first puncture-code vector of this weight.
    #[arg(long)]
    target_weight: Option<usize>,
    /// Weight distribution of the puncture code.
    #[arg(long)]
    list_weights: bool,
    /// Run the full length-(nu+1)q MDS construction (Hermitian, m = 1).
    #[arg(long)]
    mds_chain: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Css,
    Hermitian,
    Mds,
}

#[derive(Debug, Args)]
struct SweepArgs {
    family: Family,
    /// Field sizes, comma separated. An empty grid gives an empty table.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u32>,
    /// Numbers of variables (ignored by `mds`).
    #[arg(short, long, value_delimiter = ',', default_value = "1")]
    m: Vec<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        cap: cli.cap,
        strict: cli.strict,
    };
    let start = Instant::now();
    let mut report = commands::run(&cli.command, &limits);
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let out = if cli.json {
        report.to_json() + "\n"
    } else if cli.csv {
        report.to_csv()
    } else {
        report.to_text()
    };
    print!("{out}");
    ExitCode::from(report.outcome().exit_code() as u8)
}
