use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use equiseries_cli::{render_table, run, CommandKind, ExampleSpec, HilbertMode, JobSpec, OutputFormat};

/// Exact equivariant Hilbert and Ehrhart series of complexes, polytopes and
/// posets under finite group actions.
#[derive(Parser)]
#[command(name = "equiseries", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Direct,
    Formula,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Truncation degree N (default: dimension + 4).
    #[arg(long = "truncate")]
    truncate: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Override the group-order cap.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Equivariant Hilbert series of an acted complex (or derived complex).
    Hilbert {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
        /// formula requires a proper action; auto falls back to direct.
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// Also report the numerator over (1-t)^e.
        #[arg(long = "denominator-exp")]
        denominator_exp: Option<usize>,
    },
    /// Equivariant Ehrhart series of an acted polytope (or order polytope).
    Ehrhart {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
        /// Denominator exponent for the numerator report (default dim+1).
        #[arg(long = "denominator-exp")]
        denominator_exp: Option<usize>,
    },
    /// Flag f/h characters for a proper invariant coloring.
    Flag {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Coefficientwise Ehrhart–Hilbert comparison over an invariant
    /// unimodular triangulation.
    VerifyEbm {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decompositions of the equivariant h- and flag h-characters against the
    /// character table.
    Effectiveness {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// h*-series against det(Id − ρ̃t), with effectiveness verdicts.
    Hstar {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Built-in worked examples (self-checking).
    Example {
        /// hexagon, artinian, single-edge, unit-square, radio-tower, boolean,
        /// lipschitz, join
        name: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Left factor for join, e.g. chain:2 or antichain:2.
        #[arg(long, default_value = "chain:1")]
        left: String,
        /// Right factor for join.
        #[arg(long, default_value = "antichain:2")]
        right: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn job_from_cli(cli: Cli) -> Result<JobSpec, String> {
    let (command, input_path, common, mode, denominator_exp, example) = match cli.command {
        Command::Hilbert { input, common, mode, denominator_exp } => (
            CommandKind::Hilbert,
            Some(input),
            common,
            mode,
            denominator_exp,
            None,
        ),
        Command::Ehrhart { input, common, denominator_exp } => (
            CommandKind::Ehrhart,
            Some(input),
            common,
            ModeArg::Auto,
            denominator_exp,
            None,
        ),
        Command::Flag { input, common } => {
            (CommandKind::Flag, Some(input), common, ModeArg::Auto, None, None)
        }
        Command::VerifyEbm { input, common } => {
            (CommandKind::VerifyEbm, Some(input), common, ModeArg::Auto, None, None)
        }
        Command::Effectiveness { input, common } => {
            (CommandKind::Effectiveness, Some(input), common, ModeArg::Auto, None, None)
        }
        Command::Hstar { input, common } => {
            (CommandKind::Hstar, Some(input), common, ModeArg::Auto, None, None)
        }
        Command::Example { name, k, n, left, right, common } => (
            CommandKind::Example,
            None,
            common,
            ModeArg::Auto,
            None,
            Some(ExampleSpec { name, k, n, left, right }),
        ),
    };
    let input = match input_path {
        None => None,
        Some(path) => Some(
            std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        ),
    };
    Ok(JobSpec {
        command,
        input,
        example,
        truncation: common.truncate,
        format: match common.format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Table => OutputFormat::Table,
        },
        denominator_exp,
        cap: common.cap,
        mode: match mode {
            ModeArg::Auto => HilbertMode::Auto,
            ModeArg::Direct => HilbertMode::Direct,
            ModeArg::Formula => HilbertMode::Formula,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match job_from_cli(cli) {
        Ok(job) => job,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    match run(&job) {
        Ok(outcome) => {
            match job.format {
                OutputFormat::Json => println!("{}", outcome.report.to_json()),
                OutputFormat::Table => print!("{}", render_table(&outcome.report)),
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
