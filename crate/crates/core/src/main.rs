use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pencil_fibers::io::{run, RunArgs};

#[derive(Parser)]
#[command(name = "pencil-fibers", version, about = "Special fibers of pencils of plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve the base locus and list the components of the special fibers.
    Compute {
        /// Input document with [field] and [pencil] sections.
        input: PathBuf,
        /// Also write the result as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// List every candidate multiplicity vector.
        #[arg(long)]
        dump_candidates: bool,
        /// Stop the degree loop at N instead of the pencil degree.
        #[arg(long, value_name = "N")]
        max_degree: Option<u32>,
        /// Skip the final re-multiplication and invariant checks.
        #[arg(long)]
        no_verify: bool,
        /// Offset for the probe members used to read generic multiplicities.
        #[arg(long, value_name = "N", default_value_t = 0)]
        probe_seed: u32,
        /// Number of worker threads.
        #[arg(long, value_name = "N")]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Compute { input, json, dump_candidates, max_degree, no_verify, probe_seed, threads } = cli.command;
    let args = RunArgs { input, json, dump_candidates, max_degree, no_verify, probe_seed, threads };
    let code = run(&args, &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code as u8)
}
