use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use super::document::load_input;
use super::output::{render_text, OutputDocument};
use crate::driver::{analyze, DriverOptions};
use crate::error::Error;

/// Options of the `compute` command.
#[derive(Clone, Debug, Default)]
pub struct RunArgs {
    pub input: PathBuf,
    pub json: Option<PathBuf>,
    pub dump_candidates: bool,
    pub max_degree: Option<u32>,
    pub no_verify: bool,
    pub probe_seed: u32,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

/// Process exit code for an error: 2 for bad input, 3 when a base point
/// needs a larger field, 4 for internal failures.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidPencil(_)
        | Error::FixedComponent { .. }
        | Error::InvalidMinimalPolynomial(_)
        | Error::ReducibleMinimalPolynomial(_)
        | Error::ZeroPolynomial => 2,
        Error::ExtensionRequired { .. } => 3,
        _ => 4,
    }
}

/// Runs the pipeline on an input file, writing the summary to `out` and
/// diagnostics to `err`. Returns the exit code.
pub fn run(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let doc = match load_input(&args.input) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.input.display());
            return exit_code(&e);
        }
    };
    let opts = DriverOptions {
        max_degree: args.max_degree,
        probe_seed: args.probe_seed,
        verify: !args.no_verify,
        keep_candidates: args.dump_candidates,
    };
    let result = match args.threads {
        None => analyze(&doc.pencil, &opts),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| analyze(&doc.pencil, &opts)),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start thread pool: {e}");
                return 4;
            }
        },
    };
    let analysis = match result {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let _ = write!(out, "{}", render_text(&analysis));
    let _ = writeln!(out, "time: {:.3} s", start.elapsed().as_secs_f64());
    if let Some(path) = &args.json {
        let json = OutputDocument::new(&analysis, &doc.f_text, &doc.g_text).to_json();
        if let Err(e) = std::fs::write(path, json) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    match &analysis.report {
        Some(r) if !r.passed() => {
            let _ = writeln!(err, "error: verification failed");
            4
        }
        _ => 0,
    }
}
