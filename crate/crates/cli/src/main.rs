//! `lccone`: run the verification suites from the command line.
//!
//! The report goes to stdout, diagnostics to stderr. Exit status is 0 when
//! the suite met its expectation, 1 when it did not, 2 on usage errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use lccone::suite::{emit_report, run_suite, Format};
use lccone::{SampleConfig, Scalar, SuiteName};

#[derive(Parser, Debug)]
#[command(
    name = "lccone",
    version,
    about = "Verify the indexed cone counterexample with exact arithmetic"
)]
struct Args {
    /// Suite to run: axioms, neighborhoods, duals, polars, lemma21,
    /// barrel-b1b2, barreled, refute-upper, all, or a control-* suite.
    #[arg(long, env = "LCCONE_SUITE", default_value = "all")]
    suite: String,

    #[arg(long, env = "LCCONE_SEED", default_value_t = 0)]
    seed: u64,

    /// Samples per law.
    #[arg(long, env = "LCCONE_SAMPLES", default_value_t = 10_000)]
    samples: u64,

    /// Barrel radius, as `p/q` or `p`.
    #[arg(long, env = "LCCONE_W", default_value = "1")]
    w: String,

    #[arg(long, env = "LCCONE_MAX_INDEX", default_value_t = 8)]
    max_index: u64,

    /// Largest numerator and denominator of sampled scalars.
    #[arg(long, env = "LCCONE_MAX_VALUE", default_value_t = 64)]
    max_value: u64,

    #[arg(long, env = "LCCONE_JSON")]
    json: bool,

    /// Record wall-clock time in the report. Off by default so that
    /// reports are reproducible byte for byte.
    #[arg(long, env = "LCCONE_TIMING")]
    timing: bool,

    /// List suite names and exit.
    #[arg(long)]
    list: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("lccone: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if args.list {
        for name in SuiteName::all_names() {
            println!("{name:24} {}", name.statement());
        }
        return ExitCode::SUCCESS;
    }
    let suite: SuiteName = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let w: Scalar = match args.w.parse() {
        Ok(w) => w,
        Err(e) => return usage_error(format!("--w: {e}")),
    };
    let cfg = SampleConfig {
        seed: args.seed,
        sample_count: args.samples,
        max_index: args.max_index,
        max_numerator: args.max_value,
        max_denominator: args.max_value,
        w,
        ..SampleConfig::default()
    };
    if let Err(e) = cfg.validate() {
        return usage_error(e);
    }

    let start = Instant::now();
    let mut report = match run_suite(suite, &cfg) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let elapsed = start.elapsed();
    if args.timing {
        report.duration_ms = Some(elapsed.as_millis() as u64);
    }
    eprintln!("lccone: {suite} finished in {:.2?}", elapsed);

    let format = if args.json { Format::Json } else { Format::Text };
    print!("{}", emit_report(&report, format));

    if suite.is_control() {
        eprintln!("lccone: {suite} is a negative control; failure is the expected outcome");
    }
    if report.as_expected() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
