use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use flagcoh::job::{
    parse_weight, parse_word, read_jobs, size_gate_from_env, CliffordParams, GATE_ENV,
};
use flagcoh::{run_job, CliError, Command, JobSpec, Outcome, OutputFormat, Suite, WFilter};
use flagcoh_core::Weight;

/// Exact Borel-Bott-Weil computations and identity sweeps on flag varieties.
///
/// Exit status: 0 all checks pass, 1 a check failed, 2 usage error,
/// 3 gate violation, 4 i/o error, 5 internal error.
#[derive(Debug, Parser)]
#[command(name = "flagcoh", version, after_help = format!("Set {GATE_ENV} to override the Weyl group size gate."))]
struct Cli {
    /// Report format.
    #[arg(long, short, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    output: OutputFormat,
    /// Run the `[[job]]` entries of a TOML file instead of a subcommand.
    #[arg(long, value_name = "PATH")]
    jobs_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Cartan data, rho and the positive roots.
    Roots { group: String },
    /// Weyl group elements with length, inversion set and sigma.
    Weyl {
        group: String,
        /// Only these elements (`1,2`, `s1s2` or `id`); repeatable.
        #[arg(long, value_parser = parse_word)]
        word: Vec<Vec<usize>>,
    },
    /// The nonvanishing cohomology of the line bundle E_mu on G/B.
    Bbw {
        group: String,
        /// Fundamental-weight coordinates, e.g. `1,-1`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_weight)]
        weight: Weight,
    },
    /// The Euler characteristic of E_mu, by both index routes.
    Index {
        group: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_weight)]
        weight: Weight,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Group such as `A2`; not used by `clifford`.
        group: Option<String>,
        /// Weights range over `[-N, N]` in every coordinate.
        #[arg(long = "box", value_name = "N", default_value_t = 4)]
        weight_box: u32,
        /// Only these elements; repeatable.
        #[arg(long, value_parser = parse_word)]
        word: Vec<Vec<usize>>,
        /// Largest exterior-algebra dimension (clifford).
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Random rational vectors per dimension (clifford).
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the intertwiner report to this TOML file (clifford).
        #[arg(long, value_name = "PATH")]
        report_file: Option<PathBuf>,
    },
}

fn filter(words: Vec<Vec<usize>>) -> WFilter {
    if words.is_empty() {
        WFilter::All
    } else {
        WFilter::Words(words)
    }
}

fn job_from(cmd: Cmd, output: OutputFormat) -> JobSpec {
    let mut job = match cmd {
        Cmd::Roots { group } => JobSpec::new(Some(group), Command::Roots),
        Cmd::Weyl { group, word } => {
            let mut j = JobSpec::new(Some(group), Command::Weyl);
            j.w_filter = filter(word);
            j
        }
        Cmd::Bbw { group, weight } => JobSpec::new(Some(group), Command::Bbw { weight }),
        Cmd::Index { group, weight } => JobSpec::new(Some(group), Command::Index { weight }),
        Cmd::Verify {
            suite,
            group,
            weight_box,
            word,
            max_dim,
            trials,
            seed,
            report_file,
        } => {
            let mut j = JobSpec::new(group, Command::Verify { suite });
            j.weight_box = i64::from(weight_box);
            j.w_filter = filter(word);
            j.clifford = CliffordParams {
                max_dim,
                trials,
                seed,
                report_file,
            };
            j
        }
    };
    job.output = output;
    job
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let gate = size_gate_from_env()?;
    let jobs = match (cli.jobs_file, cli.command) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--jobs-file cannot be combined with a subcommand".into(),
            ))
        }
        (Some(path), None) => read_jobs(&path, cli.output)?,
        (None, Some(cmd)) => vec![job_from(cmd, cli.output)],
        (None, None) => {
            return Err(CliError::Usage(
                "expected a subcommand or --jobs-file; see --help".into(),
            ))
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut total = Outcome::default();
    for (i, job) in jobs.iter().enumerate() {
        if jobs.len() > 1 && job.output == OutputFormat::Pretty {
            writeln!(out, "== job {}: {}", i + 1, job.describe())?;
        }
        total = total.merge(run_job(job, gate, &mut out)?);
        out.flush()?;
    }
    Ok(total)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(o) if o.failed == 0 => ExitCode::SUCCESS,
        Ok(o) => {
            eprintln!("flagcoh: {} of {} checks failed", o.failed, o.checks);
            ExitCode::from(CliError::EXIT_CHECK_FAILED)
        }
        Err(e) => {
            eprintln!("flagcoh: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
