//! Sweeps, job files and report formats on top of [`flagcoh_core`].
//!
//! The `flagcoh` binary is a thin clap front end over [`run::run_job`].

pub mod error;
pub mod job;
pub mod report;
pub mod run;
pub mod sweep;

pub use error::CliError;
pub use job::{Command, JobSpec, OutputFormat, Suite, WFilter};
pub use run::{run_job, Outcome};
