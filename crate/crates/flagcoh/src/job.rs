//! Job descriptions, from command-line flags or a TOML jobs file.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use flagcoh_core::{RootSystem, Weight, DEFAULT_SIZE_GATE};
use serde::Deserialize;

use crate::error::CliError;

/// Environment variable overriding the Weyl-group size gate.
pub const GATE_ENV: &str = "FLAGCOH_WEYL_GATE";

/// Largest number of weights a sweep box may contain.
pub const MAX_BOX_POINTS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Pretty,
    Json,
    Csv,
}

/// Verification sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Dot-orbit invariance of the index, both index routes.
    Thm1,
    /// Product formula for the Thom classes, with the Clifford-module certificate.
    Thm2,
    /// Index invariance under every BBW morphism.
    Lemma,
    /// Hodge-star identities and the intertwiner sign adjudication.
    Clifford,
    /// `rho - w(rho)` is the sum of the inversion set, of size `l(w)`.
    Sigma,
    /// Composition law of BBW morphisms over all pairs.
    Law,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Lemma => "lemma",
            Suite::Clifford => "clifford",
            Suite::Sigma => "sigma",
            Suite::Law => "law",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Roots,
    Weyl,
    Bbw { weight: Weight },
    Index { weight: Weight },
    Verify { suite: Suite },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum WFilter {
    #[default]
    All,
    Words(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordParams {
    pub max_dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub report_file: Option<PathBuf>,
}

impl Default for CliffordParams {
    fn default() -> Self {
        CliffordParams {
            max_dim: 6,
            trials: 100,
            seed: 0,
            report_file: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    /// Group name such as `A2`; unused by the Clifford suite.
    pub group: Option<String>,
    pub command: Command,
    /// Sweeps run over weights with every coordinate in `[-weight_box, weight_box]`.
    pub weight_box: i64,
    pub w_filter: WFilter,
    pub output: OutputFormat,
    pub clifford: CliffordParams,
}

impl JobSpec {
    pub fn new(group: Option<String>, command: Command) -> Self {
        JobSpec {
            group,
            command,
            weight_box: 4,
            w_filter: WFilter::All,
            output: OutputFormat::Pretty,
            clifford: CliffordParams::default(),
        }
    }

    pub fn root_system(&self) -> Result<RootSystem, CliError> {
        let name = self
            .group
            .as_deref()
            .ok_or_else(|| CliError::Usage("this command needs a group such as A2".into()))?;
        Ok(RootSystem::from_name(name)?)
    }

    /// Rejects jobs whose sweep box exceeds [`MAX_BOX_POINTS`].
    pub fn check_box(&self, rank: usize) -> Result<(), CliError> {
        if self.weight_box < 0 {
            return Err(CliError::Usage(format!(
                "box bound {} is negative",
                self.weight_box
            )));
        }
        let side = 2 * self.weight_box as u64 + 1;
        let points = side.checked_pow(rank as u32).unwrap_or(u64::MAX);
        if points > MAX_BOX_POINTS {
            return Err(CliError::Gate(format!(
                "weight box of {points} points exceeds the box gate {MAX_BOX_POINTS}"
            )));
        }
        Ok(())
    }

    /// One-line description used in pretty headers.
    pub fn describe(&self) -> String {
        let group = self.group.as_deref().unwrap_or("-");
        match &self.command {
            Command::Roots => format!("roots {group}"),
            Command::Weyl => format!("weyl {group}"),
            Command::Bbw { weight } => format!("bbw {group} --weight {}", weight_arg(weight)),
            Command::Index { weight } => format!("index {group} --weight {}", weight_arg(weight)),
            Command::Verify {
                suite: Suite::Clifford,
            } => format!("verify clifford --max-dim {}", self.clifford.max_dim),
            Command::Verify { suite } => {
                format!("verify {} {group} --box {}", suite.name(), self.weight_box)
            }
        }
    }
}

fn weight_arg(w: &Weight) -> String {
    w.coords()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `1,-1` into a weight.
pub fn parse_weight(s: &str) -> Result<Weight, String> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    coords
        .map(Weight::from)
        .map_err(|e| format!("bad weight {s:?}: {e} (expected comma-separated integers)"))
}

/// Parses `1,2` (or `s1s2`, or `id`) into a 1-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>, String> {
    let t = s.trim();
    if t.is_empty() || t == "id" || t == "e" {
        return Ok(Vec::new());
    }
    let parts: Vec<&str> = if t.starts_with('s') {
        t.split('s').filter(|p| !p.is_empty()).collect()
    } else {
        t.split(',').collect()
    };
    parts
        .iter()
        .map(|p| match p.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("bad word {s:?}: letters are 1-based indices")),
            Ok(i) => Ok(i),
        })
        .collect()
}

/// Size gate from [`GATE_ENV`], falling back to the library default.
pub fn size_gate_from_env() -> Result<u128, CliError> {
    match std::env::var(GATE_ENV) {
        Ok(v) => v.trim().parse::<u128>().map_err(|_| {
            CliError::Usage(format!("{GATE_ENV}={v:?} is not a non-negative integer"))
        }),
        Err(_) => Ok(DEFAULT_SIZE_GATE),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    command: String,
    group: Option<String>,
    suite: Option<Suite>,
    weight: Option<String>,
    #[serde(rename = "box")]
    weight_box: Option<i64>,
    words: Option<Vec<String>>,
    output: Option<OutputFormat>,
    max_dim: Option<usize>,
    trials: Option<usize>,
    seed: Option<u64>,
    report_file: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobsFile {
    #[serde(default)]
    job: Vec<RawJob>,
}

impl RawJob {
    fn into_spec(self, default_output: OutputFormat) -> Result<JobSpec, CliError> {
        let weight = || -> Result<Weight, CliError> {
            let w = self
                .weight
                .as_deref()
                .ok_or_else(|| CliError::Usage(format!("job `{}` needs a weight", self.command)))?;
            parse_weight(w).map_err(CliError::Usage)
        };
        let command = match self.command.as_str() {
            "roots" => Command::Roots,
            "weyl" => Command::Weyl,
            "bbw" => Command::Bbw { weight: weight()? },
            "index" => Command::Index { weight: weight()? },
            "verify" => Command::Verify {
                suite: self
                    .suite
                    .ok_or_else(|| CliError::Usage("verify job needs a suite".into()))?,
            },
            other => return Err(CliError::Usage(format!("unknown job command {other:?}"))),
        };
        let mut spec = JobSpec::new(self.group, command);
        if let Some(b) = self.weight_box {
            spec.weight_box = b;
        }
        if let Some(words) = self.words {
            let parsed: Result<Vec<_>, _> = words.iter().map(|w| parse_word(w)).collect();
            spec.w_filter = WFilter::Words(parsed.map_err(CliError::Usage)?);
        }
        spec.output = self.output.unwrap_or(default_output);
        let defaults = CliffordParams::default();
        spec.clifford = CliffordParams {
            max_dim: self.max_dim.unwrap_or(defaults.max_dim),
            trials: self.trials.unwrap_or(defaults.trials),
            seed: self.seed.unwrap_or(defaults.seed),
            report_file: self.report_file,
        };
        Ok(spec)
    }
}

/// Parses a jobs file: a list of `[[job]]` tables.
pub fn parse_jobs(text: &str, default_output: OutputFormat) -> Result<Vec<JobSpec>, CliError> {
    let file: JobsFile =
        toml::from_str(text).map_err(|e| CliError::Usage(format!("jobs file: {e}")))?;
    file.job
        .into_iter()
        .map(|j| j.into_spec(default_output))
        .collect()
}

pub fn read_jobs(path: &Path, default_output: OutputFormat) -> Result<Vec<JobSpec>, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_jobs(&text, default_output)
}
