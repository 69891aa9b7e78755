//! Executing a [`JobSpec`].

use std::io::Write;

use flagcoh_core::charring::{cohomology, euler_characteristic_bbw, CharacterRing, Cohomology};
use flagcoh_core::{RootSystem, WeylGroup};

use crate::error::CliError;
use crate::job::{Command, JobSpec, Suite};
use crate::report::{
    intertwiner_file, irr_terms, write_bbw, write_checks, write_clifford, write_index, write_roots,
    write_weyl, BbwReport, IndexReport, RootRow, RootsReport, WeylRow,
};
use crate::sweep::{clifford_sweep, run_suite, select_elements};

/// Check counts of a finished job; `failed > 0` maps to exit status 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checks: usize,
    pub failed: usize,
}

impl Outcome {
    pub fn merge(self, other: Outcome) -> Outcome {
        Outcome {
            checks: self.checks + other.checks,
            failed: self.failed + other.failed,
        }
    }
}

fn group<'a>(system: &'a RootSystem, gate: u128) -> Result<WeylGroup<'a>, CliError> {
    Ok(WeylGroup::new(system, gate)?)
}

/// Runs one job, writing its report to `out`. `gate` bounds the Weyl group order.
pub fn run_job(job: &JobSpec, gate: u128, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let format = job.output;
    if let Command::Verify {
        suite: Suite::Clifford,
    } = job.command
    {
        let p = &job.clifford;
        let dims = clifford_sweep(p.max_dim, p.trials, p.seed)?;
        write_clifford(out, format, &job.describe(), &dims)?;
        if let Some(path) = &p.report_file {
            std::fs::write(path, intertwiner_file(&dims, p.trials, p.seed)?)?;
        }
        let rows = crate::report::clifford_rows(&dims);
        return Ok(Outcome {
            checks: rows.len(),
            failed: rows.iter().filter(|r| !r.pass).count(),
        });
    }

    let system = job.root_system()?;
    let name = system.name();
    match &job.command {
        Command::Roots => {
            let report = RootsReport {
                group: name,
                rank: system.rank(),
                cartan_matrix: system.datum.matrix.clone(),
                symmetrizer: system.datum.symmetrizer.clone(),
                rho: system.rho.coords().to_vec(),
                positive_roots: system
                    .positive_roots
                    .iter()
                    .zip(&system.positive_root_coefficients)
                    .enumerate()
                    .map(|(i, (r, c))| RootRow {
                        index: i + 1,
                        root: r.coords().to_vec(),
                        coefficients: c.clone(),
                        height: c.iter().sum(),
                    })
                    .collect(),
            };
            write_roots(out, format, &report)?;
            Ok(Outcome::default())
        }
        Command::Weyl => {
            let g = group(&system, gate)?;
            let rows: Vec<WeylRow> = select_elements(&g, &job.w_filter)?
                .iter()
                .map(|w| WeylRow {
                    word: w.word_string(),
                    length: w.length(),
                    inversion_set: w
                        .inversion_set(&system)
                        .iter()
                        .map(|a| a.coords().to_vec())
                        .collect(),
                    sigma: w.sigma().coords().to_vec(),
                })
                .collect();
            write_weyl(out, format, &format!("W({name})"), &rows)?;
            Ok(Outcome::default())
        }
        Command::Bbw { weight } => {
            let report = match cohomology(&system, weight)? {
                Cohomology::Vanishes => BbwReport {
                    group: name,
                    mu: weight.coords().to_vec(),
                    vanishes: true,
                    degree: None,
                    highest_weight: None,
                    dimension: None,
                    w_word: None,
                },
                Cohomology::Concentrated {
                    degree,
                    highest_weight,
                    dimension,
                    w,
                } => BbwReport {
                    group: name,
                    mu: weight.coords().to_vec(),
                    vanishes: false,
                    degree: Some(degree),
                    highest_weight: Some(highest_weight.coords().to_vec()),
                    dimension: Some(dimension),
                    w_word: Some(w.word_string()),
                },
            };
            write_bbw(out, format, &report)?;
            Ok(Outcome::default())
        }
        Command::Index { weight } => {
            let g = group(&system, gate)?;
            let ring = CharacterRing::new(&g);
            let a = euler_characteristic_bbw(&system, weight)?;
            let b = ring.euler_characteristic_character(weight)?;
            let agree = a == b;
            let report = IndexReport {
                group: name,
                mu: weight.coords().to_vec(),
                bbw_route: irr_terms(&a),
                character_route: irr_terms(&b),
                agree,
                dimension: a.dimension(&system)?,
                display: a.to_string(),
            };
            write_index(out, format, &report)?;
            Ok(Outcome {
                checks: 1,
                failed: usize::from(!agree),
            })
        }
        Command::Verify { suite } => {
            job.check_box(system.rank())?;
            let g = group(&system, gate)?;
            let records = run_suite(&g, *suite, job.weight_box, &job.w_filter)?;
            write_checks(out, format, &job.describe(), &records)?;
            Ok(Outcome {
                checks: records.len(),
                failed: records.iter().filter(|r| !r.pass).count(),
            })
        }
    }
}
