//! Verification sweeps over a Weyl group and a box of weights.
//!
//! Work is spread over rayon's pool; each worker owns its own
//! [`CharacterRing`] (the ring caches are not thread-safe). Records are sorted
//! before they are returned, so the thread count never shows in the output.

use std::collections::BTreeSet;

use flagcoh_core::charring::CharacterRing;
use flagcoh_core::clifford::{
    hodge_suite, verify_intertwiner, Convention, HodgeOutcome, IntertwinerReport,
};
use flagcoh_core::kkflag::{
    verify_dot_orbit_index, verify_index_invariance_at, verify_operator_law,
    verify_product_formula, verify_sigma_identity, weight_box, CheckName, CheckRecord,
};
use flagcoh_core::{RootSystem, Weight, WeylElement, WeylGroup};
use rayon::prelude::*;

use crate::error::CliError;
use crate::job::{Suite, WFilter};

/// The elements selected by `filter`, in canonical order.
pub fn select_elements(
    group: &WeylGroup<'_>,
    filter: &WFilter,
) -> Result<Vec<WeylElement>, CliError> {
    match filter {
        WFilter::All => Ok(group.elements().to_vec()),
        WFilter::Words(words) => {
            let mut set = BTreeSet::new();
            for word in words {
                set.insert(group.find_word(word)?);
            }
            Ok(set.into_iter().collect())
        }
    }
}

fn record(
    system: &RootSystem,
    w_word: String,
    mu: Option<Weight>,
    check: CheckName,
    pass: bool,
) -> CheckRecord {
    CheckRecord {
        type_letter: system.cartan_type().letter(),
        rank: system.rank(),
        w_word,
        mu,
        check,
        pass,
    }
}

/// Runs one of the group-based suites. `Suite::Clifford` is not group-based
/// and is rejected here; see [`clifford_sweep`].
pub fn run_suite(
    group: &WeylGroup<'_>,
    suite: Suite,
    bound: i64,
    filter: &WFilter,
) -> Result<Vec<CheckRecord>, CliError> {
    let system = group.system();
    let elements = select_elements(group, filter)?;
    let weights: Vec<Weight> = weight_box(system.rank(), bound).collect();

    let mut records: Vec<CheckRecord> = match suite {
        Suite::Thm1 | Suite::Lemma => {
            let check = if suite == Suite::Thm1 {
                CheckName::DotOrbitIndex
            } else {
                CheckName::IndexInvariance
            };
            let chunks: Vec<Result<Vec<CheckRecord>, CliError>> = weights
                .par_iter()
                .map_init(
                    || CharacterRing::new(group),
                    |ring, mu| {
                        let mut out = Vec::with_capacity(elements.len());
                        for w in &elements {
                            let pass = match suite {
                                Suite::Thm1 => verify_dot_orbit_index(ring, mu, w)?,
                                _ => verify_index_invariance_at(ring, w, mu)?,
                            };
                            out.push(record(
                                system,
                                w.word_string(),
                                Some(mu.clone()),
                                check,
                                pass,
                            ));
                        }
                        Ok(out)
                    },
                )
                .collect();
            flatten(chunks)?
        }
        Suite::Thm2 => {
            let chunks: Vec<Result<Vec<CheckRecord>, CliError>> = elements
                .par_iter()
                .map(|w| {
                    weights
                        .iter()
                        .map(|mu| {
                            let pass = verify_product_formula(system, mu, w)?;
                            Ok(record(
                                system,
                                w.word_string(),
                                Some(mu.clone()),
                                CheckName::ProductFormula,
                                pass,
                            ))
                        })
                        .collect()
                })
                .collect();
            flatten(chunks)?
        }
        Suite::Sigma => elements
            .par_iter()
            .map(|w| {
                record(
                    system,
                    w.word_string(),
                    None,
                    CheckName::SigmaIdentity,
                    verify_sigma_identity(system, w),
                )
            })
            .collect(),
        Suite::Law => {
            let pairs: Vec<(&WeylElement, &WeylElement)> = elements
                .iter()
                .flat_map(|a| elements.iter().map(move |b| (a, b)))
                .collect();
            let chunks: Vec<Result<Vec<CheckRecord>, CliError>> = pairs
                .par_iter()
                .map(|(a, b)| {
                    let label = format!("{}|{}", a.word_string(), b.word_string());
                    weights
                        .iter()
                        .map(|mu| {
                            let pass = verify_operator_law(system, a, b, mu)?;
                            Ok(record(
                                system,
                                label.clone(),
                                Some(mu.clone()),
                                CheckName::OperatorLaw,
                                pass,
                            ))
                        })
                        .collect()
                })
                .collect();
            flatten(chunks)?
        }
        Suite::Clifford => {
            return Err(CliError::Usage(
                "the clifford suite does not take a group".into(),
            ));
        }
    };
    records.par_sort();
    Ok(records)
}

fn flatten(chunks: Vec<Result<Vec<CheckRecord>, CliError>>) -> Result<Vec<CheckRecord>, CliError> {
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// Intertwiner measurements and Hodge identities for one exterior-algebra dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordDimension {
    pub intertwiner: IntertwinerReport,
    pub hodge: Vec<HodgeOutcome>,
}

impl CliffordDimension {
    /// Exactly one convention satisfies `beta c beta^{-1} = -c`.
    pub fn adjudicated(&self) -> bool {
        self.intertwiner.negating_conventions().len() == 1
    }

    pub fn negating(&self) -> Vec<Convention> {
        self.intertwiner.negating_conventions()
    }

    pub fn pass(&self) -> bool {
        self.adjudicated() && self.hodge.iter().all(HodgeOutcome::pass)
    }
}

/// Dimensions `1..=max_dim`. The zero-dimensional algebra is skipped: there
/// `c(x) = 0` and both conventions hold vacuously.
pub fn clifford_sweep(
    max_dim: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CliffordDimension>, CliError> {
    let dims: Vec<usize> = (1..=max_dim).collect();
    let results: Vec<Result<CliffordDimension, CliError>> = dims
        .par_iter()
        .map(|&dim| {
            let (intertwiner, hodge) = rayon::join(
                || verify_intertwiner(dim, trials, seed),
                || hodge_suite(dim, trials, seed),
            );
            Ok(CliffordDimension {
                intertwiner: intertwiner?,
                hodge: hodge?,
            })
        })
        .collect();
    results.into_iter().collect()
}
