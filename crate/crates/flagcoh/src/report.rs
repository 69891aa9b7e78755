//! Serializable report rows and the three output formats.
//!
//! JSON is one object per line. CSV is a flat projection of the same rows,
//! with weights written as `1,-1` strings. Pretty output is for people.

use std::collections::BTreeMap;
use std::io::Write;

use flagcoh_core::charring::VirtualRep;
use flagcoh_core::kkflag::CheckRecord;
use flagcoh_core::Weight;
use serde::Serialize;

use crate::error::CliError;
use crate::job::OutputFormat;
use crate::sweep::CliffordDimension;

fn coords(w: &Weight) -> Vec<i64> {
    w.coords().to_vec()
}

fn joined(w: &Weight) -> String {
    w.coords()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON form of a [`CheckRecord`]; field names match the record.
#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub type_letter: char,
    pub rank: usize,
    pub w_word: String,
    pub mu: Option<Vec<i64>>,
    pub check: &'static str,
    pub pass: bool,
}

impl From<&CheckRecord> for CheckRow {
    fn from(r: &CheckRecord) -> Self {
        CheckRow {
            type_letter: r.type_letter,
            rank: r.rank,
            w_word: r.w_word.clone(),
            mu: r.mu.as_ref().map(coords),
            check: r.check.as_str(),
            pass: r.pass,
        }
    }
}

#[derive(Debug, Serialize)]
struct CheckCsvRow<'a> {
    type_letter: char,
    rank: usize,
    w_word: &'a str,
    mu: String,
    check: &'static str,
    pass: bool,
}

/// Pass/fail tallies by check name, in a fixed order.
pub fn tally(records: &[CheckRecord]) -> BTreeMap<&'static str, (usize, usize)> {
    let mut out = BTreeMap::new();
    for r in records {
        let slot = out.entry(r.check.as_str()).or_insert((0, 0));
        if r.pass {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    out
}

pub fn write_checks(
    out: &mut dyn Write,
    format: OutputFormat,
    title: &str,
    records: &[CheckRecord],
) -> Result<(), CliError> {
    match format {
        OutputFormat::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, &CheckRow::from(r))?;
                writeln!(out)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in records {
                w.serialize(CheckCsvRow {
                    type_letter: r.type_letter,
                    rank: r.rank,
                    w_word: &r.w_word,
                    mu: r.mu.as_ref().map(joined).unwrap_or_default(),
                    check: r.check.as_str(),
                    pass: r.pass,
                })?;
            }
            if records.is_empty() {
                w.write_record(["type_letter", "rank", "w_word", "mu", "check", "pass"])?;
            }
            w.flush()?;
        }
        OutputFormat::Pretty => {
            writeln!(out, "{title}")?;
            for r in records.iter().filter(|r| !r.pass) {
                let mu =
                    r.mu.as_ref()
                        .map(|m| format!(" mu={m}"))
                        .unwrap_or_default();
                writeln!(out, "  FAIL {} w={}{mu}", r.check.as_str(), r.w_word)?;
            }
            for (name, (pass, fail)) in tally(records) {
                writeln!(
                    out,
                    "  {name}: {} checks, {pass} pass, {fail} fail",
                    pass + fail
                )?;
            }
            if records.is_empty() {
                writeln!(out, "  no checks selected")?;
            }
        }
    }
    Ok(())
}

/// One row of `verify clifford` output.
#[derive(Debug, Serialize)]
pub struct CliffordRow {
    /// `intertwiner`, `adjudication` or `hodge`.
    pub kind: &'static str,
    pub dim: usize,
    /// Convention name, identity name, or the negating conventions joined by `+`.
    pub name: String,
    pub samples: Option<usize>,
    pub failures: Option<usize>,
    pub negates: Option<bool>,
    pub commutes: Option<bool>,
    pub pass: bool,
}

pub fn clifford_rows(dims: &[CliffordDimension]) -> Vec<CliffordRow> {
    let mut rows = Vec::new();
    for d in dims {
        let dim = d.intertwiner.dim;
        for o in &d.intertwiner.outcomes {
            rows.push(CliffordRow {
                kind: "intertwiner",
                dim,
                name: o.convention.name().into(),
                samples: Some((d.intertwiner.trials + dim) << dim),
                failures: None,
                negates: Some(o.negates),
                commutes: Some(o.commutes),
                pass: true,
            });
        }
        let negating: Vec<&str> = d.negating().iter().map(|c| c.name()).collect();
        rows.push(CliffordRow {
            kind: "adjudication",
            dim,
            name: if negating.is_empty() {
                "none".into()
            } else {
                negating.join("+")
            },
            samples: None,
            failures: None,
            negates: None,
            commutes: None,
            pass: d.adjudicated(),
        });
        for h in &d.hodge {
            rows.push(CliffordRow {
                kind: "hodge",
                dim,
                name: h.identity.as_str().into(),
                samples: Some(h.samples),
                failures: Some(h.failures),
                negates: None,
                commutes: None,
                pass: h.pass(),
            });
        }
    }
    rows
}

pub fn write_clifford(
    out: &mut dyn Write,
    format: OutputFormat,
    title: &str,
    dims: &[CliffordDimension],
) -> Result<(), CliError> {
    let rows = clifford_rows(dims);
    match format {
        OutputFormat::Json => write_json_lines(out, &rows)?,
        OutputFormat::Csv => write_csv(out, &rows)?,
        OutputFormat::Pretty => {
            writeln!(out, "{title}")?;
            for d in dims {
                let outcome = |c: flagcoh_core::clifford::Convention| {
                    let o = d
                        .intertwiner
                        .outcomes
                        .iter()
                        .find(|o| o.convention == c)
                        .expect("both conventions");
                    match (o.negates, o.commutes) {
                        (true, _) => "beta c beta^-1 = -c",
                        (false, true) => "beta c beta^-1 = +c",
                        (false, false) => "neither",
                    }
                };
                writeln!(
                    out,
                    "  l={}: plus: {}; minus: {}; {}",
                    d.intertwiner.dim,
                    outcome(flagcoh_core::clifford::Convention::Plus),
                    outcome(flagcoh_core::clifford::Convention::Minus),
                    if d.adjudicated() {
                        "exactly one negating convention"
                    } else {
                        "ADJUDICATION FAILED"
                    }
                )?;
                for h in &d.hodge {
                    writeln!(
                        out,
                        "    {}: {} samples, {} fail",
                        h.identity.as_str(),
                        h.samples,
                        h.failures
                    )?;
                }
            }
            let pass = rows.iter().filter(|r| r.pass).count();
            writeln!(
                out,
                "  clifford: {} checks, {pass} pass, {} fail",
                rows.len(),
                rows.len() - pass
            )?;
        }
    }
    Ok(())
}

/// Structured-text intertwiner report: convention -> holds/fails, per dimension.
#[derive(Debug, Serialize)]
pub struct IntertwinerFile {
    pub seed: u64,
    pub trials: usize,
    pub dimension: Vec<IntertwinerEntry>,
}

#[derive(Debug, Serialize)]
pub struct IntertwinerEntry {
    pub dim: usize,
    pub plus: &'static str,
    pub minus: &'static str,
    pub negating: Vec<&'static str>,
}

pub fn intertwiner_file(
    dims: &[CliffordDimension],
    trials: usize,
    seed: u64,
) -> Result<String, CliError> {
    let holds = |b: bool| if b { "holds" } else { "fails" };
    let file = IntertwinerFile {
        seed,
        trials,
        dimension: dims
            .iter()
            .map(|d| IntertwinerEntry {
                dim: d.intertwiner.dim,
                plus: holds(d.intertwiner.outcomes[0].negates),
                minus: holds(d.intertwiner.outcomes[1].negates),
                negating: d.negating().iter().map(|c| c.name()).collect(),
            })
            .collect(),
    };
    toml::to_string(&file).map_err(|e| CliError::Internal(format!("toml: {e}")))
}

pub fn write_json_lines<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    for r in rows {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(&mut *out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct RootRow {
    pub index: usize,
    pub root: Vec<i64>,
    pub coefficients: Vec<i64>,
    pub height: i64,
}

#[derive(Debug, Serialize)]
pub struct RootsReport {
    pub group: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub rho: Vec<i64>,
    pub positive_roots: Vec<RootRow>,
}

#[derive(Debug, Serialize)]
pub struct WeylRow {
    pub word: String,
    pub length: usize,
    pub inversion_set: Vec<Vec<i64>>,
    pub sigma: Vec<i64>,
}

#[derive(Debug, Serialize)]
struct WeylCsvRow<'a> {
    word: &'a str,
    length: usize,
    inversion_set: String,
    sigma: String,
}

pub fn write_weyl(
    out: &mut dyn Write,
    format: OutputFormat,
    title: &str,
    rows: &[WeylRow],
) -> Result<(), CliError> {
    let paren = |v: &[i64]| {
        format!(
            "({})",
            v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        )
    };
    match format {
        OutputFormat::Json => write_json_lines(out, rows)?,
        OutputFormat::Csv => {
            let flat: Vec<WeylCsvRow> = rows
                .iter()
                .map(|r| WeylCsvRow {
                    word: &r.word,
                    length: r.length,
                    inversion_set: r
                        .inversion_set
                        .iter()
                        .map(|a| paren(a))
                        .collect::<Vec<_>>()
                        .join(";"),
                    sigma: paren(&r.sigma),
                })
                .collect();
            write_csv(out, &flat)?;
        }
        OutputFormat::Pretty => {
            writeln!(out, "{title}: {} elements", rows.len())?;
            for r in rows {
                let xi: Vec<String> = r.inversion_set.iter().map(|a| paren(a)).collect();
                writeln!(
                    out,
                    "  {:<16} l={:<3} sigma={:<16} Xi={{{}}}",
                    r.word,
                    r.length,
                    paren(&r.sigma),
                    xi.join(", ")
                )?;
            }
        }
    }
    Ok(())
}

pub fn write_roots(
    out: &mut dyn Write,
    format: OutputFormat,
    r: &RootsReport,
) -> Result<(), CliError> {
    let paren = |v: &[i64]| {
        format!(
            "({})",
            v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        )
    };
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            #[derive(Serialize)]
            struct Flat {
                index: usize,
                root: String,
                coefficients: String,
                height: i64,
            }
            let rows: Vec<Flat> = r
                .positive_roots
                .iter()
                .map(|p| Flat {
                    index: p.index,
                    root: paren(&p.root),
                    coefficients: paren(&p.coefficients),
                    height: p.height,
                })
                .collect();
            write_csv(out, &rows)?;
        }
        OutputFormat::Pretty => {
            writeln!(out, "{} (rank {})", r.group, r.rank)?;
            writeln!(out, "  Cartan matrix:")?;
            for row in &r.cartan_matrix {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                writeln!(out, "   {}", cells.join(""))?;
            }
            writeln!(out, "  symmetrizer: {}", paren(&r.symmetrizer))?;
            writeln!(out, "  rho: {}", paren(&r.rho))?;
            writeln!(out, "  positive roots ({}):", r.positive_roots.len())?;
            for p in &r.positive_roots {
                writeln!(
                    out,
                    "    {:>3}  {:<20} = {:<20} height {}",
                    p.index,
                    paren(&p.root),
                    paren(&p.coefficients),
                    p.height
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct BbwReport {
    pub group: String,
    pub mu: Vec<i64>,
    pub vanishes: bool,
    pub degree: Option<usize>,
    pub highest_weight: Option<Vec<i64>>,
    pub dimension: Option<u128>,
    pub w_word: Option<String>,
}

#[derive(Debug, Serialize)]
struct BbwCsv<'a> {
    group: &'a str,
    mu: String,
    vanishes: bool,
    degree: Option<usize>,
    highest_weight: String,
    dimension: String,
    w_word: Option<&'a str>,
}

pub fn write_bbw(out: &mut dyn Write, format: OutputFormat, r: &BbwReport) -> Result<(), CliError> {
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => write_csv(
            out,
            &[BbwCsv {
                group: &r.group,
                mu: join(&r.mu),
                vanishes: r.vanishes,
                degree: r.degree,
                highest_weight: r.highest_weight.as_deref().map(join).unwrap_or_default(),
                dimension: r.dimension.map(|d| d.to_string()).unwrap_or_default(),
                w_word: r.w_word.as_deref(),
            }],
        )?,
        OutputFormat::Pretty => {
            if r.vanishes {
                writeln!(out, "{} mu=({}): VANISHES", r.group, join(&r.mu))?;
            } else {
                writeln!(
                    out,
                    "{} mu=({}): degree {}, highest weight ({}), dim {} (w = {})",
                    r.group,
                    join(&r.mu),
                    r.degree.unwrap_or_default(),
                    r.highest_weight.as_deref().map(join).unwrap_or_default(),
                    r.dimension.unwrap_or_default(),
                    r.w_word.as_deref().unwrap_or("id"),
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct IrrTerm {
    pub highest_weight: Vec<i64>,
    pub multiplicity: i64,
}

pub fn irr_terms(v: &VirtualRep) -> Vec<IrrTerm> {
    v.terms()
        .map(|(w, m)| IrrTerm {
            highest_weight: coords(w),
            multiplicity: m,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct IndexReport {
    pub group: String,
    pub mu: Vec<i64>,
    pub bbw_route: Vec<IrrTerm>,
    pub character_route: Vec<IrrTerm>,
    pub agree: bool,
    pub dimension: i128,
    pub display: String,
}

#[derive(Debug, Serialize)]
struct IndexCsv<'a> {
    group: &'a str,
    mu: String,
    route: &'static str,
    highest_weight: String,
    multiplicity: i64,
}

pub fn write_index(
    out: &mut dyn Write,
    format: OutputFormat,
    r: &IndexReport,
) -> Result<(), CliError> {
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            for (route, terms) in [("bbw", &r.bbw_route), ("character", &r.character_route)] {
                for t in terms {
                    rows.push(IndexCsv {
                        group: &r.group,
                        mu: join(&r.mu),
                        route,
                        highest_weight: join(&t.highest_weight),
                        multiplicity: t.multiplicity,
                    });
                }
            }
            let mut w = csv::Writer::from_writer(&mut *out);
            if rows.is_empty() {
                w.write_record(["group", "mu", "route", "highest_weight", "multiplicity"])?;
            }
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        OutputFormat::Pretty => {
            writeln!(
                out,
                "{} chi(G/B, E_({})) = {}",
                r.group,
                join(&r.mu),
                r.display
            )?;
            writeln!(
                out,
                "  routes agree: {}; virtual dimension {}",
                if r.agree { "yes" } else { "NO" },
                r.dimension
            )?;
        }
    }
    Ok(())
}
