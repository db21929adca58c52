//! Command implementations. Each returns the full stdout text and exit code so
//! that rendering can be tested without spawning a process.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use braidfloor::bounds::{
    corollary_rhs, corollary_weak_rhs, floor_genus_lower, integer, knot_chi, render_rational,
    theorem_rhs,
};
use braidfloor::invariants::{
    alexander_genus_lower, alexander_polynomial, BoundSource, GenusBounds,
};
use braidfloor::report::{verify_braid_with, VerificationRecord, VerificationReport, CHECK_NAMES};
use braidfloor::sample::{random_band_word, random_word, run_campaign};
use braidfloor::{catalogue, BraidWord, Error, HandleReducer, OrderResult};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Cli, Command, Format};

pub struct Report {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Certification { .. } => 1,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn ok(stdout: String) -> CliResult<Report> {
    Ok(Report { stdout, code: 0 })
}

fn parse(text: &str) -> CliResult<BraidWord> {
    text.parse().map_err(|e: Error| CliError {
        message: format!("braid {text:?}: {e}"),
        code: 2,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Writes `rows` as CSV. With an explicit `header` it is written even when
/// there are no rows; otherwise the header comes from the row type.
fn csv_rows<T: Serialize>(rows: &[T], header: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(header.is_empty())
        .from_writer(Vec::new());
    if !header.is_empty() {
        w.write_record(header).expect("writing to memory");
    }
    for r in rows {
        w.serialize(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    let reducer = HandleReducer::new(cli.step_limit);
    match &cli.command {
        Command::Compare { a, b } => compare(cli.format, &reducer, &parse(a)?, &parse(b)?),
        Command::Reduce { braid } => reduce(cli.format, &reducer, &parse(braid)?),
        Command::Floor { braid } => floor(cli.format, &reducer, &parse(braid)?),
        Command::Alexander { braid } => alexander(cli.format, &parse(braid)?),
        Command::Genus { braid } => genus(cli.format, &reducer, &parse(braid)?),
        Command::Verify { braid } => verify(cli.format, &reducer, &parse(braid)?),
        Command::Sample => sample(cli, &reducer),
        Command::Catalogue => catalogue_table(cli.format, &reducer),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CompareOutput {
    pub a: String,
    pub b: String,
    pub result: String,
}

fn compare(
    format: Format,
    reducer: &HandleReducer,
    a: &BraidWord,
    b: &BraidWord,
) -> CliResult<Report> {
    let result = reducer.compare(a, b)?;
    let out = CompareOutput {
        a: a.to_string(),
        b: b.to_string(),
        result: result.as_str().to_string(),
    };
    ok(match format {
        Format::Text => {
            let (x, y) = (a.to_sigma_string(), b.to_sigma_string());
            match result {
                OrderResult::Less => format!("less ({x} <_D {y})\n"),
                OrderResult::Equal => format!("equal ({x} = {y})\n"),
                OrderResult::Greater => format!("greater ({y} <_D {x})\n"),
            }
        }
        Format::Json => json(&out),
        Format::Csv => csv_rows(&[out], &[]),
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReduceOutput {
    pub input: String,
    pub reduced: String,
    pub class: String,
    pub steps: u64,
}

fn reduce(format: Format, reducer: &HandleReducer, w: &BraidWord) -> CliResult<Report> {
    let r = reducer.reduce(w)?;
    let class = braidfloor::sigma_classify(&r.word)?;
    let out = ReduceOutput {
        input: w.to_string(),
        reduced: r.word.to_string(),
        class: class.to_string(),
        steps: r.steps,
    };
    ok(match format {
        Format::Text => format!(
            "reduced = {}\nclass = {}\nsteps = {}\n",
            out.reduced, out.class, out.steps
        ),
        Format::Json => json(&out),
        Format::Csv => csv_rows(&[out], &[]),
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FloorOutput {
    pub braid: String,
    pub floor: u64,
}

fn floor(format: Format, reducer: &HandleReducer, w: &BraidWord) -> CliResult<Report> {
    let out = FloorOutput {
        braid: w.to_string(),
        floor: reducer.floor(w)?.floor as u64,
    };
    ok(match format {
        Format::Text => format!("floor = {}\n", out.floor),
        Format::Json => json(&out),
        Format::Csv => csv_rows(&[out], &[]),
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlexanderOutput {
    pub braid: String,
    pub alexander: String,
    /// Coefficients from degree 0 upward.
    pub coefficients: Vec<String>,
}

fn alexander(format: Format, w: &BraidWord) -> CliResult<Report> {
    let p = alexander_polynomial(w)?;
    let high = p.high_degree().unwrap_or(0);
    let out = AlexanderOutput {
        braid: w.to_string(),
        alexander: p.to_string(),
        coefficients: (0..=high).map(|k| p.coeff(k).to_string()).collect(),
    };
    ok(match format {
        Format::Text => format!("{}\n", out.alexander),
        Format::Json => json(&out),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                braid: &'a str,
                alexander: &'a str,
            }
            csv_rows(
                &[Row {
                    braid: &out.braid,
                    alexander: &out.alexander,
                }],
                &[],
            )
        }
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GenusOutput {
    pub braid: String,
    pub floor: u64,
    pub alexander_lower: u64,
    pub floor_lower: u64,
    pub lower: u64,
    pub upper: u64,
    pub lower_source: String,
    pub upper_source: String,
    pub exact: bool,
}

fn genus_bounds(reducer: &HandleReducer, w: &BraidWord) -> CliResult<(u64, GenusBounds, u64, u64)> {
    let f = reducer.floor(w)?.floor as u64;
    let from_alexander = alexander_genus_lower(w)?;
    let from_floor = floor_genus_lower(w.strands(), f);
    let bounds = GenusBounds::classical(w)?.with_lower(from_floor, BoundSource::DehornoyFloor);
    Ok((f, bounds, from_alexander, from_floor))
}

fn genus(format: Format, reducer: &HandleReducer, w: &BraidWord) -> CliResult<Report> {
    let (f, g, from_alexander, from_floor) = genus_bounds(reducer, w)?;
    let out = GenusOutput {
        braid: w.to_string(),
        floor: f,
        alexander_lower: from_alexander,
        floor_lower: from_floor,
        lower: g.lower,
        upper: g.upper,
        lower_source: g.lower_source.to_string(),
        upper_source: g.upper_source.to_string(),
        exact: g.is_exact(),
    };
    ok(match format {
        Format::Text => {
            let mut s = format!(
                "genus lower = {} ({})\ngenus upper = {} ({})\n",
                out.lower, out.lower_source, out.upper, out.upper_source
            );
            if out.exact {
                writeln!(s, "genus = {}", out.lower).unwrap();
            }
            s
        }
        Format::Json => json(&out),
        Format::Csv => csv_rows(&[out], &[]),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckOutput {
    pub name: String,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyOutput {
    #[serde(flatten)]
    pub record: VerificationRecord,
    pub checks: Vec<CheckOutput>,
}

impl VerifyOutput {
    fn new(r: &VerificationReport) -> Self {
        VerifyOutput {
            record: r.record(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckOutput {
                    name: c.name.to_string(),
                    relation: c.relation.as_str().to_string(),
                    lhs: render_rational(&c.lhs),
                    rhs: render_rational(&c.rhs),
                    holds: c.holds,
                })
                .collect(),
        }
    }
}

/// The fixed CSV layout for verification records.
#[derive(Debug, Serialize, Deserialize)]
pub struct CsvRecord {
    pub braid: String,
    pub n: usize,
    pub len: usize,
    pub floor: u64,
    pub chi_lower: i64,
    pub g_lower: Option<u64>,
    pub g_upper: Option<u64>,
    pub check_theorem_chi: Option<bool>,
    pub check_corollary_upper: Option<bool>,
    pub check_corollary_weak: Option<bool>,
    pub check_prop1_sigma1: Option<bool>,
    pub check_bounds_order: Option<bool>,
    pub check_floor_lower_consistent: Option<bool>,
}

pub const CSV_HEADER: [&str; 13] = [
    "braid",
    "n",
    "len",
    "floor",
    "chi_lower",
    "g_lower",
    "g_upper",
    "check_theorem_chi",
    "check_corollary_upper",
    "check_corollary_weak",
    "check_prop1_sigma1",
    "check_bounds_order",
    "check_floor_lower_consistent",
];

impl From<&VerificationRecord> for CsvRecord {
    fn from(r: &VerificationRecord) -> Self {
        CsvRecord {
            braid: r.braid.clone(),
            n: r.n,
            len: r.length,
            floor: r.floor,
            chi_lower: r.chi_lower,
            g_lower: r.genus_lower,
            g_upper: r.genus_upper,
            check_theorem_chi: r.check_theorem_chi,
            check_corollary_upper: r.check_corollary_upper,
            check_corollary_weak: r.check_corollary_weak,
            check_prop1_sigma1: r.check_prop1_sigma1,
            check_bounds_order: r.check_bounds_order,
            check_floor_lower_consistent: r.check_floor_lower_consistent,
        }
    }
}

fn verify_text(r: &VerificationReport, out: &mut String) {
    writeln!(out, "braid = {}", r.braid).unwrap();
    writeln!(out, "floor = {}", r.floor).unwrap();
    writeln!(out, "chi_lower = {}", r.chi_lower).unwrap();
    if let Some(g) = r.genus {
        writeln!(
            out,
            "genus = [{}, {}] ({}, {})",
            g.lower, g.upper, g.lower_source, g.upper_source
        )
        .unwrap();
    }
    if let Some(a) = &r.alexander {
        writeln!(out, "alexander = {a}").unwrap();
    }
    for c in &r.checks {
        writeln!(out, "{c}").unwrap();
    }
}

fn verify(format: Format, reducer: &HandleReducer, w: &BraidWord) -> CliResult<Report> {
    let r = verify_braid_with(reducer, w)?;
    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            verify_text(&r, &mut s);
            let failed = r.failures().count();
            if failed == 0 {
                writeln!(s, "all {} checks hold", r.checks.len()).unwrap();
            } else {
                writeln!(s, "{failed} of {} checks failed", r.checks.len()).unwrap();
            }
            s
        }
        Format::Json => json(&VerifyOutput::new(&r)),
        Format::Csv => csv_rows(&[CsvRecord::from(&r.record())], &CSV_HEADER),
    };
    Ok(Report {
        stdout,
        code: verdict(r.all_hold()),
    })
}

/// Exit code for a verification outcome.
fn verdict(all_hold: bool) -> u8 {
    if all_hold {
        0
    } else {
        1
    }
}

#[derive(Debug, Default, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Tally {
    pub verified: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Default, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckTally {
    pub applicable: usize,
    pub held: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SampleOutput {
    pub seed: u64,
    pub trials: usize,
    pub max_strands: u64,
    pub max_len: usize,
    pub random_braids: Tally,
    pub band_products: Tally,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<VerifyOutput>,
}

fn sample(cli: &Cli, reducer: &HandleReducer) -> CliResult<Report> {
    let trials = cli.trials;
    let max_n = cli.max_strands as usize;
    let max_len = cli.max_len;
    // samples 0..trials are random words, trials..2*trials band products
    let reports = run_campaign(cli.seed, 2 * trials, |rng, k| {
        let n = rng.gen_range(2..=max_n);
        let w = if k < trials {
            random_word(rng, n, max_len)?
        } else {
            let m = rng.gen_range(0..=max_len);
            random_band_word(rng, n, m)?
        };
        verify_braid_with(reducer, &w)
    });

    let mut out = SampleOutput {
        seed: cli.seed,
        trials,
        max_strands: cli.max_strands,
        max_len,
        random_braids: Tally::default(),
        band_products: Tally::default(),
        checks: CHECK_NAMES
            .iter()
            .map(|n| (n.to_string(), CheckTally::default()))
            .collect(),
        failures: Vec::new(),
    };
    let mut failing = Vec::new();
    for (k, r) in reports.into_iter().enumerate() {
        let r = r?;
        let tally = if k < trials {
            &mut out.random_braids
        } else {
            &mut out.band_products
        };
        tally.verified += 1;
        if r.all_hold() {
            tally.passed += 1;
        } else {
            tally.failed += 1;
        }
        for c in &r.checks {
            let t = out.checks.get_mut(c.name).expect("known check name");
            t.applicable += 1;
            t.held += c.holds as usize;
        }
        if !r.all_hold() {
            out.failures.push(VerifyOutput::new(&r));
            failing.push(r);
        }
    }

    let stdout = match cli.format {
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "seed = {}, trials = {}, max strands = {}, max length = {}",
                out.seed, trials, out.max_strands, max_len
            )
            .unwrap();
            for (name, t) in [
                ("random braids", &out.random_braids),
                ("band products", &out.band_products),
            ] {
                writeln!(
                    s,
                    "{name}: {} verified, {} passed, {} failed",
                    t.verified, t.passed, t.failed
                )
                .unwrap();
            }
            for name in CHECK_NAMES {
                let t = &out.checks[name];
                writeln!(s, "{name}: {} of {} hold", t.held, t.applicable).unwrap();
            }
            for r in &failing {
                writeln!(s).unwrap();
                verify_text(r, &mut s);
            }
            s
        }
        Format::Json => json(&out),
        Format::Csv => {
            let rows: Vec<CsvRecord> = out
                .failures
                .iter()
                .map(|f| CsvRecord::from(&f.record))
                .collect();
            csv_rows(&rows, &CSV_HEADER)
        }
    };
    Ok(Report {
        stdout,
        code: verdict(failing.is_empty()),
    })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatalogueRow {
    pub name: String,
    pub braid: String,
    pub floor: u64,
    pub genus: u64,
    pub g_lower: u64,
    pub g_upper: u64,
    pub certification: String,
    pub theorem_rhs: String,
    pub corollary_rhs: String,
    pub weak_rhs: String,
    pub theorem_holds: bool,
    pub corollary_holds: bool,
    pub weak_holds: bool,
}

fn catalogue_table(format: Format, reducer: &HandleReducer) -> CliResult<Report> {
    let mut rows = Vec::new();
    for e in catalogue()? {
        let (f, g, _, _) = genus_bounds(reducer, &e.braid)?;
        let n = e.braid.strands();
        let fq = integer(f as i64);
        let thm = theorem_rhs(n, knot_chi(e.exact_genus));
        let cor = corollary_rhs(n, e.exact_genus);
        let weak = corollary_weak_rhs(e.exact_genus);
        rows.push(CatalogueRow {
            name: e.name.to_string(),
            braid: e.braid.to_string(),
            floor: f,
            genus: e.exact_genus,
            g_lower: g.lower,
            g_upper: g.upper,
            certification: e.certification.clone(),
            theorem_holds: fq < thm,
            corollary_holds: fq < cor,
            weak_holds: fq < weak,
            theorem_rhs: render_rational(&thm),
            corollary_rhs: render_rational(&cor),
            weak_rhs: render_rational(&weak),
        });
    }
    let all_hold = rows
        .iter()
        .all(|r| r.theorem_holds && r.corollary_holds && r.weak_holds);
    let stdout = match format {
        Format::Text => {
            let mark = |b: bool| if b { "ok" } else { "FAIL" };
            let mut s = format!(
                "{:<14}{:<26}{:<7}{:<7}{:<9}{:<16}{:<16}{}\n",
                "name", "braid", "floor", "genus", "bounds", "theorem", "corollary", "g+1"
            );
            for r in &rows {
                let bounds = format!("[{}, {}]", r.g_lower, r.g_upper);
                let theorem = format!("{} < {} {}", r.floor, r.theorem_rhs, mark(r.theorem_holds));
                let corollary = format!(
                    "{} < {} {}",
                    r.floor,
                    r.corollary_rhs,
                    mark(r.corollary_holds)
                );
                let weak = format!("{} < {} {}", r.floor, r.weak_rhs, mark(r.weak_holds));
                writeln!(
                    s,
                    "{:<14}{:<26}{:<7}{:<7}{:<9}{:<16}{:<16}{}",
                    r.name, r.braid, r.floor, r.genus, bounds, theorem, corollary, weak
                )
                .unwrap();
            }
            s
        }
        Format::Json => json(&rows),
        Format::Csv => csv_rows(&rows, &[]),
    };
    Ok(Report {
        stdout,
        code: verdict(all_hold),
    })
}
