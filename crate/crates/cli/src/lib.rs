//! Corpus loading, report assembly and text output for the `pencil` binary.

use std::fmt::{self, Write as _};
use std::path::Path;

use pencil_core::exact::Q;
use pencil_core::harness::{run_map, suite_totals, theorem2_harness, Expected, HarnessConfig, MapReport, SuiteTotals, Theorem2Suite};
use pencil_core::pencil::PencilMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Bad input: unreadable file, malformed TOML or polynomial text.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    #[serde(default)]
    pub tags: Vec<String>,
    pub expected: Option<Expected>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusFile {
    #[serde(default)]
    map: Vec<CorpusEntry>,
}

/// A parsed corpus: entries in file order with their maps.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<(CorpusEntry, PencilMap)>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self, UsageError> {
        let file: CorpusFile = toml::from_str(text).map_err(|e| UsageError(format!("corpus: {e}")))?;
        let mut entries = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for e in file.map {
            if !seen.insert(e.name.clone()) {
                return Err(UsageError(format!("corpus: duplicate map name {:?}", e.name)));
            }
            let f = PencilMap::parse(&e.p, &e.q).map_err(|err| UsageError(format!("map {:?}: {err}", e.name)))?;
            entries.push((e, f));
        }
        Ok(Corpus { entries })
    }

    pub fn load(path: &Path) -> Result<Self, UsageError> {
        let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

/// `"P=..."`/`"Q=..."` arguments (prefixes optional, in either order) and an
/// optional shift `F - v0`.
pub fn parse_map(first: &str, second: &str, shift: Option<&str>) -> Result<PencilMap, UsageError> {
    let (p, q) = match (first.strip_prefix("Q="), second.strip_prefix("P=")) {
        (Some(q), Some(p)) => (p, q),
        _ => (first.strip_prefix("P=").unwrap_or(first), second.strip_prefix("Q=").unwrap_or(second)),
    };
    let f = PencilMap::parse(p, q).map_err(|e| UsageError(e.to_string()))?;
    match shift {
        None => Ok(f),
        Some(s) => {
            let (u0, v0) = parse_shift(s)?;
            f.translated(&u0, &v0).map_err(|e| UsageError(e.to_string()))
        }
    }
}

fn parse_shift(s: &str) -> Result<(Q, Q), UsageError> {
    let bad = || UsageError(format!("--shift expects two rationals \"u0,v0\", got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: Q = a.trim().parse().map_err(|_| bad())?;
    let b: Q = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

#[derive(Debug, Clone, Serialize)]
pub struct HarnessReport {
    pub seed: u64,
    pub maps: Vec<MapReport>,
    pub theorem2: Theorem2Suite,
    pub totals: SuiteTotals,
}

/// Run every entry, `jobs` at a time. Results keep corpus order.
pub fn run_corpus(corpus: &Corpus, cfg: &HarnessConfig, jobs: usize) -> HarnessReport {
    let run = || -> Vec<MapReport> {
        corpus
            .entries
            .par_iter()
            .map(|(e, f)| run_map(&e.name, f, e.expected.as_ref(), cfg))
            .collect()
    };
    let maps = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => corpus.entries.iter().map(|(e, f)| run_map(&e.name, f, e.expected.as_ref(), cfg)).collect(),
    };
    HarnessReport {
        seed: cfg.seed,
        theorem2: theorem2_harness(&maps),
        totals: suite_totals(&maps),
        maps,
    }
}

/// Pretty JSON with object keys sorted.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("json");
    s.push('\n');
    s
}

/// 1 on any failed check or Theorem 2 violation, else 3 on an unannounced
/// cap or budget error, else 0.
pub fn exit_code(maps: &[MapReport], suite: Option<&Theorem2Suite>) -> i32 {
    if maps.iter().any(MapReport::failed) || suite.is_some_and(|s| s.verdict.is_fail()) {
        EXIT_FAIL
    } else if maps.iter().any(|m| m.cap_errors().next().is_some()) {
        EXIT_CAP
    } else {
        EXIT_PASS
    }
}

/// Lines for stderr naming each unannounced cap or budget error.
pub fn cap_messages(maps: &[MapReport]) -> Vec<String> {
    maps.iter()
        .flat_map(|m| m.cap_errors().map(move |e| format!("{}: {} stage: {}", m.name, e.stage, e.message)))
        .collect()
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn opt_mark(b: Option<bool>) -> &'static str {
    b.map_or("?", mark)
}

fn abc(m: &MapReport) -> String {
    let t = &m.theorem2;
    let mut s = match (t.a, t.c) {
        (Some(a), Some(c)) if a == t.b && c == t.b => format!("a=b=c={}", mark(a)),
        _ => format!("a={} b={} c={}", opt_mark(t.a), mark(t.b), opt_mark(t.c)),
    };
    for h in &t.missing {
        let _ = write!(s, " hyp:{h} ✗");
    }
    if t.equivalent.is_fail() {
        s.push_str(" VIOLATION");
    }
    s
}

/// One row for a map.
pub fn summary_row(m: &MapReport) -> String {
    let d = &m.dossier;
    let fibres = if d.finite_fibres { "finite" } else { "infinite" };
    let deg = d.deg_geo.map_or("?".into(), |n| n.to_string());
    let r = match &m.pencil {
        Some(p) => format!("{}/{}", p.generic_r, p.total_reducibility),
        None => "?".into(),
    };
    let h = match &m.resolution {
        Some(t) => format!("{}+{}", t.h_infinity, t.h_b_total),
        None => "?".into(),
    };
    let af = match d.a_f_empty {
        None => "?".into(),
        Some(true) if d.a_f_unresolved.is_empty() => "∅".into(),
        _ => {
            let mut s: Vec<String> = d.a_f_components.iter().map(|c| c.equation.clone()).collect();
            if !d.a_f_unresolved.is_empty() {
                s.push(format!("+{}?", d.a_f_unresolved.len()));
            }
            s.join(";")
        }
    };
    let count = |f: fn(&pencil_core::harness::Outcome) -> bool| m.checks.iter().filter(|c| f(&c.outcome)).count();
    let checks = format!(
        "pass={} fail={} skip={}",
        count(|o| o.is_pass()),
        count(|o| o.is_fail()),
        count(|o| o.is_skipped())
    );
    let mut row = format!(
        "{:<16} fibres={:<8} deg_geo={:<2} r={:<5} h={:<5} A_F={:<8} {:<28} {checks}",
        m.name,
        fibres,
        deg,
        r,
        h,
        af,
        abc(m)
    );
    for e in &m.errors {
        let tag = if e.expected { " (expected)" } else { "" };
        let _ = write!(row, " {}:{}{tag}", e.stage, e.kind);
    }
    row.trim_end().to_string()
}

pub fn summary_table(r: &HarnessReport) -> String {
    let mut s = String::new();
    for m in &r.maps {
        s.push_str(&summary_row(m));
        s.push('\n');
    }
    let t = &r.totals;
    let _ = writeln!(
        s,
        "maps={} checks pass={} fail={} skip={} cap_errors={}",
        t.maps, t.passed, t.failed, t.skipped, t.cap_errors
    );
    let verdict = match &r.theorem2.verdict {
        pencil_core::harness::Outcome::Pass { detail } => format!("pass ({detail})"),
        pencil_core::harness::Outcome::Fail { detail } => format!("FAIL ({detail})"),
        pencil_core::harness::Outcome::Skipped { reason } => format!("skipped ({reason})"),
    };
    let _ = writeln!(s, "theorem2: {verdict}");
    s
}
