//! Interval-valued survey ingestion and per-(group, term) agreement reports.
//!
//! Input is CSV with the header `group,participant_id,term,l,r`, or a JSON
//! array of objects with the same keys. Two groups are derived rather than
//! stored: `PS` (physiotherapists and surgeons together) and `ALL` (every
//! record).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::agreement::{gamma_alpha, gamma_exact};
use crate::error::{Error, Result};
use crate::fuzzyset::grid;
use crate::iaa::build_iaa;
use crate::intervals::{Interval, IntervalCollection};
use crate::numfmt::{round6, sig6};

pub const CSV_HEADER: [&str; 5] = ["group", "participant_id", "term", "l", "r"];
pub const ALL_GROUP: &str = "ALL";
pub const PS_GROUP: &str = "PS";

/// Questionnaire terms in presentation order, with their full wording.
pub const CANONICAL_TERMS: [(&str, &str); 5] = [
    ("ITD", "impossible to do"),
    ("ED", "extremely difficult"),
    ("MD", "moderately difficult"),
    ("ALBD", "a little bit difficult"),
    ("NAAD", "not at all difficult"),
];

/// Maps a term code or its full wording (any case) to the canonical code.
/// Unrecognized labels pass through trimmed.
pub fn canonical_term(label: &str) -> String {
    let label = label.trim();
    CANONICAL_TERMS
        .iter()
        .find(|(code, name)| label.eq_ignore_ascii_case(code) || label.eq_ignore_ascii_case(name))
        .map_or_else(|| label.to_string(), |(code, _)| code.to_string())
}

fn term_rank(term: &str) -> Option<usize> {
    CANONICAL_TERMS.iter().position(|(code, _)| *code == term)
}

fn compare_terms(a: &str, b: &str) -> Ordering {
    match (term_rank(a), term_rank(b)) {
        (Some(x), Some(y)) => x.cmp(&y),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroupKind {
    Patient,
    Physiotherapist,
    Surgeon,
    Other,
}

fn group_kind(name: &str) -> GroupKind {
    let lower = name.to_ascii_lowercase();
    if lower.starts_with("patient") {
        GroupKind::Patient
    } else if lower.starts_with("physio") {
        GroupKind::Physiotherapist
    } else if lower.starts_with("surgeon") {
        GroupKind::Surgeon
    } else {
        GroupKind::Other
    }
}

fn compare_groups(a: &str, b: &str) -> Ordering {
    let rank = |g: &str| group_kind(g) as u8;
    rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyRecord {
    pub group: String,
    pub participant_id: String,
    pub term: String,
    pub interval: Interval,
    /// Source line (CSV) or 1-based record index (JSON).
    pub line: usize,
}

#[derive(Debug, Deserialize)]
struct RawRecord {
    group: String,
    participant_id: String,
    term: String,
    l: f64,
    r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyDataset {
    scale: Interval,
    records: Vec<SurveyRecord>,
}

/// Reads and validates a survey. Every record must lie inside `scale`, and a
/// participant may answer each term at most once per group.
pub fn load_survey<R: Read>(
    source: R,
    format: InputFormat,
    scale: Interval,
) -> Result<SurveyDataset> {
    let raw = match format {
        InputFormat::Csv => read_csv(source)?,
        InputFormat::Json => read_json(source)?,
    };

    let mut seen = HashSet::new();
    let mut records = Vec::with_capacity(raw.len());
    for (line, rec) in raw {
        let fields = [&rec.group, &rec.participant_id, &rec.term];
        if fields.iter().any(|f| f.trim().is_empty()) {
            return Err(Error::Parse("empty field".into()).at_line(line));
        }
        let group = rec.group.trim().to_string();
        if group == ALL_GROUP || group == PS_GROUP {
            return Err(Error::Parse(format!("group name {group:?} is reserved")).at_line(line));
        }
        let interval = Interval::new(rec.l, rec.r).map_err(|e| e.at_line(line))?;
        if !interval.is_within(&scale) {
            return Err(Error::OutOfScale {
                l: rec.l,
                r: rec.r,
                lo: scale.l(),
                hi: scale.r(),
            }
            .at_line(line));
        }
        let participant_id = rec.participant_id.trim().to_string();
        let term = canonical_term(&rec.term);
        if !seen.insert((group.clone(), participant_id.clone(), term.clone())) {
            return Err(Error::DuplicateResponse {
                group,
                participant: participant_id,
                term,
            }
            .at_line(line));
        }
        records.push(SurveyRecord {
            group,
            participant_id,
            term,
            interval,
            line,
        });
    }
    Ok(SurveyDataset { scale, records })
}

fn read_csv<R: Read>(source: R) -> Result<Vec<(usize, RawRecord)>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader
        .headers()
        .map_err(|e| Error::Parse(e.to_string()).at_line(1))?;
    if headers.iter().ne(CSV_HEADER) {
        return Err(Error::Parse(format!(
            "expected header {:?}, found {:?}",
            CSV_HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        ))
        .at_line(1));
    }

    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::Parse(e.to_string()).at_line(line)
        })?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let number = |idx: usize| -> Result<f64> {
            let text = &row[idx];
            text.parse::<f64>().map_err(|_| {
                Error::Parse(format!("{} is not a number: {text:?}", CSV_HEADER[idx])).at_line(line)
            })
        };
        out.push((
            line,
            RawRecord {
                group: row[0].to_string(),
                participant_id: row[1].to_string(),
                term: row[2].to_string(),
                l: number(3)?,
                r: number(4)?,
            },
        ));
    }
    Ok(out)
}

fn read_json<R: Read>(source: R) -> Result<Vec<(usize, RawRecord)>> {
    let raw: Vec<RawRecord> = serde_json::from_reader(source)
        .map_err(|e| Error::Parse(e.to_string()).at_line(e.line()))?;
    Ok(raw
        .into_iter()
        .enumerate()
        .map(|(i, r)| (i + 1, r))
        .collect())
}

impl SurveyDataset {
    pub fn scale(&self) -> Interval {
        self.scale
    }

    pub fn records(&self) -> &[SurveyRecord] {
        &self.records
    }

    /// Stored groups: patients, physiotherapists, surgeons, then any others
    /// by name.
    pub fn groups(&self) -> Vec<String> {
        let mut groups: Vec<String> = self.records.iter().map(|r| r.group.clone()).collect();
        groups.sort_by(|a, b| compare_groups(a, b));
        groups.dedup();
        groups
    }

    /// Terms in questionnaire order, then any others by name.
    pub fn terms(&self) -> Vec<String> {
        let mut terms: Vec<String> = self.records.iter().map(|r| r.term.clone()).collect();
        terms.sort_by(|a, b| compare_terms(a, b));
        terms.dedup();
        terms
    }

    fn has_kind(&self, kind: GroupKind) -> bool {
        self.records.iter().any(|r| group_kind(&r.group) == kind)
    }

    /// Whether the combined professionals group can be formed.
    pub fn has_professionals(&self) -> bool {
        self.has_kind(GroupKind::Physiotherapist) && self.has_kind(GroupKind::Surgeon)
    }

    /// Stored groups followed by the derived ones, in report order.
    pub fn report_groups(&self) -> Vec<String> {
        let mut groups = self.groups();
        if self.has_professionals() {
            groups.push(PS_GROUP.to_string());
        }
        groups.push(ALL_GROUP.to_string());
        groups
    }

    fn in_group(&self, record: &SurveyRecord, group: &str) -> bool {
        match group {
            ALL_GROUP => true,
            PS_GROUP => matches!(
                group_kind(&record.group),
                GroupKind::Physiotherapist | GroupKind::Surgeon
            ),
            g => record.group == g,
        }
    }

    /// Intervals for one cell, in record order.
    pub fn group_collection(&self, group: &str, term: &str) -> Result<IntervalCollection> {
        let known_group = match group {
            ALL_GROUP => true,
            PS_GROUP => self.has_professionals(),
            g => self.records.iter().any(|r| r.group == g),
        };
        if !known_group {
            return Err(Error::UnknownGroup(group.to_string()));
        }
        let term = canonical_term(term);
        if !self.records.iter().any(|r| r.term == term) {
            return Err(Error::UnknownTerm(term));
        }
        let intervals: Vec<Interval> = self
            .records
            .iter()
            .filter(|r| r.term == term && self.in_group(r, group))
            .map(|r| r.interval)
            .collect();
        IntervalCollection::new(intervals).map_err(|_| Error::TooFewSources(0))
    }

    /// `samples` evenly spaced `(x, μ)` points across the scale.
    pub fn emit_series(&self, group: &str, term: &str, samples: usize) -> Result<Vec<(f64, f64)>> {
        if samples < 2 {
            return Err(Error::InvalidSamples(samples));
        }
        let fs = build_iaa(&self.group_collection(group, term)?);
        Ok(grid(self.scale, samples)
            .into_iter()
            .map(|x| (x, fs.mu(x)))
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMode {
    /// Swept level lengths.
    Exact,
    /// Alpha-cuts at `i / cuts`.
    Alpha { cuts: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub group: String,
    pub term: String,
    pub n: usize,
    pub height: f64,
    pub centroid: f64,
    pub gamma: f64,
    pub support_length: f64,
    pub core_length: f64,
}

/// A cell left out of the report, with the reason.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedCell {
    pub group: String,
    pub term: String,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AgreementReport {
    pub rows: Vec<ReportRow>,
    pub skipped: Vec<SkippedCell>,
}

pub const REPORT_HEADER: [&str; 8] = [
    "Group",
    "Term",
    "Height",
    "Centroid",
    "Agr. Rat.",
    "N",
    "Support",
    "Core",
];

fn report_row(
    ds: &SurveyDataset,
    group: &str,
    term: &str,
    mode: GammaMode,
    samples: usize,
) -> Result<ReportRow> {
    let collection = ds.group_collection(group, term)?;
    let n = collection.len();
    if n < 2 {
        return Err(Error::TooFewSources(n));
    }
    let fs = build_iaa(&collection);
    let mf = fs.membership();
    let attrs = mf.attributes(samples)?;
    let gamma = match mode {
        GammaMode::Exact => gamma_exact(&collection)?,
        GammaMode::Alpha { cuts } => gamma_alpha(&mf, cuts, samples)?,
    }
    .gamma;
    Ok(ReportRow {
        group: group.to_string(),
        term: term.to_string(),
        n,
        height: attrs.height,
        centroid: attrs.centroid,
        gamma,
        support_length: attrs.support_length,
        core_length: attrs.core_length,
    })
}

/// One row per (group, term) cell with at least two responses. Cells that
/// cannot be scored are listed in `skipped` and the run continues.
pub fn report(ds: &SurveyDataset, mode: GammaMode, samples: usize) -> Result<AgreementReport> {
    if samples < 2 {
        return Err(Error::InvalidSamples(samples));
    }
    if let GammaMode::Alpha { cuts } = mode {
        if cuts < 2 {
            return Err(Error::InvalidCuts(cuts));
        }
    }
    let mut out = AgreementReport::default();
    let terms = ds.terms();
    for group in ds.report_groups() {
        for term in &terms {
            match report_row(ds, &group, term, mode, samples) {
                Ok(row) => out.rows.push(row),
                Err(error) => out.skipped.push(SkippedCell {
                    group: group.clone(),
                    term: term.clone(),
                    error,
                }),
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonRow<'a> {
    group: &'a str,
    term: &'a str,
    height: f64,
    centroid: f64,
    gamma: f64,
    n: usize,
    support: f64,
    core: f64,
}

#[derive(Serialize)]
struct JsonSkipped<'a> {
    group: &'a str,
    term: &'a str,
    reason: String,
}

impl AgreementReport {
    pub fn to_csv(&self) -> String {
        let mut out = REPORT_HEADER.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields = [
                row.group.clone(),
                row.term.clone(),
                sig6(row.height),
                sig6(row.centroid),
                sig6(row.gamma),
                row.n.to_string(),
                sig6(row.support_length),
                sig6(row.core_length),
            ];
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<JsonRow> = self
            .rows
            .iter()
            .map(|r| JsonRow {
                group: &r.group,
                term: &r.term,
                height: round6(r.height),
                centroid: round6(r.centroid),
                gamma: round6(r.gamma),
                n: r.n,
                support: round6(r.support_length),
                core: round6(r.core_length),
            })
            .collect();
        let skipped: Vec<JsonSkipped> = self
            .skipped
            .iter()
            .map(|s| JsonSkipped {
                group: &s.group,
                term: &s.term,
                reason: s.error.to_string(),
            })
            .collect();
        let doc = serde_json::json!({ "rows": rows, "skipped": skipped });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }
}

pub fn series_to_csv(series: &[(f64, f64)]) -> String {
    let mut out = String::from("x,mu\n");
    for &(x, mu) in series {
        out.push_str(&sig6(x));
        out.push(',');
        out.push_str(&sig6(mu));
        out.push('\n');
    }
    out
}

pub fn series_to_json(series: &[(f64, f64)]) -> String {
    let pairs: Vec<[f64; 2]> = series
        .iter()
        .map(|&(x, mu)| [round6(x), round6(mu)])
        .collect();
    let mut text = serde_json::to_string(&pairs).expect("series serializes");
    text.push('\n');
    text
}
