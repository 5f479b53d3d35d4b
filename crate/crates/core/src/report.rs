//! Profile loading and deterministic rendering of reports as table, JSON or CSV.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::butler::{ButlerFeasibility, DsbConclusion, SweepRow};
use crate::check::Check;
use crate::construct::{example_profile, grid_row, ExampleName, ExampleReport, OverviewRow};
use crate::profile::{Outcome, ProfileError, ProfileFile, SystemProfile, TriVerdict, Verdict};
use crate::rat::Rat;
use crate::slope::{CohType, Wall};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{path}:{line}:{column}: {msg}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{path}: schema error: {msg}")]
    Schema { path: String, msg: String },
    #[error("{path}: {error}")]
    Contradiction { path: String, error: ProfileError },
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn json_error(origin: &str, e: serde_json::Error) -> InputError {
    use serde_json::error::Category;
    match e.classify() {
        Category::Data => InputError::Schema {
            path: origin.into(),
            msg: e.to_string(),
        },
        Category::Io | Category::Syntax | Category::Eof => InputError::Parse {
            path: origin.into(),
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        },
    }
}

/// Parses profile JSON; `origin` names the source in error messages.
pub fn parse_profile_str(text: &str, origin: &str) -> Result<SystemProfile, InputError> {
    let file: ProfileFile = serde_json::from_str(text).map_err(|e| json_error(origin, e))?;
    SystemProfile::try_from(file).map_err(|error| InputError::Contradiction {
        path: origin.into(),
        error,
    })
}

pub fn parse_profile(path: &Path) -> Result<SystemProfile, InputError> {
    parse_profile_str(&read(path)?, &path.display().to_string())
}

/// A caps file is a profile without its `system` key; the system is supplied separately.
pub fn parse_caps(path: &Path, sys: CohType) -> Result<SystemProfile, InputError> {
    let origin = path.display().to_string();
    let mut v: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| json_error(&origin, e))?;
    let Some(obj) = v.as_object_mut() else {
        return Err(InputError::Schema {
            path: origin,
            msg: "expected a JSON object".into(),
        });
    };
    if obj.contains_key("system") {
        return Err(InputError::Schema {
            path: origin,
            msg: "caps files must not contain \"system\"".into(),
        });
    }
    obj.insert(
        "system".into(),
        serde_json::to_value(sys).expect("plain struct"),
    );
    let file: ProfileFile = serde_json::from_value(v).map_err(|e| json_error(&origin, e))?;
    SystemProfile::try_from(file).map_err(|error| InputError::Contradiction {
        path: origin,
        error,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub genus_map: BTreeMap<ExampleName, i64>,
}

pub fn parse_config(path: &Path) -> Result<Config, InputError> {
    let origin = path.display().to_string();
    serde_json::from_str(&read(path)?).map_err(|e| json_error(&origin, e))
}

/// Parses `NAME=G,NAME=G,...`.
pub fn parse_genus_map(s: &str) -> Result<BTreeMap<ExampleName, i64>, String> {
    let mut m = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (name, g) = item
            .split_once('=')
            .ok_or_else(|| format!("expected NAME=G, got {item:?}"))?;
        let name: ExampleName = name.trim().parse().map_err(|e| format!("{e}"))?;
        let g: i64 = g
            .trim()
            .parse()
            .map_err(|_| format!("bad genus in {item:?}"))?;
        m.insert(name, g);
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!(
                "unknown format {s:?} (expected table, json or csv)"
            )),
        }
    }
}

/// One value in a rendered grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Rat(Rat),
    Text(String),
    Flag(bool),
    Empty,
}

impl Cell {
    fn table_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rat(r) => r.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
            Cell::Empty => "-".into(),
        }
    }

    fn csv_text(&self) -> String {
        match self {
            Cell::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
            Cell::Empty => String::new(),
            c => c.table_text(),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Cell {
        Cell::Int(v)
    }
}

impl From<Rat> for Cell {
    fn from(v: Rat) -> Cell {
        Cell::Rat(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Cell {
        Cell::Flag(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Cell {
        Cell::Text(v.into())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Cell {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Cell {
        v.map_or(Cell::Empty, Into::into)
    }
}

pub struct Section {
    pub title: Option<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    fn new(title: Option<&str>, columns: Vec<&'static str>) -> Section {
        Section {
            title: title.map(String::from),
            columns,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Two-column key/value section.
    fn fields(title: Option<&str>, kv: Vec<(&str, Cell)>) -> Section {
        let mut s = Section::new(title, vec!["field", "value"]);
        for (k, v) in kv {
            s.push(vec![k.into(), v]);
        }
        s
    }
}

/// Something that renders as one or more grids.
pub trait Tabular {
    fn sections(&self) -> Vec<Section>;
}

pub fn render<T: Tabular + Serialize>(report: &T, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => render_table(&report.sections()),
        Format::Csv => render_csv(&report.sections()),
    }
}

fn render_table(sections: &[Section]) -> String {
    let mut out = String::new();
    for (i, s) in sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if let Some(t) = &s.title {
            out.push_str(t);
            out.push('\n');
        }
        let cells: Vec<Vec<String>> = s
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::table_text).collect())
            .collect();
        let mut width: Vec<usize> = s.columns.iter().map(|c| c.len()).collect();
        for r in &cells {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |fields: &mut dyn Iterator<Item = &str>| {
            let mut l = String::new();
            for (j, f) in fields.enumerate() {
                if j > 0 {
                    l.push_str("  ");
                }
                l.push_str(&format!("{f:<w$}", w = width[j]));
            }
            l.trim_end().to_string() + "\n"
        };
        out.push_str(&line(&mut s.columns.iter().copied()));
        out.push_str(&line(
            &mut width
                .iter()
                .map(|w| "-".repeat(*w))
                .collect::<Vec<_>>()
                .iter()
                .map(String::as_str),
        ));
        for r in &cells {
            out.push_str(&line(&mut r.iter().map(String::as_str)));
        }
    }
    out
}

fn render_csv(sections: &[Section]) -> String {
    let mut out = Vec::new();
    for (i, s) in sections.iter().enumerate() {
        if i > 0 {
            out.push(b'\n');
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&s.columns).expect("in-memory write");
        for r in &s.rows {
            w.write_record(r.iter().map(Cell::csv_text))
                .expect("in-memory write");
        }
        out.extend(w.into_inner().expect("in-memory flush"));
    }
    String::from_utf8(out).expect("utf-8 cells")
}

fn coh(t: &CohType) -> String {
    format!("({}, {}, {})", t.r, t.d, t.n)
}

fn outcome_text(o: Outcome) -> &'static str {
    match o {
        Outcome::Stable => "stable",
        Outcome::StrictlySemistable => "strictly semistable",
        Outcome::Unstable => "unstable",
        Outcome::Undetermined => "undetermined",
    }
}

fn check_section(title: &str, checks: &[Check]) -> Section {
    let mut s = Section::new(Some(title), vec!["check", "lhs", "rel", "rhs", "pass"]);
    for c in checks {
        s.push(vec![
            c.name.as_str().into(),
            c.lhs.into(),
            c.rel.symbol().into(),
            c.rhs.into(),
            c.pass.into(),
        ]);
    }
    s
}

fn verdict_row(label: &str, v: &Verdict) -> Vec<Cell> {
    vec![
        label.into(),
        outcome_text(v.outcome).into(),
        v.witness.as_ref().map(coh).into(),
        format!("{:?}", v.basis).into(),
        v.region.clone().into(),
    ]
}

fn verdict_section(t: &TriVerdict, at: Option<&(Rat, Verdict)>) -> Section {
    let mut s = Section::new(
        Some("verdicts"),
        vec!["regime", "outcome", "witness", "basis", "region"],
    );
    s.push(verdict_row("alpha small", &t.alpha_small));
    s.push(verdict_row("alpha large", &t.alpha_large));
    s.push(verdict_row("linear", &t.linear));
    if let Some((a, v)) = at {
        s.push(verdict_row(&format!("alpha = {a}"), v));
    }
    s
}

fn wall_section(walls: &[Wall]) -> Section {
    let mut s = Section::new(Some("walls"), vec!["alpha", "witness"]);
    for w in walls {
        s.push(vec![w.alpha.into(), coh(&w.witness).into()]);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: &'static str,
    pub value: i64,
}

/// Result of one curve-oracle query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub oracle: &'static str,
    pub inputs: Vec<NamedValue>,
    pub value: Cell,
}

impl Tabular for OracleReport {
    fn sections(&self) -> Vec<Section> {
        let mut kv: Vec<(&str, Cell)> = vec![("oracle", self.oracle.into())];
        kv.extend(self.inputs.iter().map(|x| (x.name, x.value.into())));
        kv.push(("value", self.value.clone()));
        vec![Section::fields(None, kv)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallsReport {
    pub system: CohType,
    pub walls: Vec<Wall>,
}

impl Tabular for WallsReport {
    fn sections(&self) -> Vec<Section> {
        vec![wall_section(&self.walls)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtAlpha {
    pub alpha: Rat,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub system: CohType,
    pub pattern: String,
    pub verdicts: TriVerdict,
    pub at_alpha: Option<AtAlpha>,
    /// `None` when some rank has no degree bound.
    pub walls: Option<Vec<Wall>>,
}

impl VerdictReport {
    pub fn new(p: &SystemProfile, alpha: Option<Rat>) -> Result<VerdictReport, ProfileError> {
        let verdicts = p.triple_verdict()?;
        let at_alpha = match alpha {
            Some(a) => Some(AtAlpha {
                alpha: a,
                verdict: p.verdict_at_alpha(a)?,
            }),
            None => None,
        };
        Ok(VerdictReport {
            system: *p.sys(),
            pattern: grid_row(&verdicts),
            verdicts,
            at_alpha,
            walls: p.critical_alphas().ok(),
        })
    }

    pub fn any_undetermined(&self) -> bool {
        self.verdicts.outcomes().contains(&Outcome::Undetermined)
            || self
                .at_alpha
                .as_ref()
                .is_some_and(|a| !a.verdict.is_determined())
    }
}

impl Tabular for VerdictReport {
    fn sections(&self) -> Vec<Section> {
        let at = self.at_alpha.as_ref().map(|a| (a.alpha, a.verdict.clone()));
        let mut out = vec![
            Section::fields(
                None,
                vec![
                    ("system", coh(&self.system).into()),
                    ("pattern", self.pattern.as_str().into()),
                ],
            ),
            verdict_section(&self.verdicts, at.as_ref()),
        ];
        if let Some(w) = &self.walls {
            out.push(wall_section(w));
        }
        out
    }
}

impl Tabular for ExampleReport {
    fn sections(&self) -> Vec<Section> {
        let expected = self.expected.map(|b| if b { "Y" } else { "N" }).join(" ");
        let mut kv: Vec<(&str, Cell)> = vec![
            ("example", self.name.to_string().into()),
            ("genus", self.genus.into()),
            ("system", coh(self.profile.sys()).into()),
        ];
        if let Some(p) = &self.parameter {
            kv.push(("parameter", format!("{} = {}", p.name, p.value).into()));
        }
        if let Some(e) = self.epsilon {
            kv.push(("epsilon", e.into()));
        }
        kv.push(("expected", expected.into()));
        kv.push(("computed", grid_row(&self.computed).into()));
        kv.push(("below stated bound", self.below_stated_bound.into()));
        let mut out = vec![
            Section::fields(None, kv),
            verdict_section(&self.computed, None),
            check_section("checks", &self.trace),
        ];
        let mut notes = Section::new(Some("notes"), vec!["note"]);
        for n in self.exclusion_notes.iter().chain(&self.notes) {
            notes.push(vec![n.as_str().into()]);
        }
        if !notes.rows.is_empty() {
            out.push(notes);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverviewReport {
    pub rows: Vec<OverviewRow>,
}

impl Tabular for OverviewReport {
    fn sections(&self) -> Vec<Section> {
        let mut s = Section::new(None, vec!["pattern", "example", "genus", "error"]);
        for r in &self.rows {
            s.push(vec![
                r.pattern.as_str().into(),
                r.label.as_str().into(),
                r.genus.into(),
                r.error.clone().into(),
            ]);
        }
        vec![s]
    }
}

impl Tabular for ButlerFeasibility {
    fn sections(&self) -> Vec<Section> {
        let kv: Vec<(&str, Cell)> = vec![
            ("genus", self.genus.into()),
            ("case", format!("{:?}", self.case).into()),
            ("d_2", self.d2.into()),
            ("d", self.d.into()),
            ("epsilon", self.epsilon.into()),
            ("strict mode", self.strict_mode.into()),
            ("feasible", self.feasible.into()),
        ];
        let mut out = vec![
            Section::fields(None, kv),
            check_section("checks", &self.checks),
        ];
        if !self.reasons.is_empty() {
            let mut s = Section::new(Some("reasons"), vec!["reason"]);
            for r in &self.reasons {
                s.push(vec![r.as_str().into()]);
            }
            out.push(s);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasEntry {
    pub name: ExampleName,
    /// `None` when the construction is unavailable at this genus.
    pub pattern: Option<String>,
    pub below_stated_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub genus: i64,
    pub examples: Vec<AtlasEntry>,
    pub butler: SweepRow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub rows: Vec<AtlasRow>,
}

impl Atlas {
    pub fn build(lo: i64, hi: i64) -> Atlas {
        let butler = crate::butler::butler_sweep(lo..=hi);
        let rows = butler
            .into_iter()
            .map(|b| AtlasRow {
                genus: b.genus,
                examples: ExampleName::ALL
                    .iter()
                    .map(|&name| match example_profile(name, b.genus) {
                        Ok(r) => AtlasEntry {
                            name,
                            pattern: Some(grid_row(&r.computed)),
                            below_stated_bound: r.below_stated_bound,
                        },
                        Err(_) => AtlasEntry {
                            name,
                            pattern: None,
                            below_stated_bound: false,
                        },
                    })
                    .collect(),
                butler: b,
            })
            .collect();
        Atlas { rows }
    }

    pub fn any_undetermined(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| &r.examples)
            .any(|e| e.pattern.as_deref().is_some_and(|p| p.contains('?')))
    }
}

fn dsb_text(c: Option<DsbConclusion>) -> Cell {
    c.map(|c| format!("{c:?}")).into()
}

impl Tabular for Atlas {
    fn sections(&self) -> Vec<Section> {
        let mut cols = vec!["genus"];
        cols.extend(["NNN", "YYN", "YNN", "NYN", "NNY", "NYY", "YYY"]);
        cols.extend(["A strict", "A proof", "B", "dsb A", "dsb B", "note"]);
        let mut s = Section::new(None, cols);
        for r in &self.rows {
            let mut row: Vec<Cell> = vec![r.genus.into()];
            row.extend(r.examples.iter().map(|e| {
                e.pattern
                    .as_ref()
                    .map(|p| {
                        if e.below_stated_bound {
                            format!("{p}*")
                        } else {
                            p.clone()
                        }
                    })
                    .into()
            }));
            let b = &r.butler;
            row.extend([
                b.case_a_strict.into(),
                b.case_a_proof.into(),
                b.case_b.into(),
                dsb_text(b.dsb_a),
                dsb_text(b.dsb_b),
                b.note.clone().into(),
            ]);
            s.push(row);
        }
        vec![s]
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}
