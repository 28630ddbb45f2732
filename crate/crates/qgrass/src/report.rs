//! Report shapes and output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use qgrass_core::superspaces::Terms;
use qgrass_core::weyl::suites::RelationOutcome;
use serde::Serialize;

use crate::args::Format;
use crate::config::RunConfig;
use crate::CliError;

#[derive(Serialize)]
pub struct Header<'a> {
    pub library_version: &'static str,
    pub config: &'a RunConfig,
}

impl<'a> Header<'a> {
    pub fn new(config: &'a RunConfig) -> Self {
        Self { library_version: qgrass_core::VERSION, config }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    /// Arguments to the `qgrass` binary that re-evaluate this input.
    pub replay: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationJson {
    pub name: String,
    pub status: &'static str,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl RelationJson {
    pub fn from_outcome(r: &RelationOutcome, replay: impl Fn(&str, &str) -> Vec<String>) -> Self {
        Self {
            name: r.name.clone(),
            status: status(r.holds),
            checked: r.checked,
            witness: r.witness.as_ref().map(|w| WitnessJson {
                input: w.input.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
                replay: replay(&r.name, &w.input),
            }),
        }
    }
}

pub fn status(holds: bool) -> &'static str {
    if holds {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteJson {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub relations: Vec<RelationJson>,
    /// Checked and reported, but not part of the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub informational: Vec<RelationJson>,
}

impl SuiteJson {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(|r| r.status == "pass")
    }
}

#[derive(Serialize)]
pub struct SuitesReport<'a> {
    #[serde(flatten)]
    pub header: Header<'a>,
    pub pass: bool,
    pub reports: Vec<SuiteJson>,
}

#[derive(Serialize)]
pub struct TermJson {
    pub key: String,
    pub coefficient: String,
}

pub fn terms_json(t: &Terms) -> Vec<TermJson> {
    t.iter().map(|(k, c)| TermJson { key: k.render(), coefficient: c.render() }).collect()
}

/// A rendered report and its verdict.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// CSV body preceded by a `#` line carrying the library version and config.
pub fn csv_table(config: &RunConfig, header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let cfg = serde_json::to_string(&Header::new(config)).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::Internal(e.to_string()))?;
    for r in rows {
        w.write_record(&r).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let body = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(format!("# {cfg}\n{}", String::from_utf8(body).expect("csv output is UTF-8")))
}

/// Rows `suite,relation,status,checked,input,lhs,rhs` for relation reports.
pub fn suites_csv(config: &RunConfig, reports: &[SuiteJson]) -> Result<String, CliError> {
    let mut rows = Vec::new();
    for s in reports {
        let all = s.relations.iter().map(|r| (r, "")).chain(s.informational.iter().map(|r| (r, "informational")));
        for (r, tag) in all {
            let (i, l, rh) = match &r.witness {
                Some(w) => (w.input.clone(), w.lhs.clone(), w.rhs.clone()),
                None => Default::default(),
            };
            let st = if tag.is_empty() { r.status.to_string() } else { format!("{} ({tag})", r.status) };
            rows.push(vec![s.suite.clone(), r.name.clone(), st, r.checked.to_string(), i, l, rh]);
        }
    }
    csv_table(config, &["suite", "relation", "status", "checked", "input", "lhs", "rhs"], rows)
}

pub fn render_suites(config: &RunConfig, reports: Vec<SuiteJson>) -> Result<Output, CliError> {
    let pass = reports.iter().all(SuiteJson::pass);
    let text = match config.format() {
        Format::Json => json(&SuitesReport { header: Header::new(config), pass, reports })?,
        Format::Csv => suites_csv(config, &reports)?,
    };
    Ok(Output { text, pass })
}

/// Writes to a temporary file beside `path`, then renames it into place.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
