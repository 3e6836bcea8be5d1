//! Text and structured (`charlab-report/1`) output of verification runs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::lower_central_series;
use crate::verify::{GroupContext, TheoremId, VerificationReport};

pub const SCHEMA: &str = "charlab-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// Outcome of one verifier, reduced to a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn of(r: Option<&VerificationReport>) -> Status {
        match r.and_then(|r| r.conclusion_holds) {
            Some(true) => Status::Pass,
            Some(false) => Status::Fail,
            None => Status::NotApplicable,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        }
    }
}

/// One line of a scan summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub cd: Vec<u64>,
    /// `None` for abelian groups, to which the GVZ notion does not apply.
    pub gvz: Option<bool>,
    pub two_degrees: bool,
    pub nilpotency_class: Option<usize>,
    pub center_order_equivalence: Status,
    pub pgroup_equivalence: Status,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GroupSummary {
    pub fn new(ctx: &GroupContext, reports: &[VerificationReport]) -> Self {
        let find = |id: TheoremId| reports.iter().find(|r| r.theorem_id == id);
        let g = ctx.group();
        GroupSummary {
            name: ctx.name().to_string(),
            order: g.order(),
            abelian: g.is_abelian(),
            cd: ctx.degrees().to_vec(),
            gvz: if g.is_abelian() { None } else { ctx.gvz().ok().map(|e| e.holds) },
            two_degrees: ctx.degrees().len() == 2,
            nilpotency_class: lower_central_series(g).class,
            center_order_equivalence: Status::of(find(TheoremId::Equivalences)),
            pgroup_equivalence: Status::of(find(TheoremId::PGroup)),
            failures: reports.iter().filter(|r| r.failed()).count(),
            error: None,
        }
    }

    /// A group that could not be analysed at all.
    pub fn errored(name: &str, order: usize, err: &Error) -> Self {
        GroupSummary {
            name: name.to_string(),
            order,
            abelian: false,
            cd: Vec::new(),
            gvz: None,
            two_degrees: false,
            nilpotency_class: None,
            center_order_equivalence: Status::NotApplicable,
            pgroup_equivalence: Status::NotApplicable,
            failures: 0,
            error: Some(err.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    #[serde(default)]
    pub groups: Vec<GroupSummary>,
    pub records: Vec<VerificationReport>,
}

impl ReportDocument {
    /// Sorts records by group name, then theorem id, and groups by name.
    pub fn new(mut groups: Vec<GroupSummary>, mut records: Vec<VerificationReport>) -> Self {
        groups.sort_by(|a, b| a.name.cmp(&b.name));
        records.sort_by(|a, b| a.group_name.cmp(&b.group_name).then(a.theorem_id.cmp(&b.theorem_id)));
        ReportDocument {
            schema: SCHEMA.to_string(),
            groups,
            records,
        }
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.failed()).count()
    }
}

pub fn write_report(doc: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Structured => {
            let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => write_text(doc),
    }
}

/// Reads a structured report, rejecting other schema versions.
pub fn parse_report(text: &str) -> Result<ReportDocument> {
    let doc: ReportDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        token: String::new(),
        message: e.to_string(),
    })?;
    if doc.schema != SCHEMA {
        return Err(Error::Parse {
            line: 1,
            token: doc.schema,
            message: format!("unsupported schema, expected {SCHEMA}"),
        });
    }
    Ok(doc)
}

fn fmt_cd(cd: &[u64]) -> String {
    let parts: Vec<String> = cd.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn write_table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 == r.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn write_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    if !doc.groups.is_empty() {
        let mut rows = vec![["group", "order", "cd", "GVZ", "two-degree", "T_equivalences", "T_pgroup", "failures"]
            .map(String::from)
            .to_vec()];
        for g in &doc.groups {
            if let Some(e) = &g.error {
                rows.push(vec![g.name.clone(), g.order.to_string(), format!("error: {e}")]);
                continue;
            }
            rows.push(vec![
                g.name.clone(),
                g.order.to_string(),
                fmt_cd(&g.cd),
                yes_no(g.gvz).to_string(),
                yes_no(Some(g.two_degrees)).to_string(),
                g.center_order_equivalence.as_str().to_string(),
                g.pgroup_equivalence.as_str().to_string(),
                g.failures.to_string(),
            ]);
        }
        write_table(&mut out, &rows);
        out.push('\n');
    }
    for r in &doc.records {
        let status = Status::of(Some(r));
        let _ = write!(out, "{}  {}  {}", r.group_name, r.theorem_id, status.as_str());
        if let Some(d) = &r.hypothesis_detail {
            let _ = write!(out, " ({d})");
        }
        out.push('\n');
        for n in &r.notes {
            let _ = writeln!(out, "    note: {n}");
        }
        for w in &r.witnesses {
            let _ = writeln!(out, "    witness: {w}");
        }
    }
    let _ = writeln!(
        out,
        "{} groups, {} records, {} failures",
        doc.groups.len(),
        doc.records.len(),
        doc.failures()
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_valid() {
        let doc = ReportDocument::new(vec![], vec![]);
        let text = write_report(&doc, ReportFormat::Structured);
        assert_eq!(parse_report(&text).unwrap(), doc);
        assert!(write_report(&doc, ReportFormat::Text).contains("0 groups, 0 records, 0 failures"));
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let err = parse_report(r#"{"schema":"charlab-report/0","records":[]}"#).unwrap_err();
        assert!(err.to_string().contains("charlab-report/0"));
    }
}
