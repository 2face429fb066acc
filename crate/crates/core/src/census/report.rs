use std::fmt::Write as _;
use std::str::FromStr;

use super::{CensusReport, GroupVerdict};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            _ => Err(Error::Parse { offset: 0, expected: "json, csv or md".into() }),
        }
    }
}

pub(super) fn render(report: &CensusReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| Error::Inconsistent(e.to_string())),
        ReportFormat::Csv => csv_rows(report),
        ReportFormat::Markdown => Ok(markdown(report)),
    }
}

fn csv_rows(report: &CensusReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Inconsistent(e.to_string());
    w.write_record(["group", "order", "alpha_class", "subset", "connected", "bipartite", "integral", "branch"])
        .map_err(io)?;
    for g in &report.groups {
        for row in &g.rows {
            w.write_record([
                g.group.as_str(),
                &g.order.to_string(),
                &row.alpha_class.to_string(),
                &row.subset,
                &row.connected.to_string(),
                &row.bipartite.to_string(),
                &row.integral.to_string(),
                &row.branch.to_string(),
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Inconsistent(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Inconsistent(e.to_string()))
}

fn markdown(report: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| group | order | abelian | involution classes | rows | verdict |");
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for g in &report.groups {
        let verdict = match (g.verdict, g.witness()) {
            (GroupVerdict::Excluded { .. }, Some(w)) => format!(
                "excluded: `{}` under `{}` (connected={}, integral={})",
                w.subset, w.alpha, w.connected, w.integral
            ),
            (GroupVerdict::NoCubicGCS, _) => "no subsets".into(),
            _ => "all connected and integral".into(),
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            g.group,
            g.order,
            g.abelian,
            g.classes.len(),
            g.rows.len(),
            verdict.replace('|', "\\|")
        );
    }
    let _ = writeln!(out, "\nSurvivors: {}", report.survivor_line());
    out
}
