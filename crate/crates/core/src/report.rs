//! CSV, JSON and SVG renderings of analysis results. All outputs are
//! byte-deterministic for fixed inputs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::ablation::{AblationReport, AnomalyType};
use crate::community::CommunitySet;
use crate::error::{Error, Result};
use crate::graph::Mode;
use crate::scoring::{Direction, Measure, R2Matrix, ScoreTable};

/// Fixed 4-decimal rendering, truncated toward zero.
///
/// The value is first rounded at 9 decimals so binary noise such as
/// `0.29999999999999998` prints as `0.3000`.
pub fn format_fixed4(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let scaled = ((x.abs() * 1e9).round() / 1e5).floor() as u64;
    let sign = if x < 0.0 && scaled > 0 { "-" } else { "" };
    format!("{sign}{}.{:04}", scaled / 10_000, scaled % 10_000)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// `node,measure,raw,normalized` rows sorted by node label, then by the
/// order of `tables`.
pub fn scores_csv(tables: &[ScoreTable]) -> String {
    let mut rows: Vec<(&str, usize, &crate::scoring::ScoreEntry, Measure)> = tables
        .iter()
        .enumerate()
        .flat_map(|(i, t)| {
            t.entries
                .iter()
                .map(move |e| (e.node.as_str(), i, e, t.measure))
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(b.0).then(a.1.cmp(&b.1)));
    let mut out = String::from("node,measure,raw,normalized\n");
    for (node, _, e, measure) in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            csv_field(node),
            measure,
            format_fixed4(e.raw),
            format_fixed4(e.normalized)
        );
    }
    out
}

/// Square R² matrix as CSV with measure names on both axes.
pub fn r2_csv(m: &R2Matrix) -> String {
    let mut out = String::from("measure");
    for measure in &m.measures {
        let _ = write!(out, ",{measure}");
    }
    out.push('\n');
    for (measure, row) in m.measures.iter().zip(&m.values) {
        out.push_str(measure.name());
        for v in row {
            let _ = write!(out, ",{}", format_fixed4(*v));
        }
        out.push('\n');
    }
    out
}

/// Everything a run can emit. Empty fields are rendered as empty JSON
/// arrays or `null`.
#[derive(Clone, Copy, Debug)]
pub struct Report<'a> {
    pub onto: Mode,
    pub min_size: usize,
    pub tables: &'a [ScoreTable],
    pub communities: Option<&'a CommunitySet>,
    pub r2: Option<&'a R2Matrix>,
    pub ablations: &'a [AblationReport],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    onto: Mode,
    min_size: usize,
    scores: &'a [ScoreTable],
    communities: Option<Vec<JsonCommunity<'a>>>,
    r2: Option<&'a R2Matrix>,
    ablations: Vec<JsonAblation<'a>>,
}

#[derive(Serialize)]
struct JsonCommunity<'a> {
    size: usize,
    members: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<AnomalyType>,
}

#[derive(Serialize)]
struct JsonAblation<'a> {
    measure: Measure,
    direction: Direction,
    fraction: f64,
    min_size: usize,
    removed: &'a [String],
    before: Vec<JsonCommunity<'a>>,
    after: Vec<JsonCommunity<'a>>,
    counts: &'a BTreeMap<AnomalyType, usize>,
    change_rate: f64,
}

fn communities_json<'a>(
    set: &'a CommunitySet,
    labels: Option<&[AnomalyType]>,
) -> Vec<JsonCommunity<'a>> {
    set.iter()
        .enumerate()
        .map(|(i, c)| JsonCommunity {
            size: c.size(),
            members: c.labels(),
            label: labels.map(|l| l[i]),
        })
        .collect()
}

pub fn report_json(r: &Report<'_>) -> String {
    let json = JsonReport {
        onto: r.onto,
        min_size: r.min_size,
        scores: r.tables,
        communities: r.communities.map(|c| communities_json(c, None)),
        r2: r.r2,
        ablations: r
            .ablations
            .iter()
            .map(|a| JsonAblation {
                measure: a.measure,
                direction: a.config.direction,
                fraction: a.config.fraction,
                min_size: a.config.min_size,
                removed: &a.removed,
                before: communities_json(&a.before, Some(&a.classification.before)),
                after: communities_json(&a.after, Some(&a.classification.after)),
                counts: &a.classification.counts,
                change_rate: a.classification.change_rate,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
    s.push('\n');
    s
}

const PALETTE: [&str; 5] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"];

/// Grouped bar chart of normalized scores: one group per node (in the
/// first table's order), one bar per table.
pub fn scores_svg(tables: &[ScoreTable]) -> String {
    let nodes: Vec<&str> = tables
        .first()
        .map(|t| t.entries.iter().map(|e| e.node.as_str()).collect())
        .unwrap_or_default();
    let bar_w = 10.0;
    let group_w = bar_w * tables.len() as f64 + 10.0;
    let (left, top, plot_h) = (50.0, 20.0, 200.0);
    let width = left + group_w * nodes.len() as f64 + 20.0;
    let height = top + plot_h + 60.0 + 16.0 * tables.len() as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(
        out,
        r#"<line x1="{left}" y1="{top}" x2="{left}" y2="{}" stroke="black"/>"#,
        top + plot_h
    );
    for tick in 0..=4 {
        let v = tick as f64 / 4.0;
        let y = top + plot_h * (1.0 - v);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{y}" text-anchor="end">{v:.2}</text>"#,
            left - 4.0
        );
    }
    for (n, node) in nodes.iter().enumerate() {
        let gx = left + 5.0 + group_w * n as f64;
        for (k, t) in tables.iter().enumerate() {
            let v = t.get(node).map(|e| e.normalized).unwrap_or(0.0);
            let h = plot_h * v;
            let _ = writeln!(
                out,
                r#"<rect class="bar" x="{:.1}" y="{:.1}" width="{bar_w}" height="{:.1}" fill="{}"><title>{} {}: {}</title></rect>"#,
                gx + bar_w * k as f64,
                top + plot_h - h,
                h,
                PALETTE[k % PALETTE.len()],
                xml_escape(node),
                t.measure,
                format_fixed4(v)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{}" text-anchor="middle">{}</text>"#,
            gx + bar_w * tables.len() as f64 / 2.0,
            top + plot_h + 14.0,
            xml_escape(node)
        );
    }
    for (k, t) in tables.iter().enumerate() {
        let y = top + plot_h + 36.0 + 16.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<rect x="{left}" y="{}" width="10" height="10" fill="{}"/><text x="{}" y="{y}">{}</text>"#,
            y - 9.0,
            PALETTE[k % PALETTE.len()],
            left + 14.0,
            t.measure
        );
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[derive(Clone, Debug, Default)]
pub struct OutputPaths {
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Writes each requested artifact. At least one path must be set.
pub fn emit_report(report: &Report<'_>, paths: &OutputPaths) -> Result<()> {
    if paths.csv.is_none() && paths.json.is_none() && paths.svg.is_none() {
        return Err(Error::InvalidConfig("no output requested".into()));
    }
    if let Some(p) = &paths.csv {
        write(p, &scores_csv(report.tables))?;
    }
    if let Some(p) = &paths.json {
        write(p, &report_json(report))?;
    }
    if let Some(p) = &paths.svg {
        write(p, &scores_svg(report.tables))?;
    }
    Ok(())
}
