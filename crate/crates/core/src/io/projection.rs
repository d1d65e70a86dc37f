//! Tab-separated projection files.
//!
//! ```text
//! # bipinfluence projection onto=a nodes=3 edges=3
//! node  1
//! source  a
//! edge  2  3  2  a  c
//! ```
//!
//! Fields are separated by single tabs. `edge` rows are
//! `x, y, multiplicity, provenance...`. Every node and source is listed so
//! isolated nodes survive a round trip.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Mode, ProjectedGraph};

pub fn write_projection(p: &ProjectedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# bipinfluence projection onto={} nodes={} edges={}",
        p.onto(),
        p.node_count(),
        p.edge_count()
    );
    for n in p.nodes() {
        let _ = writeln!(out, "node\t{n}");
    }
    for s in p.sources() {
        let _ = writeln!(out, "source\t{s}");
    }
    for (x, y, prov) in p.edges() {
        let _ = write!(
            out,
            "edge\t{}\t{}\t{}",
            p.nodes()[x],
            p.nodes()[y],
            prov.len()
        );
        for &s in prov {
            let _ = write!(out, "\t{}", p.sources()[s]);
        }
        out.push('\n');
    }
    out
}

pub fn parse_projection_str(text: &str) -> Result<ProjectedGraph> {
    let mut onto = None;
    let mut nodes = Vec::new();
    let mut sources = Vec::new();
    let mut edges = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        if let Some(header) = line.strip_prefix('#') {
            for field in header.split_whitespace() {
                match field {
                    "onto=a" => onto = Some(Mode::A),
                    "onto=b" => onto = Some(Mode::B),
                    _ => {}
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        match fields.as_slice() {
            ["node", label] => nodes.push(label.to_string()),
            ["source", label] => sources.push(label.to_string()),
            ["edge", x, y, w, prov @ ..] => {
                let w: usize = w
                    .parse()
                    .map_err(|_| err(format!("bad multiplicity '{w}'")))?;
                if w != prov.len() {
                    return Err(err(format!(
                        "multiplicity {w} but {} provenance entries",
                        prov.len()
                    )));
                }
                edges.push((
                    x.to_string(),
                    y.to_string(),
                    prov.iter().map(|s| s.to_string()).collect(),
                ));
            }
            _ => return Err(err(format!("unrecognized row '{line}'"))),
        }
    }
    let onto = onto.ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing 'onto=' header".into(),
    })?;
    ProjectedGraph::from_parts(onto, nodes, sources, edges)
}

pub fn parse_projection(path: &Path) -> Result<ProjectedGraph> {
    parse_projection_str(&super::read_file(path)?)
}
