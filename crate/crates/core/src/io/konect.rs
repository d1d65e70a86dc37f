use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{build_bipartite, BipartiteGraph};

/// Prefixes keeping left and right integer ids apart.
pub const LEFT_PREFIX: &str = "p:";
pub const RIGHT_PREFIX: &str = "c:";

/// Reads a KONECT `out.*` file: `%` header lines, then `u v [weight [time]]`
/// rows. Left ids become mode A, right ids mode B.
pub fn parse_konect_str(text: &str) -> Result<BipartiteGraph> {
    let mut edges = Vec::new();
    let mut seen_header = false;
    let mut extra_columns = false;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('%') {
            if !seen_header {
                seen_header = true;
                if let Some(kind) = header.split_whitespace().next() {
                    if kind == "sym" || kind == "asym" {
                        return Err(Error::Parse {
                            line: n + 1,
                            message: format!("network is '{kind}', not bipartite"),
                        });
                    }
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 2 {
            return Err(Error::Parse {
                line: n + 1,
                message: format!("expected at least two ids, got '{line}'"),
            });
        }
        let id = |s: &str| {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: n + 1,
                message: format!("'{s}' is not an integer id"),
            })
        };
        let (u, v) = (id(fields[0])?, id(fields[1])?);
        extra_columns |= fields.len() > 2;
        edges.push((format!("{LEFT_PREFIX}{u}"), format!("{RIGHT_PREFIX}{v}")));
    }
    if extra_columns {
        log::warn!("ignoring weight/time columns");
    }
    build_bipartite(edges)
}

pub fn parse_konect(path: &Path) -> Result<BipartiteGraph> {
    parse_konect_str(&super::read_file(path)?)
}
