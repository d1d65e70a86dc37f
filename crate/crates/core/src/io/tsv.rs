use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{build_bipartite, BipartiteGraph};

/// Reads a whitespace-separated edge list: first field is the mode A label,
/// second the mode B label, further fields are ignored. Lines starting with
/// `#` and blank lines are skipped.
pub fn parse_tsv_str(text: &str) -> Result<BipartiteGraph> {
    let mut edges = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match (fields.next(), fields.next()) {
            (Some(a), Some(b)) => edges.push((a, b)),
            _ => {
                return Err(Error::Parse {
                    line: n + 1,
                    message: format!("expected two fields, got '{line}'"),
                })
            }
        }
    }
    build_bipartite(edges)
}

pub fn parse_tsv(path: &Path) -> Result<BipartiteGraph> {
    parse_tsv_str(&super::read_file(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Mode;

    #[test]
    fn parses_tabs() {
        let g = parse_tsv_str("w1\te1\nw1\te2\nw2\te1\n").unwrap();
        assert_eq!(g.mode_len(Mode::A), 2);
        assert_eq!(g.mode_len(Mode::B), 2);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn skips_comments() {
        assert_eq!(parse_tsv_str("# comment\nw1 e1\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn single_field_is_a_parse_error() {
        match parse_tsv_str("w1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(
            parse_tsv_str("# nothing\n"),
            Err(Error::EmptyGraph)
        ));
    }
}
