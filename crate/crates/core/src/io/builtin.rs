use crate::graph::{build_bipartite, BipartiteGraph};

/// Davis' Southern Women attendance data (18 women, 14 events, 89 edges),
/// women in the usual row order. Row `i` is woman `W{i+1}`.
const SOUTHERN_WOMEN: [&[u8]; 18] = [
    &[1, 2, 3, 4, 5, 6, 8, 9],      // Evelyn Jefferson
    &[1, 2, 3, 5, 6, 7, 8],         // Laura Mandeville
    &[2, 3, 4, 5, 6, 7, 8, 9],      // Theresa Anderson
    &[1, 3, 4, 5, 6, 7, 8],         // Brenda Rogers
    &[3, 4, 5, 7],                  // Charlotte McDowd
    &[3, 5, 6, 8],                  // Frances Anderson
    &[5, 6, 7, 8],                  // Eleanor Nye
    &[6, 8, 9],                     // Pearl Oglethorpe
    &[5, 7, 8, 9],                  // Ruth DeSand
    &[7, 8, 9, 12],                 // Verne Sanderson
    &[8, 9, 10, 12],                // Myra Liddel
    &[8, 9, 10, 12, 13, 14],        // Katherina Rogers
    &[7, 8, 9, 10, 12, 13, 14],     // Sylvia Avondale
    &[6, 7, 9, 10, 11, 12, 13, 14], // Nora Fayette
    &[7, 8, 10, 11, 12],            // Helen Lloyd
    &[8, 9],                        // Dorothy Murchison
    &[9, 11],                       // Olivia Carleton
    &[9, 11],                       // Flora Price
];

/// The embedded Southern Women network with women `W1..W18` in mode A and
/// events `E1..E14` in mode B.
pub fn builtin_southern_women() -> BipartiteGraph {
    let edges = SOUTHERN_WOMEN.iter().enumerate().flat_map(|(w, events)| {
        events
            .iter()
            .map(move |e| (format!("W{}", w + 1), format!("E{e}")))
    });
    build_bipartite(edges).expect("embedded data is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Mode, NodeId};

    #[test]
    fn sizes() {
        let g = builtin_southern_women();
        assert_eq!(g.mode_len(Mode::A), 18);
        assert_eq!(g.mode_len(Mode::B), 14);
        assert_eq!(g.node_count(), 32);
        assert_eq!(g.edge_count(), 89);
        g.validate().unwrap();
    }

    #[test]
    fn labels() {
        let g = builtin_southern_women();
        for i in 1..=18 {
            assert!(g.index_of(&NodeId::a(format!("W{i}"))).is_some());
        }
        for i in 1..=14 {
            assert!(g.index_of(&NodeId::b(format!("E{i}"))).is_some());
        }
    }

    #[test]
    fn neighbors_match_rows() {
        let g = builtin_southern_women();
        for (w, row) in SOUTHERN_WOMEN.iter().enumerate() {
            let n = g.neighbors(&NodeId::a(format!("W{}", w + 1))).unwrap();
            assert_eq!(n.len(), row.len());
            for e in row.iter() {
                assert!(n.contains(&NodeId::b(format!("E{e}"))));
            }
        }
    }
}
