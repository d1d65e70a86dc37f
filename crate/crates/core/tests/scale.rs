//! Runs the full sweep and measure comparison on a synthetic graph with
//! the dimensions of the Person-Crime network (551 / 829 / 1478).

use std::time::Instant;

use bipinfluence::pipeline::{ablate_many, Analysis};
use bipinfluence::{AblationConfig, Direction, GraphBuilder, Measure, Mode};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn surrogate() -> bipinfluence::BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(551);
    let mut b = GraphBuilder::new();
    // Every right node gets one edge; the rest go to a skewed subset so
    // some right nodes gather several left nodes.
    for c in 0..829 {
        let p = rng.gen_range(0..551);
        b.add_edge(&format!("p:{p}"), &format!("c:{c}"));
    }
    while b.edge_count() < 1478 {
        let p = rng.gen_range(0..551);
        let c = (rng.gen_range(0.0f64..1.0).powi(3) * 829.0) as usize;
        b.add_edge(&format!("p:{p}"), &format!("c:{c}"));
    }
    for p in 0..551 {
        b.add_node(Mode::A, &format!("p:{p}"));
    }
    b.build()
}

#[test]
fn person_crime_sized_sweep_is_fast() {
    let g = surrogate();
    assert_eq!(g.edge_count(), 1478);
    let start = Instant::now();
    for onto in [Mode::A, Mode::B] {
        for min_size in [2, 3] {
            let a = Analysis::new(&g, onto, min_size).unwrap();
            let config = AblationConfig {
                onto,
                fraction: 0.10,
                direction: Direction::Top,
                min_size,
            };
            let reports = ablate_many(&g, &Measure::ALL, &config).unwrap();
            assert_eq!(reports.len(), 5);
            assert!(reports
                .iter()
                .all(|r| r.before.len() == a.communities.len()));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
}
