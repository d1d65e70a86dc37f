use serde::Serialize;

use super::{Measure, ScoreTable};
use crate::error::{Error, Result};

/// Min-max rescaling to `[0, 1]`. A constant input maps to all zeros.
pub fn min_max_normalize(values: &[f64]) -> Vec<f64> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    values
        .iter()
        .map(|&v| if range > 0.0 { (v - min) / range } else { 0.0 })
        .collect()
}

/// Recomputes the normalized column of `t` from its raw values.
pub fn normalize(t: &ScoreTable) -> Result<ScoreTable> {
    if t.is_empty() {
        return Err(Error::InvalidConfig(
            "cannot normalize an empty table".into(),
        ));
    }
    Ok(ScoreTable::from_raw(
        t.measure,
        t.target_mode,
        t.entries.iter().map(|e| (e.node.clone(), e.raw)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Top,
    Bottom,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top" => Ok(Direction::Top),
            "bottom" => Ok(Direction::Bottom),
            other => Err(Error::InvalidConfig(format!("unknown direction '{other}'"))),
        }
    }
}

/// The `floor(fraction * n)` (at least 1) highest- or lowest-scoring nodes.
/// Ties go to the lexicographically smaller label.
pub fn top_k(t: &ScoreTable, fraction: f64, direction: Direction) -> Result<Vec<String>> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InvalidConfig(format!(
            "fraction must be in (0, 1], got {fraction}"
        )));
    }
    if t.is_empty() {
        return Err(Error::InvalidConfig(
            "cannot select from an empty table".into(),
        ));
    }
    let k = ((fraction * t.len() as f64).floor() as usize).max(1);
    let mut order: Vec<&super::ScoreEntry> = t.entries.iter().collect();
    order.sort_by(|a, b| {
        let by_score = match direction {
            Direction::Top => b.raw.total_cmp(&a.raw),
            Direction::Bottom => a.raw.total_cmp(&b.raw),
        };
        by_score.then_with(|| a.node.cmp(&b.node))
    });
    Ok(order.into_iter().take(k).map(|e| e.node.clone()).collect())
}

/// Coefficient of determination of the least-squares line through
/// `(xs, ys)`, i.e. the squared Pearson correlation. 0 when either side
/// has no variance.
pub fn r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    (sxy * sxy / (sxx * syy)).min(1.0)
}

/// Pairwise R² between measures, symmetric with a unit diagonal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct R2Matrix {
    pub measures: Vec<Measure>,
    pub values: Vec<Vec<f64>>,
}

impl R2Matrix {
    pub fn get(&self, a: Measure, b: Measure) -> Option<f64> {
        let i = self.measures.iter().position(|&m| m == a)?;
        let j = self.measures.iter().position(|&m| m == b)?;
        Some(self.values[i][j])
    }
}

pub fn compare_measures(tables: &[ScoreTable]) -> Result<R2Matrix> {
    let Some(first) = tables.first() else {
        return Err(Error::InvalidConfig("no tables to compare".into()));
    };
    if first.len() < 2 {
        return Err(Error::TooFewNodes(first.len()));
    }
    for t in &tables[1..] {
        let same = t.len() == first.len()
            && t.entries
                .iter()
                .zip(&first.entries)
                .all(|(a, b)| a.node == b.node);
        if !same {
            return Err(Error::MismatchedTables);
        }
    }
    let vectors: Vec<Vec<f64>> = tables.iter().map(ScoreTable::normalized_values).collect();
    let n = tables.len();
    let mut values = vec![vec![1.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let r2 = r_squared(&vectors[i], &vectors[j]);
            values[i][j] = r2;
            values[j][i] = r2;
        }
    }
    Ok(R2Matrix {
        measures: tables.iter().map(|t| t.measure).collect(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Mode;

    fn table(values: &[f64]) -> ScoreTable {
        ScoreTable::from_raw(
            Measure::Degree,
            Mode::B,
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| (format!("n{i}"), v)),
        )
    }

    #[test]
    fn min_max_endpoints() {
        assert_eq!(min_max_normalize(&[2.0, 4.0, 3.0]), vec![0.0, 1.0, 0.5]);
        assert_eq!(min_max_normalize(&[7.0, 7.0]), vec![0.0, 0.0]);
    }

    #[test]
    fn normalize_rejects_empty() {
        assert!(normalize(&table(&[])).is_err());
        assert_eq!(normalize(&table(&[1.0, 3.0])).unwrap(), table(&[1.0, 3.0]));
    }

    #[test]
    fn top_k_counts_and_ties() {
        let t = table(&[1.0; 10]);
        assert_eq!(
            top_k(&t, 0.3, Direction::Top).unwrap(),
            vec!["n0", "n1", "n2"]
        );
        assert_eq!(
            top_k(&table(&[1.0; 5]), 0.01, Direction::Top)
                .unwrap()
                .len(),
            1
        );
        let big = table(&vec![0.0; 552]);
        assert_eq!(top_k(&big, 0.10, Direction::Bottom).unwrap().len(), 55);
        assert!(top_k(&t, 0.0, Direction::Top).is_err());
        assert!(top_k(&t, 1.5, Direction::Top).is_err());
    }

    #[test]
    fn top_k_direction() {
        let t = table(&[3.0, 1.0, 2.0, 5.0]);
        assert_eq!(top_k(&t, 0.5, Direction::Top).unwrap(), vec!["n3", "n0"]);
        assert_eq!(top_k(&t, 0.5, Direction::Bottom).unwrap(), vec!["n1", "n2"]);
    }

    #[test]
    fn r_squared_self_and_affine() {
        let t = table(&[1.0, 5.0, 2.0, 9.0]);
        let affine = table(&[4.0, 16.0, 7.0, 28.0]);
        let m = compare_measures(&[t.clone(), affine]).unwrap();
        assert_eq!(m.values[0][0], 1.0);
        assert!((m.values[0][1] - 1.0).abs() < 1e-12);
        assert_eq!(m.values[0][1], m.values[1][0]);
    }

    #[test]
    fn compare_errors() {
        assert!(matches!(
            compare_measures(&[table(&[1.0])]),
            Err(Error::TooFewNodes(1))
        ));
        assert!(matches!(
            compare_measures(&[table(&[1.0, 2.0]), table(&[1.0, 2.0, 3.0])]),
            Err(Error::MismatchedTables)
        ));
    }
}
