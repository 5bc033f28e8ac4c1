use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("internal degree {value} at position {index} is below 2")]
    EntryBelowTwo { index: usize, value: i64 },
    #[error("degree sequence is not realizable by a tree (leaf count {leaves} < 2)")]
    Infeasible { leaves: i64 },
    #[error("cannot parse degree sequence {0:?}")]
    Parse(String),
}

/// Degrees of the non-leaf vertices of a tree, sorted non-increasing.
///
/// The leaf count is implied by the handshake lemma: `L = Σd − 2m + 2`.
/// The empty sequence denotes the single-edge tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Normalizes (sorts non-increasing) and checks a raw sequence.
    pub fn validate(raw: &[i64]) -> Result<Self, DegreeError> {
        if let Some((index, &value)) = raw.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(DegreeError::EntryBelowTwo { index, value });
        }
        let m = raw.len() as i64;
        let leaves = raw.iter().sum::<i64>() - 2 * m + 2;
        if m >= 1 && leaves < 2 {
            return Err(DegreeError::Infeasible { leaves });
        }
        let mut degrees: Vec<usize> = raw.iter().map(|&d| d as usize).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees })
    }

    /// Internal degrees of an existing tree.
    pub fn of_tree(t: &super::Tree) -> Self {
        DegreeSequence {
            degrees: t.internal_degrees(),
        }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of internal vertices `m`.
    pub fn internal_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn leaf_count(&self) -> usize {
        if self.degrees.is_empty() {
            return 2;
        }
        self.degrees.iter().sum::<usize>() + 2 - 2 * self.degrees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.internal_count() + self.leaf_count()
    }

    /// Comma-joined form, e.g. `5,5,4`.
    pub fn joined(&self) -> String {
        self.degrees
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Number of labeled trees realizing the sequence once internal vertices
    /// carry fixed labels: `(n−2)! / Π(dᵢ−1)!`. `None` on overflow.
    pub fn labeled_count(&self) -> Option<u128> {
        let n = self.vertex_count();
        let mut total: u128 = 1;
        let mut placed: u128 = 0;
        // multinomial as a product of binomials, each exact
        for &d in &self.degrees {
            for k in 1..d as u128 {
                placed += 1;
                total = total.checked_mul(placed)? / k;
            }
        }
        debug_assert_eq!(placed as usize, n - 2);
        Some(total)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.joined())
    }
}

impl FromStr for DegreeSequence {
    type Err = DegreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return DegreeSequence::validate(&[]);
        }
        let raw = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| DegreeError::Parse(s.to_string()))?;
        DegreeSequence::validate(&raw)
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = DegreeError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        DegreeSequence::validate(&v)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Self {
        d.degrees
    }
}
