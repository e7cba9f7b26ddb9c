//! Integer partitions: the index set of every symmetric-function basis.
//!
//! A [`Partition`] is stored with its parts weakly decreasing. The total order
//! implemented by [`Ord`] is *reverse lexicographic*, so `(4) < (3,1) < (2,2)
//! < (2,1,1) < (1,1,1,1)`. That order is a linear extension of the reversed
//! dominance order and fixes the row/column indexing of every matrix in this
//! crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive, got {0:?}")]
    NonPositivePart(Vec<i64>),
    #[error("dominance comparison needs equal weights, got {0} and {1}")]
    WeightMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected;
    /// use [`Partition::from_parts_dropping_zeros`] where zeros are expected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn from_parts_dropping_zeros(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// The partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(k)`, or the empty partition when `k == 0`.
    pub fn single(k: usize) -> Self {
        Self::from_parts_dropping_zeros(vec![k])
    }

    /// `(1^k)`.
    pub fn ones(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiset union of parts; the partition indexing `e_λ e_μ = e_{λ ∪ μ}`.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Conjugate partition, built from the multiplicities as the suffix sums
    /// `(a_1 + ... + a_N, a_2 + ... + a_N, ..., a_N)` with zeros removed.
    pub fn transpose(&self) -> Partition {
        let top = self.first();
        let mut counts = vec![0usize; top + 1];
        for &p in &self.parts {
            counts[p] += 1;
        }
        let mut parts = Vec::with_capacity(top);
        let mut running = 0;
        for i in (1..=top).rev() {
            running += counts[i];
            parts.push(running);
        }
        parts.reverse();
        Partition { parts }
    }

    /// Number of parts equal to each value; absent values have multiplicity 0.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Multiplicity of the part value `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `μ ⊴ λ` in dominance order: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, PartitionError> {
        let (a, b) = (self.weight(), other.weight());
        if a != b {
            return Err(PartitionError::WeightMismatch(a, b));
        }
        let len = self.len().max(other.len());
        let (mut sa, mut sb) = (0, 0);
        for i in 0..len {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographically larger partitions come first.
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(raw: Vec<i64>) -> Result<Self, Self::Error> {
        if raw.iter().any(|&p| p <= 0) {
            return Err(PartitionError::NonPositivePart(raw));
        }
        Partition::new(raw.into_iter().map(|p| p as usize).collect())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 2]).transpose(), p(&[2, 2, 1]));
    }

    #[test]
    fn multiplicity_examples() {
        let m = p(&[3, 2, 2, 2]).multiplicities();
        assert_eq!(m, BTreeMap::from([(2, 3), (3, 1)]));
        assert!(Partition::empty().multiplicities().is_empty());
        assert_eq!(p(&[9]).multiplicities(), BTreeMap::from([(9, 1)]));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn enumeration_is_sorted_in_canonical_order() {
        for n in 0..=10 {
            let all = partitions_of(n);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(p(&[3, 1]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])).unwrap());
        assert_eq!(
            p(&[3]).dominance_leq(&p(&[2, 1, 1])),
            Err(PartitionError::WeightMismatch(3, 4))
        );
    }

    #[test]
    fn constructor_sorts_and_rejects_zero() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(
            Partition::from_parts_dropping_zeros(vec![0, 2, 1]),
            p(&[2, 1])
        );
    }

    #[test]
    fn json_form() {
        let q = p(&[3, 2, 2, 2]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,2,2,2]");
        let back: Partition = serde_json::from_str("[2,3,2,2]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
        assert!(serde_json::from_str::<Partition>("[-1]").is_err());
    }
}
