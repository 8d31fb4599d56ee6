//! Integer partitions in canonical (non-increasing) form and their enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered multiset of positive integers, stored with parts non-increasing.
///
/// Partitions index both Chern numbers `c_I` (partitions of `n`) and
/// Pontrjagin numbers `p_I` (partitions of `n/2`). The total order puts larger
/// leading parts first, so `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`; this is
/// the order [`partitions_of`] emits and the order maps keyed by partitions
/// iterate in.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `[k]`; `k = 0` gives the empty partition.
    pub fn single(k: u32) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiset union; as a monomial index this is the product `c_I · c_J`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Errors unless the partition has the expected weight.
    pub fn expect_weight(&self, expected: u32) -> Result<()> {
        let actual = self.weight();
        if actual == expected {
            Ok(())
        } else {
            Err(Error::WeightMismatch {
                partition: self.to_string(),
                expected,
                actual,
            })
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `3,1`, `[3,1]`, `[ 3, 1 ]`; `[]` or the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Lazily enumerates the partitions of `n`, largest parts first.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition {
            parts: current.clone(),
        };

        // Successor in descending lexicographic order: strip the trailing 1s,
        // lower the last part x > 1 by one, then refill greedily with parts
        // no larger than x - 1.
        let mut next = current;
        let mut freed = 0u32;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.pop() {
            let cap = last - 1;
            freed += last;
            while freed > 0 {
                let part = cap.min(freed);
                next.push(part);
                freed -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All partitions of `n` in canonical form, largest parts first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    Partitions::new(n).collect()
}
