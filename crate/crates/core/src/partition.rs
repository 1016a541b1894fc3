//! Partitions, Young-diagram cell data, and the canonical ordering the rest
//! of the engine relies on.
//!
//! A [`Partition`] is stored trimmed (no trailing zeros) and doubles as a
//! U(n) highest weight once padded to length `n` with [`Partition::padded`].

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, trailing zeros
/// trimmed. The empty sequence is the zero partition.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates weak decrease and trims trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts an arbitrary exponent vector into a partition.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut parts: Vec<u32> = exponents.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of positive parts (rows of the diagram).
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Row length, 0 beyond the last row. `row` is 1-based.
    pub fn part(&self, row: usize) -> u32 {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    /// The partition padded with zeros to length `n`, for use as a U(n)
    /// weight. Panics if the partition has more than `n` rows.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(
            self.parts.len() <= n,
            "cannot pad {} to {} entries",
            self,
            n
        );
        let mut out = self.parts.clone();
        out.resize(n, 0);
        out
    }

    /// Column counts: `result[c] = #{r : parts[r] >= c}`. An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p >= c as u32).count() as u32);
        }
        Partition { parts }
    }

    /// Diagram containment: `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(idx, &p)| self.part(idx + 1) >= p)
    }

    /// All cells in row-major order with hooks and contents filled in.
    pub fn cells(&self) -> Vec<Cell> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (r0, &len) in self.parts.iter().enumerate() {
            let row = r0 + 1;
            for col in 1..=len as usize {
                let arm = len - col as u32;
                let leg = conj.part(col) - row as u32;
                out.push(Cell {
                    row,
                    col,
                    hook: arm + leg + 1,
                    content: col as i64 - row as i64,
                });
            }
        }
        out
    }
}

/// One box of a Young diagram. `hook = arm + leg + 1`, `content = col - row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub hook: u32,
    pub content: i64,
}

/// Canonical listing order: size descending, then lexicographic on parts
/// descending. `Less` means "listed first". On equal-size comparable pairs
/// this refines dominance, which is what makes leading-term elimination in
/// the Schur decomposition terminate.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of exactly `size` with at most `max_rows` rows and every
/// part at most `max_part`, in no particular order.
pub fn partitions_of(size: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
    fn rec(remaining: u32, rows_left: usize, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        if rows_left == 0 || cap == 0 {
            return;
        }
        let hi = cap.min(remaining);
        for p in (1..=hi).rev() {
            // Feasibility: the remaining rows can still absorb the rest.
            if u64::from(p) * rows_left as u64 >= u64::from(remaining) {
                stack.push(p);
                rec(remaining - p, rows_left - 1, p, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(size, max_rows, max_part, &mut stack, &mut out);
    out
}

/// All partitions of size at most `max_size` with at most `max_rows` rows.
pub fn partitions_up_to(max_size: u32, max_rows: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_rows, s.max(1)))
        .collect()
}
