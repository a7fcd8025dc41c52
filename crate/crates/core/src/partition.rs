//! Integer partitions in row-length form.
//!
//! A partition stores the weakly decreasing list of its row lengths with no
//! trailing zeros. This is the canonical exchange format for shapes and
//! dominant weights throughout the crate; the column-multiplicity encoding
//! `d = (d_1, ..., d_k)` (where `d_i` counts columns of height `i`) is the
//! same data as the fundamental-weight coefficient vector and is available
//! through [`Partition::column_multiplicities`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    /// Builds a partition from row lengths, which must be weakly decreasing.
    /// Trailing zeros are stripped.
    pub fn new(rows: impl Into<Vec<u32>>) -> Result<Self> {
        let mut rows = rows.into();
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{rows:?} is not weakly decreasing"
            )));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row `i` (0-based); rows past the end have length 0.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.row(i) >= other.row(i))
    }

    /// Transposed diagram: row lengths become column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0) as usize;
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter(|&&r| r as usize > c).count() as u32)
            .collect::<Vec<_>>();
        Partition { rows }
    }

    /// True when every column of the diagram has even length, equivalently
    /// when the row lengths pair up: `rows[0] == rows[1]`, `rows[2] == rows[3]`, ...
    pub fn is_even(&self) -> bool {
        (0..self.rows.len()).step_by(2).all(|i| self.row(i) == self.row(i + 1))
    }

    /// Column-multiplicity encoding of length `len`: entry `i` (0-based) is
    /// the number of columns of height `i + 1`, i.e. `rows[i] - rows[i+1]`.
    /// Fails when the partition has more than `len` rows.
    pub fn column_multiplicities(&self, len: usize) -> Result<Vec<u32>> {
        if self.len() > len {
            return Err(Error::TooManyRows { rows: self.len(), max: len });
        }
        Ok((0..len).map(|i| self.row(i) - self.row(i + 1)).collect())
    }

    /// Inverse of [`Partition::column_multiplicities`]: row `i` is the suffix
    /// sum of the multiplicities from `i` on.
    pub fn from_column_multiplicities(mults: &[u32]) -> Partition {
        let mut rows = vec![0u32; mults.len()];
        let mut acc = 0;
        for i in (0..mults.len()).rev() {
            acc += mults[i];
            rows[i] = acc;
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }

    /// All partitions of `size` with at most `max_rows` rows, graded-lex ordered.
    pub fn all_of_size(size: u32, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u32, cap: u32, rows_left: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { rows: stack.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for part in 1..=remaining.min(cap) {
                stack.push(part);
                rec(remaining - part, part, rows_left - 1, stack, out);
                stack.pop();
            }
        }
        rec(size, size.max(1), max_rows, &mut stack, &mut out);
        out.sort();
        out
    }

    /// All subdiagrams `mu ⊆ self` with exactly `size` boxes and at most
    /// `max_rows` rows, graded-lex ordered.
    pub fn subpartitions_with_size(&self, size: u32, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        let rows = self.rows.len().min(max_rows);
        fn rec(
            shape: &Partition,
            row: usize,
            rows: usize,
            remaining: u32,
            prev: u32,
            stack: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition::new(stack.clone()).expect("weakly decreasing by construction"));
                return;
            }
            if row >= rows {
                return;
            }
            let cap = shape.row(row).min(prev).min(remaining);
            for part in 1..=cap {
                stack.push(part);
                rec(shape, row + 1, rows, remaining - part, part, stack, out);
                stack.pop();
            }
        }
        rec(self, 0, rows, size, u32::MAX, &mut stack, &mut out);
        out.sort();
        out
    }

    /// Even subdiagrams of the given size (see [`Partition::is_even`]).
    pub fn even_subpartitions_with_size(&self, size: u32) -> Vec<Partition> {
        if size % 2 != 0 {
            return Vec::new();
        }
        self.subpartitions_with_size(size, self.len())
            .into_iter()
            .filter(Partition::is_even)
            .collect()
    }
}

/// Graded lexicographic order: first by box count, then lexicographically on
/// the row lists. This is the key order used for multiplicity maps and report
/// listings.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-separated row lengths; the empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition row {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}
