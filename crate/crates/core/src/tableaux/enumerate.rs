//! Lazy enumeration of semistandard fillings.
//!
//! Cells are visited in row-major order and candidate values ascend, so the
//! stream is lexicographic on the row-major entry list and fully
//! deterministic.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::{Alphabet, Letter, Tableau};

/// All semistandard type-A fillings of `outer / inner` with entries in
/// `1..=max_letter`.
pub fn skew_tableaux(
    outer: &Partition,
    inner: &Partition,
    max_letter: u32,
) -> Result<SkewTableauxIter> {
    if !outer.contains(inner) {
        return Err(Error::InnerNotContained);
    }
    let mut cells = Vec::new();
    let mut row_starts = vec![0usize; outer.len() + 1];
    for r in 0..outer.len() {
        row_starts[r] = cells.len();
        for c in inner.row(r)..outer.row(r) {
            let left = if c > inner.row(r) { Some(cells.len() - 1) } else { None };
            // the cell straight above is filled iff its column clears the inner shape
            let above = if r > 0 && c >= inner.row(r - 1) {
                Some(row_starts[r - 1] + (c - inner.row(r - 1)) as usize)
            } else {
                None
            };
            cells.push(Cell { row: r, left, above });
        }
    }
    row_starts[outer.len()] = cells.len();
    Ok(SkewTableauxIter {
        outer: outer.clone(),
        inner: inner.clone(),
        cells,
        max_letter,
        entries: Vec::new(),
        started: false,
        exhausted: false,
    })
}

/// Straight-shape case of [`skew_tableaux`].
pub fn ssyt_tableaux(shape: &Partition, max_letter: u32) -> Result<SkewTableauxIter> {
    skew_tableaux(shape, &Partition::empty(), max_letter)
}

struct Cell {
    row: usize,
    left: Option<usize>,
    above: Option<usize>,
}

pub struct SkewTableauxIter {
    outer: Partition,
    inner: Partition,
    cells: Vec<Cell>,
    max_letter: u32,
    entries: Vec<u32>,
    started: bool,
    exhausted: bool,
}

impl SkewTableauxIter {
    fn min_at(&self, i: usize) -> u32 {
        let cell = &self.cells[i];
        let mut lo = 1;
        if let Some(j) = cell.left {
            lo = lo.max(self.entries[j]);
        }
        if let Some(j) = cell.above {
            lo = lo.max(self.entries[j] + 1);
        }
        lo
    }

    /// Fills positions `from..` at their minimum values; false when some cell
    /// has no admissible value.
    fn extend_min(&mut self, from: usize) -> bool {
        for i in from..self.cells.len() {
            let v = self.min_at(i);
            if v > self.max_letter {
                return false;
            }
            self.entries.push(v);
        }
        true
    }

    /// Steps to the lexicographic successor of the current (possibly partial)
    /// filling; false when the stream is exhausted.
    fn advance(&mut self) -> bool {
        loop {
            let Some(v) = self.entries.pop() else {
                return false;
            };
            if v < self.max_letter {
                // v + 1 still satisfies the lower bounds, which v met
                let i = self.entries.len();
                self.entries.push(v + 1);
                if self.extend_min(i + 1) {
                    return true;
                }
            }
        }
    }

    fn snapshot(&self) -> Tableau {
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); self.outer.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            rows[self.cells[i].row].push(Letter::plain(v));
        }
        Tableau::from_enumerated(
            Alphabet::A,
            self.outer.clone(),
            self.inner.clone(),
            rows,
        )
    }
}

impl Iterator for SkewTableauxIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.exhausted {
            return None;
        }
        let found = if self.started {
            self.advance()
        } else {
            self.started = true;
            self.extend_min(0)
        };
        if found {
            Some(self.snapshot())
        } else {
            self.exhausted = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    /// Brute-force oracle: try every assignment of `1..=max_letter` to the
    /// skew cells and keep the semistandard ones, by direct inspection of the
    /// grid. Shares nothing with the iterator's constraint propagation.
    fn brute_force(outer: &Partition, inner: &Partition, max_letter: u32) -> Vec<Vec<u32>> {
        let cells: Vec<(usize, u32)> = (0..outer.len())
            .flat_map(|r| (inner.row(r)..outer.row(r)).map(move |c| (r, c)))
            .collect();
        let mut out = Vec::new();
        let total = (max_letter as u64).checked_pow(cells.len() as u32).unwrap();
        for code in 0..total {
            let mut assignment = Vec::with_capacity(cells.len());
            let mut x = code;
            for _ in 0..cells.len() {
                assignment.push((x % max_letter as u64) as u32 + 1);
                x /= max_letter as u64;
            }
            let get = |r: usize, c: u32| -> Option<u32> {
                cells
                    .iter()
                    .position(|&(rr, cc)| rr == r && cc == c)
                    .map(|i| assignment[i])
            };
            let mut ok = true;
            for (i, &(r, c)) in cells.iter().enumerate() {
                if c > inner.row(r) {
                    if let Some(left) = get(r, c - 1) {
                        ok &= left <= assignment[i];
                    }
                }
                if r > 0 {
                    if let Some(above) = get(r - 1, c) {
                        ok &= above < assignment[i];
                    }
                }
            }
            if ok {
                out.push(assignment);
            }
        }
        out
    }

    #[test]
    fn single_box_count() {
        assert_eq!(ssyt_tableaux(&p(&[1]), 4).unwrap().count(), 4);
    }

    #[test]
    fn hook_count_matches_brute_force() {
        let got = ssyt_tableaux(&p(&[2, 1]), 4).unwrap().count();
        assert_eq!(got, 20);
        assert_eq!(brute_force(&p(&[2, 1]), &Partition::empty(), 4).len(), 20);
    }

    #[test]
    fn too_tall_column_is_empty_not_an_error() {
        assert_eq!(ssyt_tableaux(&p(&[1; 5]), 4).unwrap().count(), 0);
    }

    #[test]
    fn skew_enumeration() {
        // single skew box
        assert_eq!(skew_tableaux(&p(&[1, 1, 1]), &p(&[1, 1]), 4).unwrap().count(), 4);
        // empty shape: exactly one empty filling
        let fillings: Vec<_> = skew_tableaux(&p(&[2]), &p(&[2]), 3).unwrap().collect();
        assert_eq!(fillings.len(), 1);
        assert!(fillings[0].word().is_empty());
        // disconnected cells, checked against brute force
        let got: Vec<_> = skew_tableaux(&p(&[3, 2, 1]), &p(&[2, 1]), 2).unwrap().collect();
        assert_eq!(got.len(), brute_force(&p(&[3, 2, 1]), &p(&[2, 1]), 2).len());
        assert!(got.iter().any(|t| t.to_string() == ". . 1/. 2/2"));
        // inner must fit inside outer
        assert!(skew_tableaux(&p(&[1]), &p(&[2]), 2).is_err());
    }

    #[test]
    fn stream_is_lexicographic_and_duplicate_free() {
        let entries: Vec<Vec<u32>> = ssyt_tableaux(&p(&[2, 2]), 4)
            .unwrap()
            .map(|t| {
                t.entry_rows()
                    .iter()
                    .flatten()
                    .map(|l| l.value())
                    .collect()
            })
            .collect();
        assert!(entries.windows(2).all(|w| w[0] < w[1]));
        let brute = brute_force(&p(&[2, 2]), &Partition::empty(), 4);
        assert_eq!(entries.len(), brute.len());
    }
}
