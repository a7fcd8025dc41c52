//! Tableau and word combinatorics.
//!
//! Two ordered alphabets are in play: the type-A alphabet
//! `1 < 2 < ... < 2n` and the symplectic alphabet
//! `1 < ... < n < n~ < ... < 1~` (`~` marks a barred letter). The word of a
//! tableau reads its rows right to left, top to bottom, skipping blank (inner)
//! cells. A word induces a lattice path through its prefix weights: letter `v`
//! steps by `+e_v` and a barred letter `v~` by `-e_v`. Restriction to the
//! symplectic alphabet replaces a letter `v > n` by `2n - v + 1` barred and is
//! order preserving, so it sends semistandard fillings to semistandard
//! fillings and commutes with taking paths.

mod enumerate;
mod lr;

pub use enumerate::{skew_tableaux, ssyt_tableaux, SkewTableauxIter};
pub use lr::{
    is_lr, is_sundaram, lr_coeff, lr_tableaux, lrs_coeff, lrs_tableaux, pairing_shape,
};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weights::{dominant_a, dominant_c, EpsWeightA, EpsWeightC, Rank};

/// A letter of either alphabet. Type-A letters are never barred.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    value: u32,
    barred: bool,
}

impl Letter {
    pub fn plain(value: u32) -> Self {
        assert!(value >= 1, "letters start at 1");
        Letter { value, barred: false }
    }

    pub fn barred(value: u32) -> Self {
        assert!(value >= 1, "letters start at 1");
        Letter { value, barred: true }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// Sort key realizing `1 < ... < n < n~ < ... < 1~`: unbarred ascend by
    /// value, every barred letter exceeds every unbarred one, barred descend.
    fn key(self) -> (bool, i64) {
        let v = i64::from(self.value);
        (self.barred, if self.barred { -v } else { v })
    }

    fn parse(tok: &str) -> Result<Letter> {
        let (digits, barred) = match tok.strip_suffix('~') {
            Some(d) => (d, true),
            None => (tok, false),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
        if value == 0 {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Ok(Letter { value, barred })
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "~" } else { "" })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Alphabet {
    /// `1 < 2 < ... < 2n`, all letters plain.
    A,
    /// `1 < ... < n < n~ < ... < 1~`.
    C,
}

impl Alphabet {
    pub fn tag(self) -> &'static str {
        match self {
            Alphabet::A => "A",
            Alphabet::C => "C",
        }
    }
}

/// A finite letter sequence over a single alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if alphabet == Alphabet::A {
            if let Some(l) = letters.iter().find(|l| l.is_barred()) {
                return Err(Error::Parse(format!("barred letter {l} in a type-A word")));
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses the documented serialization: space-separated letters with `~`
    /// marking bars. A bare digit string without whitespace is also accepted
    /// ("1212" means 1 2 1 2).
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Word> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else if s.contains(char::is_whitespace) || s.contains('~') {
            s.split_whitespace().map(Letter::parse).collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| Letter::parse(&c.to_string()))
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(alphabet, letters)
    }

    /// Letter substitution defining restriction: `v` stays for `v <= n`,
    /// otherwise `v` becomes `2n - v + 1` barred. Only type-A words restrict.
    pub fn restrict(&self, n: Rank) -> Result<Word> {
        if self.alphabet != Alphabet::A {
            return Err(Error::AlphabetMismatch { expected: "A", got: "C" });
        }
        let letters = self
            .letters
            .iter()
            .map(|l| restrict_letter(*l, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { alphabet: Alphabet::C, letters })
    }

    /// The discrete trace of the word path: one prefix weight per letter.
    pub fn path_trace(&self, n: Rank) -> Result<PathTrace> {
        let dim = match self.alphabet {
            Alphabet::A => 2 * n.n() as usize,
            Alphabet::C => n.n() as usize,
        };
        let mut current = vec![0i64; dim];
        let mut prefixes = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let idx = l.value() as usize - 1;
            if idx >= dim || (self.alphabet == Alphabet::C && l.value() > n.n()) {
                return Err(Error::LetterOutOfRange {
                    letter: l.to_string(),
                    max: dim as u32,
                });
            }
            current[idx] += if l.is_barred() { -1 } else { 1 };
            prefixes.push(current.clone());
        }
        Ok(PathTrace { alphabet: self.alphabet, dim, prefixes })
    }

    /// True when every prefix weight is dominant for the word's alphabet.
    /// Checking prefixes suffices: each unit segment varies one coordinate
    /// linearly and the dominant chamber is convex.
    pub fn is_dominant(&self) -> bool {
        let max_value = self.letters.iter().map(|l| l.value()).max().unwrap_or(0) as usize;
        let mut counts = vec![0i64; max_value];
        for l in &self.letters {
            let idx = l.value() as usize - 1;
            counts[idx] += if l.is_barred() { -1 } else { 1 };
            let ok = match self.alphabet {
                Alphabet::A => dominant_a(&counts),
                Alphabet::C => dominant_c(&counts),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Endpoint of the path of a type-A word: the vector of letter counts.
    pub fn content(&self, n: Rank) -> Result<EpsWeightA> {
        if self.alphabet != Alphabet::A {
            return Err(Error::AlphabetMismatch { expected: "A", got: "C" });
        }
        let trace = self.path_trace(n)?;
        EpsWeightA::new(trace.endpoint(), n)
    }

    /// Endpoint of the path of a type-C word.
    pub fn endpoint(&self, n: Rank) -> Result<EpsWeightC> {
        if self.alphabet != Alphabet::C {
            return Err(Error::AlphabetMismatch { expected: "C", got: "A" });
        }
        let trace = self.path_trace(n)?;
        EpsWeightC::new(trace.endpoint(), n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

fn restrict_letter(l: Letter, n: Rank) -> Result<Letter> {
    let two_n = n.a_letters();
    if l.value() == 0 || l.value() > two_n || l.is_barred() {
        return Err(Error::LetterOutOfRange { letter: l.to_string(), max: two_n });
    }
    if l.value() <= n.n() {
        Ok(l)
    } else {
        Ok(Letter::barred(two_n - l.value() + 1))
    }
}

/// Prefix weights of a word path, one per letter consumed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathTrace {
    alphabet: Alphabet,
    dim: usize,
    prefixes: Vec<Vec<i64>>,
}

impl PathTrace {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn prefixes(&self) -> &[Vec<i64>] {
        &self.prefixes
    }

    pub fn endpoint(&self) -> Vec<i64> {
        self.prefixes.last().cloned().unwrap_or_else(|| vec![0; self.dim])
    }

    pub fn is_dominant(&self) -> bool {
        self.prefixes.iter().all(|p| match self.alphabet {
            Alphabet::A => dominant_a(p),
            Alphabet::C => dominant_c(p),
        })
    }
}

/// A straight or skew semistandard filling.
///
/// `rows[r]` holds the filled cells of row `r`, occupying columns
/// `inner[r]..outer[r]` (0-based). Every constructor enforces weakly
/// increasing rows and strictly increasing columns in the alphabet order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Tableau {
    alphabet: Alphabet,
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(
        alphabet: Alphabet,
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<Letter>>,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        if rows.len() != outer.len() {
            return Err(Error::NotSemistandard(format!(
                "{} entry rows for a {}-row shape",
                rows.len(),
                outer.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let expected = (outer.row(r) - inner.row(r)) as usize;
            if row.len() != expected {
                return Err(Error::NotSemistandard(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    expected
                )));
            }
            if alphabet == Alphabet::A && row.iter().any(|l| l.is_barred()) {
                return Err(Error::Parse("barred letter in a type-A tableau".into()));
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::NotSemistandard(format!(
                    "row {} is not weakly increasing",
                    r + 1
                )));
            }
        }
        let t = Tableau { alphabet, outer, inner, rows };
        for r in 1..t.outer.len() {
            for c in t.inner.row(r)..t.outer.row(r) {
                if let (Some(above), Some(here)) = (t.entry(r - 1, c), t.entry(r, c)) {
                    if above >= here {
                        return Err(Error::NotSemistandard(format!(
                            "column {} is not strictly increasing",
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Straight-shape type-A tableau from plain entry rows.
    pub fn straight_a(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
            .map_err(|_| Error::NotSemistandard("row lengths are not a partition".into()))?;
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Letter::plain).collect())
            .collect();
        Tableau::new(Alphabet::A, outer, Partition::empty(), rows)
    }

    pub(crate) fn from_enumerated(
        alphabet: Alphabet,
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<Letter>>,
    ) -> Self {
        debug_assert!(
            Tableau::new(alphabet, outer.clone(), inner.clone(), rows.clone()).is_ok(),
            "enumerated filling must be semistandard"
        );
        Tableau { alphabet, outer, inner, rows }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn entry_rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Entry at (row, col), 0-based; `None` on blank or out-of-shape cells.
    pub fn entry(&self, r: usize, c: u32) -> Option<Letter> {
        if r >= self.rows.len() || c < self.inner.row(r) || c >= self.outer.row(r) {
            return None;
        }
        Some(self.rows[r][(c - self.inner.row(r)) as usize])
    }

    /// Filled cells in word-reading order (right to left within each row, top
    /// row first), with 0-based coordinates.
    pub fn word_cells(&self) -> Vec<(usize, u32, Letter)> {
        let mut out = Vec::new();
        for r in 0..self.rows.len() {
            for c in (self.inner.row(r)..self.outer.row(r)).rev() {
                out.push((r, c, self.entry(r, c).expect("cell is filled")));
            }
        }
        out
    }

    /// The word of the filling: rows right to left, top to bottom, blanks skipped.
    pub fn word(&self) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.word_cells().into_iter().map(|(_, _, l)| l).collect(),
        }
    }

    /// Entrywise restriction of a type-A tableau; the shape is unchanged and
    /// the result is semistandard for the symplectic order.
    pub fn restrict(&self, n: Rank) -> Result<Tableau> {
        if self.alphabet != Alphabet::A {
            return Err(Error::AlphabetMismatch { expected: "A", got: "C" });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&l| restrict_letter(l, n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(Alphabet::C, self.outer.clone(), self.inner.clone(), rows)
    }

    /// Letter-count content of a type-A filling, indexed by letter value - 1.
    pub fn content_counts(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flatten()
            .map(|l| l.value())
            .max()
            .unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for l in self.rows.iter().flatten() {
            counts[l.value() as usize - 1] += 1;
        }
        counts
    }

    pub fn column(&self, c: u32) -> Vec<Letter> {
        (0..self.rows.len()).filter_map(|r| self.entry(r, c)).collect()
    }

    /// Parses the documented serialization: rows separated by `/`, entries
    /// space-separated, `~` marking bars, `.` for blank inner cells.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Tableau> {
        let s = s.trim();
        if s.is_empty() {
            return Tableau::new(alphabet, Partition::empty(), Partition::empty(), Vec::new());
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row_str in s.split('/') {
            let toks: Vec<&str> = row_str.split_whitespace().collect();
            let blanks = toks.iter().take_while(|&&t| t == ".").count();
            let entries = toks[blanks..]
                .iter()
                .map(|&t| {
                    if t == "." {
                        Err(Error::Parse("blank cell after an entry in the same row".into()))
                    } else {
                        Letter::parse(t)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            inner.push(blanks as u32);
            outer.push(toks.len() as u32);
            rows.push(entries);
        }
        let outer = Partition::new(outer).map_err(|e| Error::Parse(e.to_string()))?;
        let inner = Partition::new(inner).map_err(|e| Error::Parse(e.to_string()))?;
        Tableau::new(alphabet, outer, inner, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows.len() {
            if r > 0 {
                write!(f, "/")?;
            }
            let mut toks: Vec<String> = Vec::new();
            for _ in 0..self.inner.row(r) {
                toks.push(".".into());
            }
            for l in &self.rows[r] {
                toks.push(l.to_string());
            }
            write!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}
