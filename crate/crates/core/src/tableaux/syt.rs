use std::collections::BTreeSet;
use std::fmt;

use crate::config::check_hard_limit;
use crate::error::{Error, Result};
use crate::shapes::{Composition, RowSpan, SkewShape};

/// A standard Young tableau: the boxes of a skew shape filled with
/// `1..=n`, increasing along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: SkewShape,
    /// `rows[r][j]` is the entry in the `j`-th box of row `r` from the left.
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let spans = shape.row_spans();
        let n = shape.size();
        let bad = |why: String| Err(Error::InvalidShape(format!("not a standard tableau: {why}")));
        if rows.len() != spans.len() {
            return bad(format!("{} rows given for {} rows", rows.len(), spans.len()));
        }
        let mut seen = vec![false; n + 1];
        for (r, (row, &(a, b))) in rows.iter().zip(&spans).enumerate() {
            if row.len() != (b - a) as usize {
                return bad(format!("row {r} has the wrong length"));
            }
            for &e in row {
                if e == 0 || e as usize > n || std::mem::replace(&mut seen[e as usize], true) {
                    return bad(format!("entry {e} repeated or out of range"));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {r} does not increase"));
            }
        }
        let t = StandardTableau { shape, rows };
        for (r, &(a, b)) in spans.iter().enumerate().skip(1) {
            for c in a..b {
                if let Some(above) = t.entry(r as u32 - 1, c) {
                    if above >= t.entry(r as u32, c).unwrap() {
                        return bad(format!("column {c} does not increase at row {r}"));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in box `(row, col)`, if that box belongs to the shape.
    pub fn entry(&self, row: u32, col: u32) -> Option<u32> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        let start = self.shape.inner().part(row as usize);
        Some(self.rows[row as usize][(col - start) as usize])
    }

    /// Row holding each entry, indexed by `entry - 1`.
    fn row_of_entries(&self) -> Vec<u32> {
        let mut pos = vec![0; self.shape.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                pos[e as usize - 1] = r as u32;
            }
        }
        pos
    }

    /// Entries `i` with `i + 1` in a strictly lower row.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let pos = self.row_of_entries();
        (1..pos.len() as u32).filter(|&i| pos[i as usize] > pos[i as usize - 1]).collect()
    }

    pub fn descent_mask(&self) -> u64 {
        self.descent_set().into_iter().fold(0, |m, i| m | 1 << (i - 1))
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_mask(self.descent_mask(), self.shape.size() as u32)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.shape.size().to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            let indent = self.shape.inner().part(r) as usize;
            write!(f, "{}", " ".repeat(indent * (width + 1)))?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Streams every standard tableau of a shape, each once.
///
/// Entries are placed in increasing order by depth-first search over the
/// rows whose next box is addable; rows are tried top to bottom, which fixes
/// the output order.
pub struct SytIter {
    shape: SkewShape,
    spans: Vec<RowSpan>,
    filled: Vec<u32>,
    /// Row receiving entry `i + 1`.
    placed: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

impl SytIter {
    fn addable(&self, r: usize) -> bool {
        let (a, b) = self.spans[r];
        let col = a + self.filled[r];
        if col >= b {
            return false;
        }
        if r == 0 {
            return true;
        }
        let (pa, pb) = self.spans[r - 1];
        // box above is outside the shape, or already filled
        !(pa <= col && col < pb) || col < pa + self.filled[r - 1]
    }

    fn first_addable_from(&self, r: usize) -> Option<usize> {
        (r..self.spans.len()).find(|&r| self.addable(r))
    }

    fn place(&mut self, r: usize) {
        self.filled[r] += 1;
        self.placed.push(r);
    }

    fn descend(&mut self) {
        while self.placed.len() < self.n {
            let r = self.first_addable_from(0).expect("an unfilled skew shape has an addable box");
            self.place(r);
        }
    }

    fn current(&self) -> StandardTableau {
        let mut rows: Vec<Vec<u32>> = self.spans.iter().map(|&(a, b)| Vec::with_capacity((b - a) as usize)).collect();
        for (i, &r) in self.placed.iter().enumerate() {
            rows[r].push(i as u32 + 1);
        }
        StandardTableau { shape: self.shape.clone(), rows }
    }
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.current());
        }
        while let Some(r) = self.placed.pop() {
            self.filled[r] -= 1;
            if let Some(next) = self.first_addable_from(r + 1) {
                self.place(next);
                self.descend();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// All standard tableaux of `shape`, streamed in a fixed order.
pub fn enumerate_syt(shape: &SkewShape) -> Result<SytIter> {
    check_hard_limit(shape.size())?;
    let spans = shape.row_spans();
    Ok(SytIter {
        shape: shape.clone(),
        filled: vec![0; spans.len()],
        spans,
        placed: Vec::with_capacity(shape.size()),
        n: shape.size(),
        started: false,
        done: false,
    })
}
