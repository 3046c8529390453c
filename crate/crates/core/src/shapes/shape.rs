//! Skew shapes in basic form and the structural operations on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{fmt_parts, parse_parts, Composition, Partition};
use crate::error::{Error, Result};

/// A skew shape `outer / inner` in basic form: no empty rows and no empty
/// columns. Every diagram has exactly one such representative, so equality
/// of values is equality of diagrams up to translation.
///
/// Rows are numbered from the top, columns from the left, both from zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Half-open column range `[start, end)` occupied by one row.
pub type RowSpan = (u32, u32);

impl SkewShape {
    /// Builds the basic form of `outer / inner`, deleting empty rows and columns.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} does not fit inside {outer}")));
        }
        let spans: Vec<RowSpan> = (0..outer.len()).map(|i| (inner.part(i), outer.part(i))).collect();
        Ok(Self::from_monotone_spans(&spans))
    }

    pub fn straight(lambda: Partition) -> Self {
        Self::new(lambda, Partition::empty()).expect("the empty partition fits in any partition")
    }

    pub fn empty() -> Self {
        SkewShape::default()
    }

    /// Canonicalises row spans that are already weakly decreasing at both ends.
    pub(crate) fn from_monotone_spans(spans: &[RowSpan]) -> Self {
        let rows: Vec<RowSpan> = spans.iter().copied().filter(|(a, b)| a < b).collect();
        if rows.is_empty() {
            return SkewShape::empty();
        }
        let width = rows[0].1 as usize;
        let mut occupied = vec![false; width];
        for &(a, b) in &rows {
            for c in a..b {
                occupied[c as usize] = true;
            }
        }
        // new index of column c = number of occupied columns left of c
        let mut shift = vec![0u32; width + 1];
        for c in 0..width {
            shift[c + 1] = shift[c] + occupied[c] as u32;
        }
        let outer: Vec<u32> = rows.iter().map(|&(_, b)| shift[b as usize]).collect();
        let mut inner: Vec<u32> = rows.iter().map(|&(a, _)| shift[a as usize]).collect();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        SkewShape {
            outer: Partition::new(outer).expect("compressed spans keep outer decreasing"),
            inner: Partition::new(inner).expect("compressed spans keep inner decreasing"),
        }
    }

    /// Builds the basic form of an arbitrary set of boxes `(row, col)`.
    /// Fails unless the set is a skew diagram (possibly with empty rows or
    /// columns, which are removed).
    pub fn from_boxes<I: IntoIterator<Item = (u32, u32)>>(boxes: I) -> Result<Self> {
        let mut by_row: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (r, c) in boxes {
            by_row.entry(r).or_default().push(c);
        }
        let mut spans: Vec<(u32, RowSpan)> = Vec::with_capacity(by_row.len());
        for (r, mut cols) in by_row {
            cols.sort_unstable();
            cols.dedup();
            let (a, b) = (cols[0], cols[cols.len() - 1] + 1);
            if (b - a) as usize != cols.len() {
                return Err(Error::InvalidShape(format!("row {r} is not contiguous")));
            }
            spans.push((r, (a, b)));
        }
        for w in spans.windows(2) {
            let (r0, (a0, b0)) = w[0];
            let (r1, (a1, b1)) = w[1];
            if a0 < a1 || b0 < b1 {
                return Err(Error::InvalidShape(format!("rows {r0} and {r1} are not skew-aligned")));
            }
            if r1 > r0 + 1 && b1 > a0 {
                return Err(Error::InvalidShape(format!("column gap between rows {r0} and {r1}")));
            }
        }
        let spans: Vec<RowSpan> = spans.into_iter().map(|(_, s)| s).collect();
        Ok(Self::from_monotone_spans(&spans))
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(0) as usize
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Column span of each row, top to bottom.
    pub fn row_spans(&self) -> Vec<RowSpan> {
        (0..self.num_rows()).map(|i| (self.inner.part(i), self.outer.part(i))).collect()
    }

    /// Row lengths from top to bottom.
    pub fn row_lengths(&self) -> Vec<u32> {
        self.row_spans().into_iter().map(|(a, b)| b - a).collect()
    }

    /// Column lengths from left to right.
    pub fn col_lengths(&self) -> Vec<u32> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..self.num_cols()).map(|c| oc.part(c) - ic.part(c)).collect()
    }

    /// `rows(A)`: row lengths sorted into a partition.
    pub fn rows(&self) -> Partition {
        Partition::from_unsorted(self.row_lengths())
    }

    /// `cols(A)`: column lengths sorted into a partition.
    pub fn cols(&self) -> Partition {
        Partition::from_unsorted(self.col_lengths())
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.row_spans().into_iter().enumerate().flat_map(|(r, (a, b))| (a..b).map(move |c| (r as u32, c)))
    }

    pub fn contains_box(&self, row: u32, col: u32) -> bool {
        let r = row as usize;
        r < self.num_rows() && self.inner.part(r) <= col && col < self.outer.part(r)
    }

    /// `A^t = outer^t / inner^t`.
    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Antipodal rotation by 180 degrees.
    pub fn rotate(&self) -> SkewShape {
        let w = self.num_cols() as u32;
        let spans: Vec<RowSpan> = self.row_spans().into_iter().rev().map(|(a, b)| (w - b, w - a)).collect();
        Self::from_monotone_spans(&spans)
    }

    /// `self ⊕ other`: `self` placed immediately below and to the left of
    /// `other`, sharing no rows or columns.
    pub fn direct_sum(&self, other: &SkewShape) -> SkewShape {
        let shift = self.num_cols() as u32;
        let spans: Vec<RowSpan> =
            other.row_spans().into_iter().map(|(a, b)| (a + shift, b + shift)).chain(self.row_spans()).collect();
        Self::from_monotone_spans(&spans)
    }

    /// Deletes the leftmost box of every nonempty row, `times` times.
    pub fn trim(&self, times: usize) -> SkewShape {
        let mut spans = self.row_spans();
        for (a, b) in spans.iter_mut() {
            *a = (*a + times as u32).min(*b);
        }
        Self::from_monotone_spans(&spans)
    }

    /// `nA = n·outer / n·inner`.
    pub fn scale(&self, factor: u32) -> SkewShape {
        assert!(factor >= 1, "scale factor must be positive");
        SkewShape { outer: self.outer.scale(factor), inner: self.inner.scale(factor) }
    }

    /// `true` if adjacent rows always share exactly one column.
    pub fn is_ribbon(&self) -> bool {
        self.row_spans().windows(2).all(|w| w[1].1 == w[0].0 + 1)
    }

    /// A ribbon all of whose rows have length at least two.
    pub fn is_elongated_ribbon(&self) -> bool {
        !self.is_empty() && self.is_ribbon() && self.row_lengths().iter().all(|&l| l >= 2)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        fmt_parts(self.outer.parts(), f)?;
        if !self.inner.is_empty() {
            f.write_str("/")?;
            fmt_parts(self.inner.parts(), f)?;
        }
        Ok(())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `"5,5,3,1,1,1/3,1"`, `"2,2"`, or the digit shorthand `"553111/31"`.
    /// The result is always in basic form.
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        let decreasing = |d: &[u32]| d.iter().all(|&x| x > 0) && d.windows(2).all(|w| w[0] >= w[1]);
        let outer = Partition::new(parse_parts(o, decreasing)?)?;
        let inner = Partition::new(parse_parts(i, decreasing)?)?;
        SkewShape::new(outer, inner)
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A ribbon, determined by its row lengths read from top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ribbon {
    row_lengths: Composition,
}

impl Ribbon {
    pub fn new(row_lengths: Composition) -> Self {
        Ribbon { row_lengths }
    }

    pub fn from_shape(shape: &SkewShape) -> Option<Ribbon> {
        if shape.is_empty() || !shape.is_ribbon() {
            return None;
        }
        Some(Ribbon { row_lengths: Composition::new(shape.row_lengths()).expect("rows are nonempty") })
    }

    pub fn row_lengths(&self) -> &Composition {
        &self.row_lengths
    }

    pub fn shape(&self) -> SkewShape {
        // build bottom-up: each row starts in the last column of the row below
        let parts = self.row_lengths.parts();
        let mut spans = vec![(0u32, 0u32); parts.len()];
        let mut start = 0;
        for (i, &len) in parts.iter().enumerate().rev() {
            spans[i] = (start, start + len);
            start += len - 1;
        }
        SkewShape::from_monotone_spans(&spans)
    }

    /// `(rows(alpha), cols(alpha))`. The column lengths come from the
    /// complement of `S(alpha)` in `{1, ..., n-1}`.
    pub fn stats(&self) -> (Partition, Partition) {
        let n = self.row_lengths.size() as u32;
        let rows = self.row_lengths.sorted();
        if n == 0 {
            return (rows, Partition::empty());
        }
        let full = if n == 1 { 0 } else { (1u64 << (n - 1)) - 1 };
        let complement = !self.row_lengths.subset_mask() & full;
        let cols = Composition::from_mask(complement, n).sorted();
        (rows, cols)
    }
}
