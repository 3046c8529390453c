//! Row and column overlap partitions, rectangle counts, and dominance order.
//!
//! For a shape with rows `r_1, ..., r_m`, `overlap_k(i)` is the number of
//! columns shared by the `k` consecutive rows starting at row `i`, and
//! `rows_k(A)` is the sorted list of the nonzero values of `overlap_k`.
//! `cols_l(A)` is the same statistic on the transpose, and `rects(k, l)`
//! counts `k x l` rectangles of boxes inside the shape.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// `lam ⊴ mu` in dominance order, allowing different sizes: every prefix sum
/// of `lam` (up to its length) is at most the matching prefix sum of `mu`
/// padded with zeros.
pub fn dominance_leq(lam: &Partition, mu: &Partition) -> bool {
    let mut sl = 0u64;
    let mut sm = 0u64;
    for (i, &p) in lam.parts().iter().enumerate() {
        sl += p as u64;
        sm += mu.part(i) as u64;
        if sl > sm {
            return false;
        }
    }
    true
}

/// Unsorted `overlap_k(i)` for `i = 1..=m-k+1`, zeros included.
fn raw_overlaps(shape: &SkewShape, k: usize) -> Vec<u32> {
    assert!(k >= 1, "overlap window must be at least one row");
    let spans = shape.row_spans();
    if k > spans.len() {
        return Vec::new();
    }
    // spans are monotone, so the common columns of rows i..i+k-1 run from
    // the start of row i to the end of row i+k-1
    (0..=spans.len() - k).map(|i| spans[i + k - 1].1.saturating_sub(spans[i].0)).collect()
}

/// `rows_k(A)`.
pub fn overlap_rows(shape: &SkewShape, k: usize) -> Partition {
    Partition::from_unsorted(raw_overlaps(shape, k))
}

/// `cols_l(A)`, i.e. `rows_l` of the transpose.
pub fn overlap_cols(shape: &SkewShape, l: usize) -> Partition {
    overlap_rows(&shape.transpose(), l)
}

/// Number of `k x l` rectangles of boxes contained in the shape, computed
/// from the row overlaps: a window of `k` rows sharing `o` columns holds
/// `o - l + 1` such rectangles.
pub fn rects(shape: &SkewShape, k: usize, l: usize) -> u64 {
    rects_from_rows(&overlap_rows(shape, k), l)
}

fn rects_from_rows(rows_k: &Partition, l: usize) -> u64 {
    rows_k.parts().iter().map(|&o| (o as u64 + 1).saturating_sub(l as u64)).sum()
}

/// The family `(rows_k(A))_k` for every `k` with `rows_k(A)` nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlapProfile {
    rows: Vec<Partition>,
}

impl OverlapProfile {
    pub fn of(shape: &SkewShape) -> Self {
        let rows = (1..=shape.num_rows()).map(|k| overlap_rows(shape, k)).take_while(|p| !p.is_empty()).collect();
        OverlapProfile { rows }
    }

    /// `rows_k`; empty for `k` beyond the profile.
    pub fn rows(&self, k: usize) -> Partition {
        assert!(k >= 1);
        self.rows.get(k - 1).cloned().unwrap_or_default()
    }

    /// Largest `k` with `rows_k` nonempty.
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// Width of the widest row; `rects(k, l)` vanishes for larger `l`.
    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |p| p.part(0) as usize)
    }

    pub fn rects(&self, k: usize, l: usize) -> u64 {
        rects_from_rows(&self.rows(k), l)
    }

    /// `cols_l` recovered from the rectangle counts: the number of column
    /// windows of width `l` sharing at least `k` rows is
    /// `rects(k, l) - rects(k + 1, l)`, and these counts form the conjugate
    /// of `cols_l`.
    pub fn cols(&self, l: usize) -> Partition {
        assert!(l >= 1);
        let conj: Vec<u32> = (1..=self.depth())
            .map(|k| (self.rects(k, l) - self.rects(k + 1, l)) as u32)
            .take_while(|&c| c > 0)
            .collect();
        Partition::new(conj).expect("window counts decrease in k").conjugate()
    }

    /// Largest `l` with `cols_l` nonempty.
    pub fn col_depth(&self) -> usize {
        self.width()
    }

    /// `rows_k(self) ⊴ rows_k(other)` for all `k`.
    pub fn rows_dominated_by(&self, other: &OverlapProfile) -> bool {
        (1..=self.depth()).all(|k| dominance_leq(&self.rows(k), &other.rows(k)))
    }

    /// `cols_l(self) ⊴ cols_l(other)` for all `l`.
    pub fn cols_dominated_by(&self, other: &OverlapProfile) -> bool {
        (1..=self.col_depth()).all(|l| dominance_leq(&self.cols(l), &other.cols(l)))
    }

    /// `rects(k, l)` of `self` at most that of `other`, for all `k`, `l`.
    pub fn rects_dominated_by(&self, other: &OverlapProfile) -> bool {
        (1..=self.depth()).all(|k| (1..=self.width()).all(|l| self.rects(k, l) <= other.rects(k, l)))
    }

    pub fn as_map(&self) -> BTreeMap<usize, &Partition> {
        self.rows.iter().enumerate().map(|(i, p)| (i + 1, p)).collect()
    }
}

impl Serialize for OverlapProfile {
    /// `{"rows": {"1": [...], "2": [...], ...}}` with keys in increasing `k`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a [Partition]);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (i, p) in self.0.iter().enumerate() {
                    m.serialize_entry(&(i + 1).to_string(), p)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("rows", &Rows(&self.rows))?;
        m.end()
    }
}

/// `rows_k(a) ⊴ rows_k(b)` for every `k`. Only defined for shapes of equal size.
pub fn overlaps_dominated(a: &SkewShape, b: &SkewShape) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(OverlapProfile::of(a).rows_dominated_by(&OverlapProfile::of(b)))
}

/// `rows_k(a) = rows_k(b)` for every `k`.
pub fn profile_equal(a: &SkewShape, b: &SkewShape) -> bool {
    OverlapProfile::of(a) == OverlapProfile::of(b)
}
