//! Partitions and compositions, and the bijection between compositions of
//! `n` and subsets of `{1, ..., n-1}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts `parts` into weakly decreasing order, dropping zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().take_while(|&&p| p > c).count() as u32).collect())
    }

    /// Multiplies every part by `factor`.
    pub fn scale(&self, factor: u32) -> Partition {
        assert!(factor >= 1, "scale factor must be positive");
        Partition(self.0.iter().map(|&p| p * factor).collect())
    }

    /// `true` if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All distinct rearrangements of the parts, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `S(alpha)`: the partial sums `alpha_1, alpha_1 + alpha_2, ...`, omitting the total.
    pub fn subset(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// `S(alpha)` packed as a bit mask, bit `i - 1` standing for element `i`.
    pub fn subset_mask(&self) -> u64 {
        let mut acc = 0;
        let mut mask = 0u64;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::subset`].
    pub fn from_subset(subset: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if n == 0 {
            return match subset.iter().next() {
                Some(&e) => Err(Error::InvalidSubset { element: e, n }),
                None => Ok(Composition(Vec::new())),
            };
        }
        if let Some(&e) = subset.iter().find(|&&e| e == 0 || e >= n) {
            return Err(Error::InvalidSubset { element: e, n });
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &e in subset.iter().chain(std::iter::once(&n)) {
            parts.push(e - prev);
            prev = e;
        }
        Ok(Composition(parts))
    }

    /// Inverse of [`Composition::subset_mask`] for a composition of `n >= 1`.
    pub fn from_mask(mask: u64, n: u32) -> Composition {
        debug_assert!(n >= 1 && mask >> (n - 1) == 0);
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut prev = 0;
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() + 1;
            parts.push(e - prev);
            prev = e;
            m &= m - 1;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// `rows(alpha)`: the parts sorted into weakly decreasing order.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    /// `true` if the parts are weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all(n: u32) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        let mut out: Vec<Composition> = (0..1u64 << (n - 1)).map(|m| Composition::from_mask(m, n)).collect();
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.0
    }
}

pub(crate) fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// Parses a list of parts in comma form (`"5,5,3"`), or as a digit string
/// (`"553"`) when there is no comma. A digit string is read digit by digit
/// when `accept_digits` approves that reading, and as one number otherwise.
pub(crate) fn parse_parts(s: &str, accept_digits: impl Fn(&[u32]) -> bool) -> Result<Vec<u32>> {
    let s = s.trim();
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        return s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| err("expected comma-separated integers")))
            .collect();
    }
    if !s.chars().all(|c| c.is_ascii_digit()) {
        return Err(err("expected digits"));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    if s.len() > 1 {
        let digits: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        if accept_digits(&digits) {
            return Ok(digits);
        }
    }
    s.parse::<u32>().map(|p| vec![p]).map_err(|_| err("integer out of range"))
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, |d| Partition::new(d.to_vec()).is_ok())?;
        Partition::new(parts)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, |d| d.iter().all(|&x| x > 0))?;
        Composition::new(parts)
    }
}

/// Parses a partition literal, panicking on malformed input.
#[macro_export]
macro_rules! partition {
    ($s:expr) => {
        $s.parse::<$crate::Partition>().expect("valid partition literal")
    };
}

/// Parses a composition literal, panicking on malformed input.
#[macro_export]
macro_rules! composition {
    ($s:expr) => {
        $s.parse::<$crate::Composition>().expect("valid composition literal")
    };
}
