//! F- and M-expansions of skew Schur functions.

use std::collections::hash_map::Entry;

use fixedbitset::FixedBitSet;
use fnv::FnvHashMap;

use super::expansion::{Basis, QsymExpansion};
use crate::config::check_hard_limit;
use crate::error::{Error, Result};
use crate::shapes::{Composition, SkewShape};

/// Number of standard tableaux of `shape` with each descent set, keyed by
/// descent mask.
///
/// Tableaux are built entry by entry; a partial tableau only matters through
/// how many boxes of each row are filled and which row holds the largest
/// entry, so partial tableaux sharing both are merged.
pub fn descent_counts(shape: &SkewShape) -> Result<FnvHashMap<u64, u64>> {
    check_hard_limit(shape.size())?;
    let n = shape.size();
    let spans = shape.row_spans();
    let mut out = FnvHashMap::default();
    if n == 0 {
        out.insert(0, 1);
        return Ok(out);
    }
    type Layer = FnvHashMap<(Vec<u8>, u8), FnvHashMap<u64, u64>>;
    let addable = |fill: &[u8], r: usize| -> bool {
        let (a, b) = spans[r];
        let col = a + fill[r] as u32;
        if col >= b {
            return false;
        }
        if r == 0 {
            return true;
        }
        let (pa, pb) = spans[r - 1];
        !(pa <= col && col < pb) || col < pa + fill[r - 1] as u32
    };
    let mut layer: Layer = FnvHashMap::default();
    let start = vec![0u8; spans.len()];
    for r in (0..spans.len()).filter(|&r| addable(&start, r)) {
        let mut fill = start.clone();
        fill[r] += 1;
        layer.entry((fill, r as u8)).or_default().insert(0, 1);
    }
    for placed in 1..n {
        let mut next: Layer = FnvHashMap::default();
        for ((fill, last), masks) in layer {
            for r in (0..spans.len()).filter(|&r| addable(&fill, r)) {
                let mut f = fill.clone();
                f[r] += 1;
                let bit = if r > last as usize { 1u64 << (placed - 1) } else { 0 };
                let target = next.entry((f, r as u8)).or_default();
                for (&m, &c) in &masks {
                    match target.entry(m | bit) {
                        Entry::Occupied(mut e) => {
                            *e.get_mut() = e.get().checked_add(c).ok_or(Error::Overflow)?;
                        }
                        Entry::Vacant(e) => {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    for (_, masks) in layer {
        for (m, c) in masks {
            let slot = out.entry(m).or_insert(0u64);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    Ok(out)
}

/// `s_A = sum over standard tableaux T of F_{comp(T)}`.
pub fn f_expansion(shape: &SkewShape) -> Result<QsymExpansion> {
    let n = shape.size();
    let counts = descent_counts(shape)?;
    let terms = counts.into_iter().map(|(m, c)| {
        let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
        Ok((comp_of_mask(m, n), c))
    });
    QsymExpansion::from_terms(Basis::F, n, terms.collect::<Result<Vec<_>>>()?)
}

fn comp_of_mask(mask: u64, n: usize) -> Composition {
    if n == 0 {
        Composition::new(Vec::new()).expect("empty composition")
    } else {
        Composition::from_mask(mask, n as u32)
    }
}

/// The F-support as a bitset over descent masks, for fast containment tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FSupport {
    n: usize,
    bits: FixedBitSet,
}

impl FSupport {
    pub fn of(shape: &SkewShape) -> Result<Self> {
        let n = shape.size();
        let mut bits = FixedBitSet::with_capacity(1usize << n.saturating_sub(1));
        for m in descent_counts(shape)?.into_keys() {
            bits.insert(m as usize);
        }
        Ok(FSupport { n, bits })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, alpha: &Composition) -> bool {
        alpha.size() == self.n && self.bits.contains(alpha.subset_mask() as usize)
    }

    /// `self ⊇ other`. Supports of different sizes are never comparable.
    pub fn contains_support(&self, other: &FSupport) -> bool {
        self.n == other.n && other.bits.is_subset(&self.bits)
    }

    /// Members in lexicographic order.
    pub fn compositions(&self) -> Vec<Composition> {
        let mut out: Vec<Composition> = self.bits.ones().map(|m| comp_of_mask(m as u64, self.n)).collect();
        out.sort();
        out
    }
}

/// Keys of the F-expansion.
pub fn f_support(shape: &SkewShape) -> Result<FSupport> {
    FSupport::of(shape)
}

/// Rewrites an F-expansion in the monomial basis using
/// `F_alpha = sum over T ⊇ S(alpha) of M_{comp(T)}`.
pub fn f_to_m(f: &QsymExpansion) -> Result<QsymExpansion> {
    if f.basis() != Basis::F {
        return Err(Error::InternalConsistency(format!("expected an F-expansion, got {}", f.basis())));
    }
    let n = f.size();
    check_hard_limit(n)?;
    if n == 0 {
        return QsymExpansion::from_terms(Basis::M, 0, f.terms().map(|(k, c)| (k.clone(), c)));
    }
    let mut dense = vec![0i64; 1usize << (n - 1)];
    for (alpha, c) in f.terms() {
        dense[alpha.subset_mask() as usize] = c;
    }
    // sum over subsets: afterwards dense[T] = sum of c_S over S ⊆ T
    for bit in 0..n - 1 {
        let b = 1usize << bit;
        for t in 0..dense.len() {
            if t & b != 0 {
                dense[t] = dense[t].checked_add(dense[t ^ b]).ok_or(Error::Overflow)?;
            }
        }
    }
    let terms = dense
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .map(|(t, c)| (Composition::from_mask(t as u64, n as u32), c));
    QsymExpansion::from_terms(Basis::M, n, terms)
}

/// Monomial expansion of `s_A`.
pub fn m_expansion(shape: &SkewShape) -> Result<QsymExpansion> {
    f_to_m(&f_expansion(shape)?)
}

/// `true` iff every F-coefficient of `s_A` is 0 or 1, i.e. all standard
/// tableaux of the shape have distinct descent sets.
pub fn is_f_multiplicity_free(shape: &SkewShape) -> Result<bool> {
    Ok(descent_counts(shape)?.values().all(|&c| c == 1))
}
