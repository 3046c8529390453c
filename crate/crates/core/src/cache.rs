//! Shared memo of per-shape expansions for sweeps over many pairs.

use std::hash::Hash;
use std::sync::{Arc, RwLock};

use fnv::FnvHashMap;

use crate::error::Result;
use crate::overlaps::OverlapProfile;
use crate::qsym::{d_from_schur, s_from_schur};
use crate::shapes::SkewShape;
use crate::tableaux::{f_expansion, f_to_m, schur_expansion_lr, FSupport, QsymExpansion, SymExpansion};

struct Memo<K, V> {
    map: RwLock<FnvHashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Memo { map: RwLock::new(FnvHashMap::default()) }
    }

    fn get_or_try(&self, key: &K, compute: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(key) {
            return Ok(Arc::clone(v));
        }
        // computed outside the lock; a racing insert of the same value is harmless
        let v = Arc::new(compute()?);
        let mut map = self.map.write().expect("memo lock poisoned");
        Ok(Arc::clone(map.entry(key.clone()).or_insert(v)))
    }

    fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }
}

/// Thread-safe memo of expansions keyed by shape. Each value is computed at
/// most a handful of times even under contention and never changes.
pub struct ExpansionCache {
    f: Memo<SkewShape, QsymExpansion>,
    m: Memo<SkewShape, QsymExpansion>,
    schur: Memo<SkewShape, SymExpansion>,
    s: Memo<SkewShape, QsymExpansion>,
    d: Memo<SkewShape, QsymExpansion>,
    fsupp: Memo<SkewShape, FSupport>,
    profile: Memo<SkewShape, OverlapProfile>,
}

impl Default for ExpansionCache {
    fn default() -> Self {
        Self::new()
    }
}

impl ExpansionCache {
    pub fn new() -> Self {
        ExpansionCache {
            f: Memo::new(),
            m: Memo::new(),
            schur: Memo::new(),
            s: Memo::new(),
            d: Memo::new(),
            fsupp: Memo::new(),
            profile: Memo::new(),
        }
    }

    pub fn f(&self, shape: &SkewShape) -> Result<Arc<QsymExpansion>> {
        self.f.get_or_try(shape, || f_expansion(shape))
    }

    pub fn m(&self, shape: &SkewShape) -> Result<Arc<QsymExpansion>> {
        self.m.get_or_try(shape, || f_to_m(&*self.f(shape)?))
    }

    pub fn schur(&self, shape: &SkewShape) -> Result<Arc<SymExpansion>> {
        self.schur.get_or_try(shape, || schur_expansion_lr(shape))
    }

    pub fn s(&self, shape: &SkewShape) -> Result<Arc<QsymExpansion>> {
        self.s.get_or_try(shape, || s_from_schur(&*self.schur(shape)?))
    }

    pub fn d(&self, shape: &SkewShape) -> Result<Arc<QsymExpansion>> {
        self.d.get_or_try(shape, || d_from_schur(&*self.schur(shape)?))
    }

    pub fn fsupp(&self, shape: &SkewShape) -> Result<Arc<FSupport>> {
        self.fsupp.get_or_try(shape, || FSupport::of(shape))
    }

    pub fn profile(&self, shape: &SkewShape) -> Arc<OverlapProfile> {
        self.profile.get_or_try(shape, || Ok(OverlapProfile::of(shape))).expect("profiles cannot fail")
    }

    /// Number of shapes with a memoised F-support.
    pub fn fsupp_len(&self) -> usize {
        self.fsupp.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rayon::prelude::*;

    #[test]
    fn concurrent_lookups_agree() {
        let cache = ExpansionCache::new();
        let shape: SkewShape = "553111/31".parse().unwrap();
        let results: Vec<_> = (0..16).into_par_iter().map(|_| cache.f(&shape).unwrap()).collect();
        let direct = f_expansion(&shape).unwrap();
        assert!(results.iter().all(|r| **r == direct));
        assert_eq!(*cache.m(&shape).unwrap(), crate::tableaux::m_expansion(&shape).unwrap());
        assert_eq!(*cache.d(&shape).unwrap(), crate::qsym::d_expansion(&shape).unwrap());
        assert_eq!(cache.fsupp(&shape).unwrap().len(), direct.len());
    }
}
