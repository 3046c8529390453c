//! The posets of shape classes under F-support containment and under
//! overlap dominance, and the checks built on them.

mod conjecture;
mod multfree;
mod saturation;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use fnv::FnvHashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::config::Limits;
use crate::error::Result;
use crate::shapes::{enumerate_shapes, SkewShape};

pub use conjecture::{merge_reports, verify_conjecture, ConjectureReport, PairRecord, SizeSummary};
pub use multfree::{
    multfree_check, multfree_classify, multfree_comparable, multfree_relation, MultFreeClass, MultFreeKind,
    MultFreeRelation, MultFreeReport, MultFreeSize,
};
pub use saturation::{saturation_check, schur_saturation_regression, SaturationReport, SchurRegression};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PosetKind {
    /// Classes of equal F-support, ordered by support containment.
    SuppF,
    /// Classes of equal overlap profile, ordered by overlap dominance.
    NC,
}

impl PosetKind {
    pub fn name(self) -> &'static str {
        match self {
            PosetKind::SuppF => "SuppF",
            PosetKind::NC => "NC",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeClass {
    /// Lexicographically least member.
    pub representative: SkewShape,
    /// Members in lexicographic order.
    pub members: Vec<SkewShape>,
}

/// Equivalence classes of the shapes of size `n` with a partial order.
/// Classes are sorted by representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeClassPoset {
    pub label: PosetKind,
    pub n: usize,
    pub classes: Vec<ShapeClass>,
    /// Pairs `(i, j)` with class `i` strictly above class `j`, sorted.
    pub relation: Vec<(usize, usize)>,
    /// Cover pairs `(i, j)` of the relation, sorted.
    pub hasse: Vec<(usize, usize)>,
}

/// Groups `shapes` (sorted) by `key`, keeping first-appearance order so each
/// class's first member is its least.
fn group_by_key<K: Eq + Hash>(shapes: &[SkewShape], keys: &[K]) -> (Vec<ShapeClass>, Vec<usize>) {
    let mut index: FnvHashMap<&K, usize> = FnvHashMap::default();
    let mut classes: Vec<ShapeClass> = Vec::new();
    let mut class_of = Vec::with_capacity(shapes.len());
    for (s, k) in shapes.iter().zip(keys) {
        let c = *index.entry(k).or_insert_with(|| {
            classes.push(ShapeClass { representative: s.clone(), members: Vec::new() });
            classes.len() - 1
        });
        classes[c].members.push(s.clone());
        class_of.push(c);
    }
    (classes, class_of)
}

/// Strict-above pairs and their cover pairs, given `above(i, j)` as a
/// reflexive-free partial order test on class indices.
type Edges = Vec<(usize, usize)>;

pub(crate) fn order_and_hasse(c: usize, above: impl Fn(usize, usize) -> bool + Sync) -> (Edges, Edges) {
    let below: Vec<FixedBitSet> = (0..c)
        .into_par_iter()
        .map(|i| {
            let mut b = FixedBitSet::with_capacity(c);
            for j in (0..c).filter(|&j| j != i && above(i, j)) {
                b.insert(j);
            }
            b
        })
        .collect();
    let relation = (0..c).flat_map(|i| below[i].ones().map(move |j| (i, j))).collect();
    let hasse = (0..c)
        .into_par_iter()
        .map(|i| {
            let mut covered = FixedBitSet::with_capacity(c);
            for k in below[i].ones() {
                covered.union_with(&below[k]);
            }
            let mut covers = below[i].clone();
            covers.difference_with(&covered);
            covers.ones().map(|j| (i, j)).collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    (relation, hasse)
}

impl ShapeClassPoset {
    /// Builds the poset from class keys and an order on keys.
    fn build<K: Eq + Hash + Sync>(
        label: PosetKind,
        n: usize,
        shapes: &[SkewShape],
        keys: &[K],
        geq: impl Fn(&K, &K) -> bool + Sync,
    ) -> Self {
        let (classes, class_of) = group_by_key(shapes, keys);
        let mut class_key: Vec<Option<&K>> = vec![None; classes.len()];
        for (i, &c) in class_of.iter().enumerate() {
            class_key[c].get_or_insert(&keys[i]);
        }
        let class_key: Vec<&K> = class_key.into_iter().map(|k| k.expect("every class has a member")).collect();
        let (relation, hasse) = order_and_hasse(classes.len(), |i, j| geq(class_key[i], class_key[j]));
        ShapeClassPoset { label, n, classes, relation, hasse }
    }

    /// Index of the class containing `shape`.
    pub fn class_of(&self, shape: &SkewShape) -> Option<usize> {
        self.classes.iter().position(|c| c.members.binary_search(shape).is_ok())
    }

    /// `true` if class `i` is strictly above class `j`.
    pub fn is_above(&self, i: usize, j: usize) -> bool {
        self.relation.binary_search(&(i, j)).is_ok()
    }

    /// The induced subposet on the classes satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&ShapeClass) -> bool) -> ShapeClassPoset {
        let kept: Vec<usize> = (0..self.classes.len()).filter(|&i| keep(&self.classes[i])).collect();
        let classes = kept.iter().map(|&i| self.classes[i].clone()).collect();
        let (relation, hasse) = order_and_hasse(kept.len(), |a, b| self.is_above(kept[a], kept[b]));
        ShapeClassPoset { label: self.label, n: self.n, classes, relation, hasse }
    }

    /// Hasse edges as `(upper, lower)` representative pairs.
    pub fn hasse_edges(&self) -> Vec<(SkewShape, SkewShape)> {
        self.hasse
            .iter()
            .map(|&(i, j)| (self.classes[i].representative.clone(), self.classes[j].representative.clone()))
            .collect()
    }

    /// Graphviz rendering of the Hasse diagram, larger classes drawn higher.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {}_{} {{", self.label.name(), self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, c) in self.classes.iter().enumerate() {
            writeln!(out, "  c{i} [label=\"{}\"];", c.representative).unwrap();
        }
        for &(i, j) in &self.hasse {
            writeln!(out, "  c{j} -> c{i};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Number of Hasse edges between each pair of class sizes, a compact
    /// fingerprint for regression checks.
    pub fn edge_profile(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &(i, j) in &self.hasse {
            *m.entry((self.classes[i].members.len(), self.classes[j].members.len())).or_insert(0) += 1;
        }
        m
    }
}

/// `SuppF_n`: classes of equal F-support, `[A] >= [B]` when
/// `fsupp(A) ⊇ fsupp(B)`.
pub fn build_suppf(n: usize, limits: &Limits, cache: &ExpansionCache) -> Result<ShapeClassPoset> {
    let shapes = enumerate_shapes(n, limits)?;
    let keys = shapes.par_iter().map(|s| cache.fsupp(s)).collect::<Result<Vec<_>>>()?;
    Ok(ShapeClassPoset::build(PosetKind::SuppF, n, &shapes, &keys, |a, b| a.contains_support(b)))
}

/// `NC_n`: classes of equal overlap profile, `[A] >= [B]` when
/// `rows_k(A) ⊴ rows_k(B)` for all `k`.
pub fn build_nc(n: usize, limits: &Limits, cache: &ExpansionCache) -> Result<ShapeClassPoset> {
    let shapes = enumerate_shapes(n, limits)?;
    let keys: Vec<_> = shapes.par_iter().map(|s| cache.profile(s)).collect();
    Ok(ShapeClassPoset::build(PosetKind::NC, n, &shapes, &keys, |a, b| a.rows_dominated_by(b)))
}

pub fn build_poset(kind: PosetKind, n: usize, limits: &Limits, cache: &ExpansionCache) -> Result<ShapeClassPoset> {
    match kind {
        PosetKind::SuppF => build_suppf(n, limits, cache),
        PosetKind::NC => build_nc(n, limits, cache),
    }
}
