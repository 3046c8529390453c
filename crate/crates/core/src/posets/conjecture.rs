//! Exhaustive check that F-support containment and overlap dominance define
//! the same order on shapes of each size.

use std::collections::BTreeSet;
use std::hash::Hasher;
use std::sync::Arc;

use fnv::{FnvHashMap, FnvHasher};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::config::{Limits, Shard};
use crate::error::{Error, Result};
use crate::overlaps::OverlapProfile;
use crate::shapes::{enumerate_shapes, SkewShape};
use crate::tableaux::FSupport;

/// A representative pair standing for `count` ordered pairs of shapes with
/// the same F-supports and overlap profiles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PairRecord {
    pub a: SkewShape,
    pub b: SkewShape,
    pub count: u64,
}

/// Class counts for one size. These do not depend on the shard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub size: usize,
    pub shapes: usize,
    pub suppf_classes: usize,
    pub nc_classes: usize,
    /// Classes of shapes agreeing in both F-support and overlap profile.
    pub joint_classes: usize,
    /// The two class partitions coincide.
    pub partitions_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub shard_count: u32,
    /// Shard indices covered; a complete sweep is normalised to `1` of `1`.
    pub shards: Vec<u32>,
    /// Ordered shape pairs checked, over all sizes `1..=n`.
    pub pairs: u64,
    pub sizes: Vec<SizeSummary>,
    /// Containment without dominance. Impossible unless the implementation
    /// is wrong, since containment is known to force dominance.
    pub forward_violations: Vec<PairRecord>,
    /// Dominance without containment: a counterexample to the converse.
    pub reverse_counterexamples: Vec<PairRecord>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.forward_violations.is_empty()
            && self.reverse_counterexamples.is_empty()
            && self.sizes.iter().all(|s| s.partitions_equal)
    }

    pub fn is_complete(&self) -> bool {
        self.shard_count == 1
    }
}

fn pair_hash(a: &SkewShape, b: &SkewShape) -> u64 {
    let mut h = FnvHasher::default();
    h.write(a.to_string().as_bytes());
    h.write(b"|");
    h.write(b.to_string().as_bytes());
    h.finish()
}

fn intern<T: Eq + std::hash::Hash>(items: &[Arc<T>]) -> (Vec<usize>, usize) {
    let mut ids: FnvHashMap<&T, usize> = FnvHashMap::default();
    let out = items
        .iter()
        .map(|x| {
            let next = ids.len();
            *ids.entry(&**x).or_insert(next)
        })
        .collect();
    (out, ids.len())
}

struct Joint {
    rep: SkewShape,
    weight: u64,
    fsupp: Arc<FSupport>,
    profile: Arc<OverlapProfile>,
}

/// Checks, for every size `1..=n` and every ordered pair `(A, B)` owned by
/// `shard`, that `fsupp(A) ⊇ fsupp(B)` exactly when `rows_k(A) ⊴ rows_k(B)`
/// for all `k`.
///
/// Shapes sharing both F-support and profile are checked once through their
/// least member; the pair is owned by the shard of its representatives.
pub fn verify_conjecture(n: usize, limits: &Limits, cache: &ExpansionCache, shard: Shard) -> Result<ConjectureReport> {
    limits.check(n)?;
    let mut report = ConjectureReport {
        n,
        shard_count: shard.count,
        shards: vec![shard.index],
        pairs: 0,
        sizes: Vec::new(),
        forward_violations: Vec::new(),
        reverse_counterexamples: Vec::new(),
    };
    for size in 1..=n {
        let shapes = enumerate_shapes(size, limits)?;
        let fsupps = shapes.par_iter().map(|s| cache.fsupp(s)).collect::<Result<Vec<_>>>()?;
        let profiles: Vec<_> = shapes.par_iter().map(|s| cache.profile(s)).collect();
        let (fid, suppf_classes) = intern(&fsupps);
        let (pid, nc_classes) = intern(&profiles);

        let mut index: FnvHashMap<(usize, usize), usize> = FnvHashMap::default();
        let mut joint: Vec<Joint> = Vec::new();
        for i in 0..shapes.len() {
            let next = joint.len();
            let j = *index.entry((fid[i], pid[i])).or_insert(next);
            if j == next {
                joint.push(Joint {
                    rep: shapes[i].clone(),
                    weight: 0,
                    fsupp: Arc::clone(&fsupps[i]),
                    profile: Arc::clone(&profiles[i]),
                });
            }
            joint[j].weight += 1;
        }
        report.sizes.push(SizeSummary {
            size,
            shapes: shapes.len(),
            suppf_classes,
            nc_classes,
            joint_classes: joint.len(),
            partitions_equal: joint.len() == suppf_classes && joint.len() == nc_classes,
        });

        type Row = (u64, Vec<PairRecord>, Vec<PairRecord>);
        let rows: Vec<Row> = joint
            .par_iter()
            .map(|x| {
                let mut row: Row = (0, Vec::new(), Vec::new());
                for y in &joint {
                    if !shard.owns(pair_hash(&x.rep, &y.rep)) {
                        continue;
                    }
                    let count = x.weight * y.weight;
                    row.0 += count;
                    let contains = x.fsupp.contains_support(&y.fsupp);
                    let dominated = x.profile.rows_dominated_by(&y.profile);
                    if contains != dominated {
                        let rec = PairRecord { a: x.rep.clone(), b: y.rep.clone(), count };
                        if contains {
                            row.1.push(rec)
                        } else {
                            row.2.push(rec)
                        }
                    }
                }
                row
            })
            .collect();
        for (pairs, fwd, rev) in rows {
            report.pairs += pairs;
            report.forward_violations.extend(fwd);
            report.reverse_counterexamples.extend(rev);
        }
    }
    report.forward_violations.sort();
    report.reverse_counterexamples.sort();
    if shard.count == 1 {
        report.shards = vec![1];
    }
    Ok(report)
}

/// Combines reports over disjoint shard sets of the same sweep. Merging is
/// associative and commutative; once every shard is present the header is
/// normalised so the result equals the unsharded report.
pub fn merge_reports(reports: &[ConjectureReport]) -> Result<ConjectureReport> {
    let first = reports.first().ok_or_else(|| Error::InternalConsistency("no reports to merge".into()))?;
    let mut seen = BTreeSet::new();
    let mut out = ConjectureReport {
        n: first.n,
        shard_count: first.shard_count,
        shards: Vec::new(),
        pairs: 0,
        sizes: first.sizes.clone(),
        forward_violations: Vec::new(),
        reverse_counterexamples: Vec::new(),
    };
    for r in reports {
        if r.n != out.n || r.shard_count != out.shard_count || r.sizes != out.sizes {
            return Err(Error::InternalConsistency("reports come from different sweeps".into()));
        }
        for &s in &r.shards {
            if !seen.insert(s) {
                return Err(Error::InternalConsistency(format!("shard {s} appears twice")));
            }
        }
        out.pairs += r.pairs;
        out.forward_violations.extend(r.forward_violations.iter().cloned());
        out.reverse_counterexamples.extend(r.reverse_counterexamples.iter().cloned());
    }
    out.forward_violations.sort();
    out.reverse_counterexamples.sort();
    if seen.len() == out.shard_count as usize {
        out.shard_count = 1;
        out.shards = vec![1];
    } else {
        out.shards = seen.into_iter().collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_size() {
        let r = verify_conjecture(1, &Limits::default(), &ExpansionCache::new(), Shard::WHOLE).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs, 1);
        assert_eq!(r.sizes[0].suppf_classes, 1);
    }

    #[test]
    fn small_sizes_pass() {
        let r = verify_conjecture(6, &Limits::default(), &ExpansionCache::new(), Shard::WHOLE).unwrap();
        assert!(r.passed(), "{r:?}");
        let shapes: u64 = r.sizes.iter().map(|s| (s.shapes * s.shapes) as u64).sum();
        assert_eq!(r.pairs, shapes);
    }

    #[test]
    fn shards_merge_to_the_whole() {
        let cache = ExpansionCache::new();
        let limits = Limits::default();
        let whole = verify_conjecture(5, &limits, &cache, Shard::WHOLE).unwrap();
        let parts: Vec<_> =
            (1..=3).map(|i| verify_conjecture(5, &limits, &cache, Shard::new(i, 3).unwrap()).unwrap()).collect();
        assert!(merge_reports(&parts[..2]).unwrap().shard_count == 3);
        let left = merge_reports(&[merge_reports(&parts[..2]).unwrap(), parts[2].clone()]).unwrap();
        let right = merge_reports(&[parts[2].clone(), parts[0].clone(), parts[1].clone()]).unwrap();
        assert_eq!(left, whole);
        assert_eq!(right, whole);
        assert!(merge_reports(&[parts[0].clone(), parts[0].clone()]).is_err());
    }
}
