//! Whether F-support containment survives scaling both shapes by a factor,
//! together with the known Schur-support counterexample.

use rayon::prelude::*;
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::shapes::{enumerate_shapes, Partition, SkewShape};
use crate::tableaux::schur_support;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurRegression {
    pub a: SkewShape,
    pub b: SkewShape,
    pub factor: u32,
    /// `ssupp(A) ⊇ ssupp(B)`.
    pub before: bool,
    /// `ssupp(fA) ⊇ ssupp(fB)`.
    pub after: bool,
    pub witness: Partition,
    pub witness_in_scaled_a: bool,
    pub witness_in_scaled_b: bool,
}

impl SchurRegression {
    /// Containment holds before scaling and the witness breaks it after.
    pub fn reproduced(&self) -> bool {
        self.before && !self.after && !self.witness_in_scaled_a && self.witness_in_scaled_b
    }
}

/// Schur supports do not scale: `ssupp(4311/21) ⊇ ssupp(4421/311)`, but
/// `633` lies in `ssupp(8842/622)` and not in `ssupp(8622/42)`.
pub fn schur_saturation_regression() -> Result<SchurRegression> {
    let a: SkewShape = "4,3,1,1/2,1".parse()?;
    let b: SkewShape = "4,4,2,1/3,1,1".parse()?;
    let witness: Partition = "6,3,3".parse()?;
    let (sa, sb) = (schur_support(&a)?, schur_support(&b)?);
    let (na, nb) = (a.scale(2), b.scale(2));
    let (sna, snb) = (schur_support(&na)?, schur_support(&nb)?);
    Ok(SchurRegression {
        before: sa.is_superset(&sb),
        after: sna.is_superset(&snb),
        witness_in_scaled_a: sna.contains(&witness),
        witness_in_scaled_b: snb.contains(&witness),
        a,
        b,
        factor: 2,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub n: usize,
    pub factor: u32,
    pub pairs: u64,
    /// Containment holds both before and after scaling.
    pub both: u64,
    pub neither: u64,
    pub before_only: Vec<(SkewShape, SkewShape)>,
    pub after_only: Vec<(SkewShape, SkewShape)>,
    /// Pairs whose overlap dominance is lost by scaling.
    pub dominance_not_preserved: Vec<(SkewShape, SkewShape)>,
    pub schur_regression: SchurRegression,
}

impl SaturationReport {
    /// Containment agreed before and after scaling on every pair.
    pub fn all_agree(&self) -> bool {
        self.before_only.is_empty() && self.after_only.is_empty()
    }
}

/// Compares `fsupp(A) ⊇ fsupp(B)` with `fsupp(fA) ⊇ fsupp(fB)` over all
/// ordered pairs of shapes of size `n`. Disagreements are data, not errors.
pub fn saturation_check(n: usize, factor: u32, limits: &Limits, cache: &ExpansionCache) -> Result<SaturationReport> {
    if factor == 0 {
        return Err(Error::InvalidShape("scale factor must be positive".into()));
    }
    limits.check(n.checked_mul(factor as usize).ok_or(Error::Overflow)?)?;
    let shapes = enumerate_shapes(n, limits)?;
    let scaled: Vec<SkewShape> = shapes.iter().map(|s| s.scale(factor)).collect();
    let before = shapes.par_iter().map(|s| cache.fsupp(s)).collect::<Result<Vec<_>>>()?;
    let after = scaled.par_iter().map(|s| cache.fsupp(s)).collect::<Result<Vec<_>>>()?;
    let prof: Vec<_> = shapes.iter().map(|s| cache.profile(s)).collect();
    let sprof: Vec<_> = scaled.iter().map(|s| cache.profile(s)).collect();

    let mut report = SaturationReport {
        n,
        factor,
        pairs: 0,
        both: 0,
        neither: 0,
        before_only: Vec::new(),
        after_only: Vec::new(),
        dominance_not_preserved: Vec::new(),
        schur_regression: schur_saturation_regression()?,
    };
    for i in 0..shapes.len() {
        for j in 0..shapes.len() {
            report.pairs += 1;
            let pair = || (shapes[i].clone(), shapes[j].clone());
            match (before[i].contains_support(&before[j]), after[i].contains_support(&after[j])) {
                (true, true) => report.both += 1,
                (false, false) => report.neither += 1,
                (true, false) => report.before_only.push(pair()),
                (false, true) => report.after_only.push(pair()),
            }
            if prof[i].rows_dominated_by(&prof[j]) && !sprof[i].rows_dominated_by(&sprof[j]) {
                report.dominance_not_preserved.push(pair());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_counterexample() {
        let r = schur_saturation_regression().unwrap();
        assert_eq!(r.a.scale(2).to_string(), "8,6,2,2/4,2");
        assert_eq!(r.b.scale(2).to_string(), "8,8,4,2/6,2,2");
        assert!(r.reproduced(), "{r:?}");
    }

    #[test]
    fn unit_factor_agrees() {
        let r = saturation_check(4, 1, &Limits::default(), &ExpansionCache::new()).unwrap();
        assert!(r.all_agree());
        assert!(r.dominance_not_preserved.is_empty());
    }

    #[test]
    fn doubling_size_four() {
        let r = saturation_check(4, 2, &Limits::default(), &ExpansionCache::new()).unwrap();
        assert!(r.all_agree(), "{r:?}");
        assert!(r.dominance_not_preserved.is_empty());
        assert_eq!(r.both + r.neither, r.pairs);
    }

    #[test]
    fn scaled_size_is_limited() {
        let err = saturation_check(8, 2, &Limits::default(), &ExpansionCache::new()).unwrap_err();
        assert_eq!(err, Error::ResourceLimit { size: 16, limit: 14 });
    }
}
