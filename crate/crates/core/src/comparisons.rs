//! Every positivity, support and overlap relation between two skew Schur
//! functions, and an exhaustive check of the implications among them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::shapes::{enumerate_shapes, SkewShape};
use crate::tableaux::{QsymExpansion, SymExpansion};

/// One boolean per basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PerBasis {
    pub schur: bool,
    pub f: bool,
    pub m: bool,
    pub s: bool,
    pub d: bool,
}

/// All relations of the ordered pair `(A, B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RelationMatrix {
    /// `s_A - s_B` has no negative coefficient in the basis.
    pub positive: PerBasis,
    /// Support of `s_A` contains that of `s_B`; for D, nonzero coefficients.
    pub support: PerBasis,
    /// D-support containment with positive coefficients only.
    pub d_positive_support: bool,
    /// `rows_k(A) ⊴ rows_k(B)` for all `k`.
    pub rows_dominated: bool,
    /// `cols_l(A) ⊴ cols_l(B)` for all `l`.
    pub cols_dominated: bool,
    /// `rects(k, l)` of `A` at most that of `B` for all `k`, `l`.
    pub rects_dominated: bool,
}

type Arrow = (&'static str, fn(&RelationMatrix) -> bool);

fn implies(p: bool, q: bool) -> bool {
    !p || q
}

/// The implications that must hold for every pair of equal size.
pub const ARROWS: &[Arrow] = &[
    ("D-positive => Schur-positive", |r| implies(r.positive.d, r.positive.schur)),
    ("Schur-positive <=> S-positive", |r| r.positive.schur == r.positive.s),
    ("Schur-positive => F-positive", |r| implies(r.positive.schur, r.positive.f)),
    ("F-positive => M-positive", |r| implies(r.positive.f, r.positive.m)),
    ("Schur-positive => Schur-support", |r| implies(r.positive.schur, r.support.schur)),
    ("F-positive => F-support", |r| implies(r.positive.f, r.support.f)),
    ("M-positive => M-support", |r| implies(r.positive.m, r.support.m)),
    ("S-positive => S-support", |r| implies(r.positive.s, r.support.s)),
    ("D-positive => D-support", |r| implies(r.positive.d, r.support.d)),
    ("Schur-support <=> S-support", |r| r.support.schur == r.support.s),
    ("Schur-support <=> D-support", |r| r.support.schur == r.support.d),
    ("D-support conventions agree", |r| r.support.d == r.d_positive_support),
    ("Schur-support => F-support", |r| implies(r.support.schur, r.support.f)),
    ("F-support => M-support", |r| implies(r.support.f, r.support.m)),
    ("F-support => overlap dominance", |r| implies(r.support.f, r.rows_dominated)),
    ("rows dominance <=> cols dominance", |r| r.rows_dominated == r.cols_dominated),
    ("rows dominance <=> rects dominance", |r| r.rows_dominated == r.rects_dominated),
];

impl RelationMatrix {
    /// Names of the implications this pair violates.
    pub fn violated_arrows(&self) -> Vec<&'static str> {
        ARROWS.iter().filter(|(_, holds)| !holds(self)).map(|(name, _)| *name).collect()
    }

    pub fn overlap_dominated(&self) -> bool {
        self.rows_dominated
    }
}

fn check_sizes(a: &SkewShape, b: &SkewShape) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

/// Computes the matrix without checking the implications.
pub fn relate_unchecked(cache: &ExpansionCache, a: &SkewShape, b: &SkewShape) -> Result<RelationMatrix> {
    check_sizes(a, b)?;
    let (sa, sb) = (cache.schur(a)?, cache.schur(b)?);
    let (fa, fb) = (cache.f(a)?, cache.f(b)?);
    let (ma, mb) = (cache.m(a)?, cache.m(b)?);
    let (qa, qb) = (cache.s(a)?, cache.s(b)?);
    let (da, db) = (cache.d(a)?, cache.d(b)?);
    let (pa, pb) = (cache.profile(a), cache.profile(b));
    Ok(RelationMatrix {
        positive: PerBasis {
            schur: sa.difference(&sb)?.is_nonnegative(),
            f: fa.difference(&fb)?.is_nonnegative(),
            m: ma.difference(&mb)?.is_nonnegative(),
            s: qa.difference(&qb)?.is_nonnegative(),
            d: da.difference(&db)?.is_nonnegative(),
        },
        support: PerBasis {
            schur: sa.support_contains(&sb),
            f: cache.fsupp(a)?.contains_support(&*cache.fsupp(b)?),
            m: ma.support_contains(&mb),
            s: qa.support_contains(&qb),
            d: da.support_contains(&db),
        },
        d_positive_support: da.positive_support_contains(&db),
        rows_dominated: pa.rows_dominated_by(&pb),
        cols_dominated: pa.cols_dominated_by(&pb),
        rects_dominated: pa.rects_dominated_by(&pb),
    })
}

/// The relation matrix of `(A, B)`. Fails with an implication violation if
/// any arrow of [`ARROWS`] does not hold.
pub fn relate(a: &SkewShape, b: &SkewShape) -> Result<RelationMatrix> {
    let r = relate_unchecked(&ExpansionCache::new(), a, b)?;
    if let Some(arrow) = r.violated_arrows().first() {
        return Err(Error::ImplicationViolation { a: a.to_string(), b: b.to_string(), arrow: arrow.to_string() });
    }
    Ok(r)
}

/// Expansions of one shape in every basis, dumped with violations.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeExpansions {
    pub shape: SkewShape,
    pub schur: SymExpansion,
    pub f: QsymExpansion,
    pub m: QsymExpansion,
    pub s: QsymExpansion,
    pub d: QsymExpansion,
}

impl ShapeExpansions {
    pub fn of(cache: &ExpansionCache, shape: &SkewShape) -> Result<Self> {
        Ok(ShapeExpansions {
            shape: shape.clone(),
            schur: (*cache.schur(shape)?).clone(),
            f: (*cache.f(shape)?).clone(),
            m: (*cache.m(shape)?).clone(),
            s: (*cache.s(shape)?).clone(),
            d: (*cache.d(shape)?).clone(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub a: SkewShape,
    pub b: SkewShape,
    pub arrows: Vec<&'static str>,
    pub expansions: [ShapeExpansions; 2],
}

/// A pair showing that an implication is not among the true ones.
#[derive(Clone, Debug)]
pub struct Witness {
    pub name: &'static str,
    pub a: &'static str,
    pub b: &'static str,
    /// Premise holds and conclusion fails.
    pub check: fn(&RelationMatrix) -> bool,
}

/// The four non-implications that make the implication diagram complete.
pub fn witnesses() -> Vec<Witness> {
    vec![
        Witness {
            name: "M-positive =/=> overlap dominance",
            a: "3",
            b: "1,1,1",
            check: |r| r.positive.m && !r.rows_dominated,
        },
        Witness {
            name: "overlap dominance =/=> M-positive",
            a: "3,1,1/1",
            b: "3,2/1",
            check: |r| r.rows_dominated && !r.positive.m,
        },
        Witness {
            name: "F-positive =/=> Schur-support",
            a: "3,1,1/1",
            b: "2,2",
            check: |r| r.positive.f && !r.support.schur,
        },
        Witness {
            name: "Schur-support =/=> M-positive",
            a: "4,2,1/2",
            b: "4,3,1/2,1",
            check: |r| r.support.schur && !r.positive.m,
        },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Figure6Report {
    pub n: usize,
    /// Ordered pairs checked, over all sizes `1..=n`.
    pub pairs: u64,
    pub violations: Vec<Violation>,
    /// Whether each non-implication witness of size `<= n` was met by the
    /// sweep and behaves as a counterexample.
    pub witnesses_found: BTreeMap<&'static str, bool>,
}

impl Figure6Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.witnesses_found.values().all(|&w| w)
    }
}

/// Checks every arrow on all ordered pairs of shapes of equal size `<= n`,
/// and confirms the non-implication witnesses.
pub fn verify_figure6(n: usize, limits: &Limits, cache: &ExpansionCache) -> Result<Figure6Report> {
    let mut pairs = 0u64;
    let mut violations = Vec::new();
    // witnesses larger than the sweep are out of reach and not reported
    let wit: Vec<Witness> =
        witnesses().into_iter().filter(|w| w.a.parse::<SkewShape>().expect("valid witness").size() <= n).collect();
    let targets: Vec<(SkewShape, SkewShape)> =
        wit.iter().map(|w| (w.a.parse().expect("valid witness"), w.b.parse().expect("valid witness"))).collect();
    let mut found: BTreeMap<&'static str, bool> = wit.iter().map(|w| (w.name, false)).collect();
    for size in 1..=n {
        let shapes = enumerate_shapes(size, limits)?;
        shapes.par_iter().try_for_each(|s| cache.d(s).and(cache.f(s)).map(|_| ()))?;
        let rows: Vec<Vec<(usize, RelationMatrix)>> = shapes
            .par_iter()
            .map(|a| {
                shapes
                    .iter()
                    .enumerate()
                    .map(|(j, b)| relate_unchecked(cache, a, b).map(|r| (j, r)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for (i, row) in rows.iter().enumerate() {
            for &(j, ref r) in row {
                pairs += 1;
                let arrows = r.violated_arrows();
                if !arrows.is_empty() {
                    violations.push(Violation {
                        a: shapes[i].clone(),
                        b: shapes[j].clone(),
                        arrows,
                        expansions: [ShapeExpansions::of(cache, &shapes[i])?, ShapeExpansions::of(cache, &shapes[j])?],
                    });
                }
                for (w, (ta, tb)) in wit.iter().zip(&targets) {
                    if ta == &shapes[i] && tb == &shapes[j] && (w.check)(r) {
                        found.insert(w.name, true);
                    }
                }
            }
        }
    }
    Ok(Figure6Report { n, pairs, violations, witnesses_found: found })
}
