//! Shapes all of whose standard tableaux have distinct descent sets, and
//! the F-support containments among them.

use rayon::prelude::*;
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::shapes::{enumerate_shapes, Partition, SkewShape};
use crate::tableaux::is_f_multiplicity_free;

/// The families of F-multiplicity-free shapes, up to transpose and
/// rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MultFreeKind {
    /// `(3,3)`, size 6.
    ThreeThree,
    /// `(4,4)`, size 8.
    FourFour,
    /// `(n-2,2)`, `n >= 4`.
    TwoRow,
    /// `(n-leg, 1^leg)`, `0 <= leg <= n-1`.
    Hook { leg: usize },
    /// `(1^leg) ⊕ (n-leg)`, `1 <= leg <= n-1`.
    ColumnRow { leg: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultFreeClass {
    pub kind: MultFreeKind,
    pub n: usize,
    /// The shape matched after rotating (applied before transposing).
    pub rotated: bool,
    pub transposed: bool,
}

fn straight(parts: Vec<u32>) -> SkewShape {
    SkewShape::straight(Partition::new(parts).expect("weakly decreasing parts"))
}

/// `(n-leg, 1^leg)`.
pub(crate) fn hook(n: usize, leg: usize) -> SkewShape {
    let mut parts = vec![(n - leg) as u32];
    parts.extend(std::iter::repeat_n(1, leg));
    straight(parts)
}

/// `(1^leg) ⊕ (n-leg)`.
pub(crate) fn column_row(n: usize, leg: usize) -> SkewShape {
    straight(vec![1; leg]).direct_sum(&straight(vec![(n - leg) as u32]))
}

fn kind_of(shape: &SkewShape) -> Option<MultFreeKind> {
    let n = shape.size();
    let outer = shape.outer().parts();
    if shape.is_straight() {
        return match outer {
            [3, 3] => Some(MultFreeKind::ThreeThree),
            [4, 4] => Some(MultFreeKind::FourFour),
            [_, 2] if n >= 4 => Some(MultFreeKind::TwoRow),
            [_, rest @ ..] if rest.iter().all(|&p| p == 1) => Some(MultFreeKind::Hook { leg: rest.len() }),
            _ => None,
        };
    }
    // (1^leg) ⊕ (m) is (m+1, 1^leg) / (1)
    let leg = outer.len() - 1;
    let is_column_row = shape.inner().parts() == [1] && leg >= 1 && outer[0] >= 2 && outer[1..].iter().all(|&p| p == 1);
    is_column_row.then_some(MultFreeKind::ColumnRow { leg })
}

/// The family of `A` if `A` is F-multiplicity-free. The candidates `A`,
/// `A°`, `A^t`, `(A°)^t` are tried in that order.
pub fn multfree_classify(shape: &SkewShape) -> Option<MultFreeClass> {
    if shape.is_empty() {
        return None;
    }
    let rot = shape.rotate();
    let candidates = [
        (shape.clone(), false, false),
        (rot.clone(), true, false),
        (shape.transpose(), false, true),
        (rot.transpose(), true, true),
    ];
    candidates.into_iter().find_map(|(c, rotated, transposed)| {
        kind_of(&c).map(|kind| MultFreeClass { kind, n: shape.size(), rotated, transposed })
    })
}

/// How `s_A - s_B` compares for F-multiplicity-free `A`, `B` of equal size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MultFreeRelation {
    /// `s_A = s_B`, i.e. `B ∈ {A, A°}`.
    Equal,
    /// `fsupp(A) ⊋ fsupp(B)`, through the named case:
    /// (a) `A = (1^l) ⊕ (n-l)`, `B` one of the hooks `(n-l, 1^l)`, `(n-l+1, 1^(l-1))`;
    /// (b) `A = (1^2) ⊕ (n-2)`, `B = (n-2, 2)`;
    /// (c) `A = (1^(n-2)) ⊕ (2)`, `B = (2, 2, 1^(n-4))`.
    Above { case: char },
    /// `fsupp(A) ⊉ fsupp(B)`.
    NotAbove,
}

fn same_up_to_rotation(x: &SkewShape, y: &SkewShape) -> bool {
    x == y || &x.rotate() == y
}

/// The predicted F-support relation of `(A, B)`, from the shapes alone.
pub fn multfree_relation(a: &SkewShape, b: &SkewShape) -> Result<MultFreeRelation> {
    for s in [a, b] {
        if multfree_classify(s).is_none() {
            return Err(Error::NotMultiplicityFree(s.to_string()));
        }
    }
    let n = a.size();
    if b.size() != n {
        return Err(Error::SizeMismatch { left: n, right: b.size() });
    }
    if same_up_to_rotation(a, b) {
        return Ok(MultFreeRelation::Equal);
    }
    let Some(leg) = (1..n).find(|&l| same_up_to_rotation(a, &column_row(n, l))) else {
        return Ok(MultFreeRelation::NotAbove);
    };
    let is = |target: SkewShape| same_up_to_rotation(b, &target);
    let case = if is(hook(n, leg)) || is(hook(n, leg - 1)) {
        Some('a')
    } else if n >= 4 && leg == 2 && is(straight(vec![n as u32 - 2, 2])) {
        Some('b')
    } else if n >= 4 && leg == n - 2 && is(straight(vec![n as u32 - 2, 2]).transpose()) {
        Some('c')
    } else {
        None
    };
    Ok(case.map_or(MultFreeRelation::NotAbove, |case| MultFreeRelation::Above { case }))
}

/// `true` when `fsupp(A) ⊇ fsupp(B)` is predicted, counting `s_A = s_B`.
pub fn multfree_comparable(a: &SkewShape, b: &SkewShape) -> Result<bool> {
    Ok(multfree_relation(a, b)? != MultFreeRelation::NotAbove)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultFreeSize {
    pub size: usize,
    pub shapes: usize,
    pub classified: Vec<(SkewShape, MultFreeClass)>,
    /// Shapes where the classification disagrees with the tableau count.
    pub classify_mismatches: Vec<SkewShape>,
    /// Ordered pairs of multiplicity-free shapes checked.
    pub pairs: u64,
    /// Pairs where the predicted relation, F-support containment and
    /// F-positivity do not all agree.
    pub relation_mismatches: Vec<(SkewShape, SkewShape)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultFreeReport {
    pub n: usize,
    pub sizes: Vec<MultFreeSize>,
}

impl MultFreeReport {
    pub fn passed(&self) -> bool {
        self.sizes.iter().all(|s| s.classify_mismatches.is_empty() && s.relation_mismatches.is_empty())
    }
}

/// For each size `1..=n`, checks the classification against brute force
/// and the predicted comparabilities against computed F-expansions.
pub fn multfree_check(n: usize, limits: &Limits, cache: &ExpansionCache) -> Result<MultFreeReport> {
    let mut sizes = Vec::new();
    for size in 1..=n {
        let shapes = enumerate_shapes(size, limits)?;
        let flags = shapes
            .par_iter()
            .map(|s| Ok((multfree_classify(s), is_f_multiplicity_free(s)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut classified = Vec::new();
        let mut classify_mismatches = Vec::new();
        for (s, (class, brute)) in shapes.iter().zip(flags) {
            if class.is_some() != brute {
                classify_mismatches.push(s.clone());
            }
            if let (Some(c), true) = (class, brute) {
                classified.push((s.clone(), c));
            }
        }
        let mut pairs = 0;
        let mut relation_mismatches = Vec::new();
        for (a, _) in &classified {
            for (b, _) in &classified {
                pairs += 1;
                let predicted = multfree_comparable(a, b)?;
                let contains = cache.fsupp(a)?.contains_support(&*cache.fsupp(b)?);
                let positive = cache.f(a)?.difference(&*cache.f(b)?)?.is_nonnegative();
                if predicted != contains || contains != positive {
                    relation_mismatches.push((a.clone(), b.clone()));
                }
            }
        }
        sizes.push(MultFreeSize {
            size,
            shapes: shapes.len(),
            classified,
            classify_mismatches,
            pairs,
            relation_mismatches,
        });
    }
    Ok(MultFreeReport { n, sizes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(column_row(4, 2), sh("311/1"));
        assert_eq!(column_row(5, 2), sh("411/1"));
        assert_eq!(hook(5, 2), sh("311"));
        let c = multfree_classify(&sh("311/1")).unwrap();
        assert_eq!((c.kind, c.n, c.rotated, c.transposed), (MultFreeKind::ColumnRow { leg: 2 }, 4, false, false));
        assert_eq!(multfree_classify(&sh("6")).unwrap().kind, MultFreeKind::Hook { leg: 0 });
        assert_eq!(multfree_classify(&sh("222")).unwrap().kind, MultFreeKind::ThreeThree);
        assert!(multfree_classify(&sh("222")).unwrap().transposed);
        assert!(multfree_classify(&sh("32/1")).is_none());
        assert!(!crate::tableaux::is_f_multiplicity_free(&sh("32/1")).unwrap());
        assert!(multfree_classify(&sh("321/11")).is_none());
        // (1^2) ⊕ (2) rotated: the row sits below-left of the column
        let c = multfree_classify(&sh("311/1").rotate()).unwrap();
        assert_eq!(c.kind, MultFreeKind::ColumnRow { leg: 2 });
        assert!(c.rotated);
    }

    #[test]
    fn comparabilities() {
        use MultFreeRelation::*;
        assert_eq!(multfree_relation(&sh("411/1"), &sh("32")).unwrap(), Above { case: 'b' });
        assert_eq!(multfree_relation(&sh("411/1"), &sh("311")).unwrap(), Above { case: 'a' });
        assert_eq!(multfree_relation(&sh("411/1"), &sh("41")).unwrap(), Above { case: 'a' });
        assert_eq!(multfree_relation(&sh("3111/1"), &sh("221")).unwrap(), Above { case: 'c' });
        assert_eq!(multfree_relation(&sh("32"), &sh("411/1")).unwrap(), NotAbove);
        assert_eq!(multfree_relation(&sh("411/1"), &sh("411/1").rotate()).unwrap(), Equal);
        for b in ["6", "51", "42", "411", "222", "2211", "61/1", "511/1"] {
            assert!(!multfree_comparable(&sh("33"), &sh(b)).unwrap());
        }
        assert!(matches!(multfree_relation(&sh("321/11"), &sh("22")), Err(Error::NotMultiplicityFree(_))));
        assert!(matches!(multfree_relation(&sh("3"), &sh("22")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn small_check_passes() {
        let r = multfree_check(6, &Limits::default(), &ExpansionCache::new()).unwrap();
        assert!(r.passed(), "{r:?}");
        // size 3: all shapes except the three disjoint boxes 321/21
        assert_eq!(r.sizes[2].classified.len(), r.sizes[2].shapes - 1);
    }
}
