//! Exhaustive cross-checks of the Schur, F, M, S and D expansions.

use std::collections::BTreeSet;

use skewsupp::qsym::{d_expansion, d_of_schur, s_expansion};
use skewsupp::shapes::enumerate_shapes;
use skewsupp::tableaux::{
    descent_counts, enumerate_syt, extreme_filling_antidominant, extreme_filling_dominant, f_expansion, f_support,
    m_expansion, schur_expansion_kostka, schur_expansion_lr,
};
use skewsupp::{
    dominance_leq, Basis, Composition, Limits, OverlapProfile, Partition, QsymExpansion, Ribbon, SkewShape,
};

fn shapes(n: usize) -> Vec<SkewShape> {
    enumerate_shapes(n, &Limits::default()).unwrap()
}

#[test]
fn littlewood_richardson_matches_kostka_inversion() {
    for n in 1..=7 {
        for a in shapes(n) {
            assert_eq!(schur_expansion_lr(&a).unwrap(), schur_expansion_kostka(&a).unwrap(), "{a}");
        }
    }
}

#[test]
fn f_expansion_is_the_sum_over_schur_terms() {
    for n in 1..=7 {
        for a in shapes(n) {
            let mut total = QsymExpansion::zero(Basis::F, n);
            for (lam, c) in schur_expansion_lr(&a).unwrap().terms() {
                for (alpha, d) in f_expansion(&SkewShape::straight(lam.clone())).unwrap().terms() {
                    total.add_term(alpha.clone(), c * d).unwrap();
                }
            }
            assert_eq!(f_expansion(&a).unwrap(), total, "{a}");
        }
    }
}

#[test]
fn f_expansion_counts_tableaux() {
    for n in 1..=6 {
        for a in shapes(n) {
            let tableaux: Vec<_> = enumerate_syt(&a).unwrap().collect();
            assert_eq!(f_expansion(&a).unwrap().total(), tableaux.len() as i64);
            let distinct: BTreeSet<_> = tableaux.iter().map(|t| t.rows().to_vec()).collect();
            assert_eq!(distinct.len(), tableaux.len());
            let mut brute = std::collections::BTreeMap::new();
            for t in &tableaux {
                *brute.entry(t.descent_mask()).or_insert(0u64) += 1;
            }
            let dp: std::collections::BTreeMap<u64, u64> = descent_counts(&a).unwrap().into_iter().collect();
            assert_eq!(dp, brute, "{a}");
        }
    }
}

#[test]
fn monomial_coefficients_are_symmetric() {
    for n in 1..=7 {
        for a in shapes(n) {
            let m = m_expansion(&a).unwrap();
            for alpha in Composition::all(n as u32) {
                assert_eq!(m.coeff(&alpha), m.coeff(&alpha.sorted().as_composition()), "{a} {alpha}");
            }
        }
    }
}

#[test]
fn rotation_preserves_f_expansions() {
    for n in 1..=6 {
        for a in shapes(n) {
            assert_eq!(f_expansion(&a).unwrap(), f_expansion(&a.rotate()).unwrap(), "{a}");
        }
    }
}

#[test]
fn schur_support_lies_between_rows_and_transposed_columns() {
    for n in 1..=7 {
        for a in shapes(n) {
            let s = schur_expansion_lr(&a).unwrap();
            let (lo, hi) = (a.rows(), a.cols().conjugate());
            for (lam, _) in s.terms() {
                assert!(dominance_leq(&lo, lam) && dominance_leq(lam, &hi), "{a}: {lam}");
            }
            assert_eq!(s.coeff(&lo), 1, "{a}");
            assert_eq!(s.coeff(&hi), 1, "{a}");
        }
    }
}

#[test]
fn f_support_bounds_are_sharp() {
    for n in 1..=7 {
        for a in shapes(n) {
            let (rows_t, cols_t) = (a.rows().conjugate(), a.cols().conjugate());
            for alpha in f_support(&a).unwrap().compositions() {
                let (r, c) = Ribbon::new(alpha.clone()).stats();
                assert!(dominance_leq(&r, &cols_t), "{a}: rows({alpha})");
                assert!(dominance_leq(&c, &rows_t), "{a}: cols({alpha})");
            }
            let dominant = extreme_filling_dominant(&a).descent_composition();
            assert_eq!(dominant, cols_t.as_composition(), "{a}");
            let anti = extreme_filling_antidominant(&a);
            assert_eq!(Ribbon::new(anti.descent_composition()).stats().1, rows_t, "{a}");
            // the non-descents are exactly the proper prefix sums of rows(A)^t
            let mut sums = BTreeSet::new();
            let mut acc = 0;
            for &p in rows_t.parts() {
                acc += p;
                if (acc as usize) < n {
                    sums.insert(acc);
                }
            }
            let complement: BTreeSet<u32> = (1..n as u32).filter(|i| !anti.descent_set().contains(i)).collect();
            assert_eq!(complement, sums, "{a}");
        }
    }
}

#[test]
fn extreme_fillings_of_the_large_example() {
    let a: SkewShape = "775333/64111".parse().unwrap();
    assert_eq!(extreme_filling_dominant(&a).descent_composition().to_string(), "7,4,2,2");
    let anti = extreme_filling_antidominant(&a).descent_composition();
    assert_eq!(anti.to_string(), "1,1,1,1,1,2,1,1,1,2,1,2");
    assert_eq!(Ribbon::new(anti).stats().1.to_string(), "6,5,3,1");
}

#[test]
fn s_expansion_rearranges_schur_terms() {
    for n in 1..=6 {
        for a in shapes(n) {
            let s = s_expansion(&a).unwrap();
            let schur = schur_expansion_lr(&a).unwrap();
            for (alpha, c) in s.terms() {
                assert_eq!(c, schur.coeff(&alpha.sorted()), "{a} {alpha}");
            }
            let expected: usize = schur.terms().map(|(lam, _)| lam.rearrangements().len()).sum();
            assert_eq!(s.len(), expected);
        }
    }
}

#[test]
fn dual_immaculate_partition_terms() {
    for n in 1..=8u32 {
        let mut owner: std::collections::BTreeMap<Composition, Partition> = Default::default();
        for lam in Partition::all(n) {
            let d = d_of_schur(&lam).unwrap();
            let partition_keys: Vec<_> = d.support().filter(|k| k.is_partition()).collect();
            assert_eq!(partition_keys, vec![&lam.as_composition()], "{lam}");
            assert_eq!(d.coeff(&lam.as_composition()), 1);
            for alpha in d.support() {
                if let Some(prev) = owner.insert(alpha.clone(), lam.clone()) {
                    panic!("{alpha} appears for both {prev} and {lam}");
                }
            }
        }
    }
}

#[test]
fn dual_immaculate_expansion_follows_schur_terms() {
    for n in 1..=6 {
        for a in shapes(n) {
            let d = d_expansion(&a).unwrap();
            let schur = schur_expansion_lr(&a).unwrap();
            for (lam, c) in schur.terms() {
                assert_eq!(d.coeff(&lam.as_composition()), c, "{a} {lam}");
            }
        }
    }
}

/// Elongated ribbons: F-support containment agrees with overlap dominance,
/// and the F-support depends only on the multiset of row lengths.
#[test]
fn elongated_ribbons() {
    for n in 2..=10u32 {
        let ribbons: Vec<SkewShape> = Composition::all(n)
            .into_iter()
            .filter(|a| a.parts().iter().all(|&p| p >= 2))
            .map(|a| Ribbon::new(a).shape())
            .collect();
        let supports: Vec<_> = ribbons.iter().map(|r| f_support(r).unwrap()).collect();
        let profiles: Vec<_> = ribbons.iter().map(OverlapProfile::of).collect();
        for i in 0..ribbons.len() {
            assert!(ribbons[i].is_elongated_ribbon());
            let sorted =
                Ribbon::new(Composition::new(ribbons[i].row_lengths()).unwrap().sorted().as_composition()).shape();
            assert_eq!(supports[i], f_support(&sorted).unwrap(), "{}", ribbons[i]);
            for j in 0..ribbons.len() {
                assert_eq!(
                    supports[i].contains_support(&supports[j]),
                    profiles[i].rows_dominated_by(&profiles[j]),
                    "{} vs {}",
                    ribbons[i],
                    ribbons[j]
                );
            }
        }
    }
}
