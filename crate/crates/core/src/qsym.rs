//! Expansions in the quasisymmetric Schur (S) and dual immaculate (D) bases,
//! and positivity and support predicates for every basis.

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};
use crate::tableaux::{f_expansion, m_expansion, schur_expansion_lr, Basis, QsymExpansion, SymExpansion};

/// `s_lambda = sum of S_alpha` over the rearrangements `alpha` of `lambda`,
/// applied term by term.
pub fn s_from_schur(schur: &SymExpansion) -> Result<QsymExpansion> {
    let mut out = QsymExpansion::zero(Basis::S, schur.size());
    for (lam, c) in schur.terms() {
        for alpha in lam.rearrangements() {
            out.add_term(alpha, c)?;
        }
    }
    Ok(out)
}

pub fn s_expansion(shape: &SkewShape) -> Result<QsymExpansion> {
    s_from_schur(&schur_expansion_lr(shape)?)
}

/// D-expansion of a single Schur function `s_lambda`: the signed sum over
/// permutations `sigma` of `[k]` with `lambda_{sigma_i} + i - sigma_i > 0`
/// for all `i` of `D_(lambda_{sigma_1} + 1 - sigma_1, ..., lambda_{sigma_k} + k - sigma_k)`.
pub fn d_of_schur(lam: &Partition) -> Result<QsymExpansion> {
    let k = lam.len();
    let mut out = QsymExpansion::zero(Basis::D, lam.size());
    let mut used = vec![false; k];
    let mut parts = Vec::with_capacity(k);
    // positions are filled left to right; a prefix is abandoned as soon as
    // one of its parts is not positive
    fn rec(
        lam: &Partition,
        used: &mut [bool],
        parts: &mut Vec<u32>,
        inversions: usize,
        out: &mut QsymExpansion,
    ) -> Result<()> {
        let k = used.len();
        let i = parts.len();
        if i == k {
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            let alpha = Composition::new(parts.clone()).expect("parts are positive");
            return out.add_term(alpha, sign);
        }
        for s in 0..k {
            if used[s] {
                continue;
            }
            let part = lam.part(s) as i64 + i as i64 - s as i64;
            if part <= 0 {
                continue;
            }
            // entries already placed that are larger than s form inversions with it
            let new_inv = used[s + 1..].iter().filter(|&&u| u).count();
            used[s] = true;
            parts.push(part as u32);
            rec(lam, used, parts, inversions + new_inv, out)?;
            parts.pop();
            used[s] = false;
        }
        Ok(())
    }
    rec(lam, &mut used, &mut parts, 0, &mut out)?;
    Ok(out)
}

pub fn d_from_schur(schur: &SymExpansion) -> Result<QsymExpansion> {
    let mut out = QsymExpansion::zero(Basis::D, schur.size());
    for (lam, c) in schur.terms() {
        for (alpha, d) in d_of_schur(lam)?.terms() {
            out.add_term(alpha.clone(), c.checked_mul(d).ok_or(Error::Overflow)?)?;
        }
    }
    Ok(out)
}

pub fn d_expansion(shape: &SkewShape) -> Result<QsymExpansion> {
    d_from_schur(&schur_expansion_lr(shape)?)
}

/// `s_A` in any of the five bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyExpansion {
    Schur(SymExpansion),
    Qsym(QsymExpansion),
}

impl AnyExpansion {
    pub fn of(shape: &SkewShape, basis: Basis) -> Result<Self> {
        Ok(match basis {
            Basis::Schur => AnyExpansion::Schur(schur_expansion_lr(shape)?),
            Basis::F => AnyExpansion::Qsym(f_expansion(shape)?),
            Basis::M => AnyExpansion::Qsym(m_expansion(shape)?),
            Basis::S => AnyExpansion::Qsym(s_expansion(shape)?),
            Basis::D => AnyExpansion::Qsym(d_expansion(shape)?),
        })
    }

    pub fn basis(&self) -> Basis {
        match self {
            AnyExpansion::Schur(e) => e.basis(),
            AnyExpansion::Qsym(e) => e.basis(),
        }
    }

    /// `self - other` has no negative coefficient.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (AnyExpansion::Schur(a), AnyExpansion::Schur(b)) => Ok(a.difference(b)?.is_nonnegative()),
            (AnyExpansion::Qsym(a), AnyExpansion::Qsym(b)) => Ok(a.difference(b)?.is_nonnegative()),
            _ => Err(Error::InternalConsistency("expansions in different bases".into())),
        }
    }

    /// Nonzero support of `self` contains that of `other`.
    pub fn support_contains(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (AnyExpansion::Schur(a), AnyExpansion::Schur(b)) => Ok(a.support_contains(b)),
            (AnyExpansion::Qsym(a), AnyExpansion::Qsym(b)) => Ok(a.support_contains(b)),
            _ => Err(Error::InternalConsistency("expansions in different bases".into())),
        }
    }
}

fn same_size(a: &SkewShape, b: &SkewShape) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

/// `s_A - s_B` has nonnegative coefficients in `basis`.
pub fn positivity(a: &SkewShape, b: &SkewShape, basis: Basis) -> Result<bool> {
    same_size(a, b)?;
    AnyExpansion::of(a, basis)?.dominates(&AnyExpansion::of(b, basis)?)
}

/// The support of `s_A` in `basis` contains that of `s_B`. For D the
/// support is the set of nonzero coefficients.
pub fn support_contains(a: &SkewShape, b: &SkewShape, basis: Basis) -> Result<bool> {
    same_size(a, b)?;
    AnyExpansion::of(a, basis)?.support_contains(&AnyExpansion::of(b, basis)?)
}

/// D-support containment with the support taken as the positive coefficients.
pub fn d_positive_support_contains(a: &SkewShape, b: &SkewShape) -> Result<bool> {
    same_size(a, b)?;
    Ok(d_expansion(a)?.positive_support_contains(&d_expansion(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn qe(basis: Basis, n: usize, terms: &[(&str, i64)]) -> QsymExpansion {
        QsymExpansion::from_terms(basis, n, terms.iter().map(|&(k, c)| (k.parse().unwrap(), c))).unwrap()
    }

    #[test]
    fn s_expansions() {
        assert_eq!(s_expansion(&sh("22")).unwrap(), qe(Basis::S, 4, &[("22", 1)]));
        assert_eq!(
            s_expansion(&sh("311/1")).unwrap(),
            qe(Basis::S, 4, &[("31", 1), ("13", 1), ("211", 1), ("121", 1), ("112", 1)])
        );
        assert_eq!(s_expansion(&sh("1111")).unwrap(), qe(Basis::S, 4, &[("1111", 1)]));
    }

    #[test]
    fn d_expansions() {
        assert_eq!(d_expansion(&sh("22")).unwrap(), qe(Basis::D, 4, &[("22", 1), ("13", -1)]));
        assert_eq!(d_expansion(&sh("311/1")).unwrap(), qe(Basis::D, 4, &[("31", 1), ("211", 1)]));
        assert_eq!(d_expansion(&sh("5")).unwrap(), qe(Basis::D, 5, &[("5", 1)]));
        let diff = d_expansion(&sh("32/1")).unwrap().difference(&d_expansion(&sh("31")).unwrap()).unwrap();
        assert_eq!(diff, qe(Basis::D, 4, &[("22", 1), ("13", -1)]));
    }

    #[test]
    fn d_of_schur_sign_and_leading_term() {
        // identity permutation gives D_lambda with coefficient 1
        for lam in Partition::all(7) {
            let d = d_of_schur(&lam).unwrap();
            assert_eq!(d.coeff(&lam.as_composition()), 1);
            assert_eq!(d.terms().filter(|(a, _)| a.is_partition()).count(), 1);
        }
        let d = d_of_schur(&partition!("222")).unwrap();
        assert_eq!(d, qe(Basis::D, 6, &[("222", 1), ("132", -1), ("213", -1), ("114", 1)]));
    }

    #[test]
    fn positivity_examples() {
        assert!(positivity(&sh("311/1"), &sh("22"), Basis::F).unwrap());
        assert!(!positivity(&sh("311/1"), &sh("22"), Basis::Schur).unwrap());
        assert!(!positivity(&sh("311/1"), &sh("32/1"), Basis::M).unwrap());
        assert!(!positivity(&sh("421/2"), &sh("431/21"), Basis::Schur).unwrap());
        for basis in Basis::ALL {
            assert!(positivity(&sh("321/11"), &sh("321/11"), basis).unwrap());
            assert!(support_contains(&sh("321/11"), &sh("321/11"), basis).unwrap());
        }
        assert!(positivity(&sh("3"), &sh("21"), Basis::M).is_ok_and(|p| !p));
        assert!(support_contains(&sh("3"), &sh("21"), Basis::M).unwrap());
        assert_eq!(positivity(&sh("3"), &sh("1111"), Basis::F), Err(Error::SizeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn differences_quoted_in_the_text() {
        let m = |s| m_expansion(&sh(s)).unwrap();
        assert_eq!(m("311/1").difference(&m("32/1")).unwrap(), qe(Basis::M, 4, &[("1111", 1), ("22", -1)]));
        let s = |x| schur_expansion_lr(&sh(x)).unwrap();
        let diff = s("421/2").difference(&s("431/21")).unwrap();
        assert_eq!(diff.len(), 1);
        assert_eq!(diff.coeff(&partition!("32")), -1);
    }
}
