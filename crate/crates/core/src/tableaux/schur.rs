//! Schur expansions of skew Schur functions, by two independent routes.

use std::collections::{BTreeMap, BTreeSet};

use super::expansion::{Basis, SymExpansion};
use super::fexp::m_expansion;
use crate::config::check_hard_limit;
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// Schur expansion by the Littlewood-Richardson rule: the coefficient of
/// `s_nu` counts semistandard fillings of the shape with content `nu` whose
/// reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
pub fn schur_expansion_lr(shape: &SkewShape) -> Result<SymExpansion> {
    check_hard_limit(shape.size())?;
    let n = shape.size();
    let spans = shape.row_spans();
    // reading order: top row first, each row right to left
    let cells: Vec<(usize, u32)> =
        spans.iter().enumerate().flat_map(|(r, &(a, b))| (a..b).rev().map(move |c| (r, c))).collect();
    let mut filling: Vec<Vec<u32>> = spans.iter().map(|&(a, b)| vec![0; (b - a) as usize]).collect();
    let mut content = vec![0u32; n + 1];
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();

    struct Ctx<'a> {
        spans: &'a [(u32, u32)],
        cells: &'a [(usize, u32)],
    }
    fn value(ctx: &Ctx, filling: &[Vec<u32>], r: usize, c: u32) -> Option<u32> {
        let (a, b) = ctx.spans[r];
        (a <= c && c < b).then(|| filling[r][(c - a) as usize])
    }
    fn rec(
        ctx: &Ctx,
        i: usize,
        filling: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        counts: &mut BTreeMap<Partition, i64>,
    ) -> Result<()> {
        if i == ctx.cells.len() {
            let nu = Partition::from_unsorted(content[1..].iter().copied().filter(|&x| x > 0));
            let slot = counts.entry(nu).or_insert(0);
            *slot = slot.checked_add(1).ok_or(Error::Overflow)?;
            return Ok(());
        }
        let (r, c) = ctx.cells[i];
        // entries are filled right to left, so the right neighbour is known
        let hi = value(ctx, filling, r, c + 1).unwrap_or(u32::MAX);
        let lo = if r > 0 { value(ctx, filling, r - 1, c).map_or(1, |v| v + 1) } else { 1 };
        let mut v = lo;
        while v <= hi && (v as usize) < content.len() {
            if v == 1 || content[v as usize] < content[v as usize - 1] {
                let (a, _) = ctx.spans[r];
                filling[r][(c - a) as usize] = v;
                content[v as usize] += 1;
                rec(ctx, i + 1, filling, content, counts)?;
                content[v as usize] -= 1;
            } else if content[v as usize - 1] == 0 {
                // no larger value can satisfy the lattice condition either
                break;
            }
            v += 1;
        }
        Ok(())
    }
    // content[0] is a sentinel so that content[v - 1] is defined for v = 1
    content[0] = u32::MAX;
    let ctx = Ctx { spans: &spans, cells: &cells };
    rec(&ctx, 0, &mut filling, &mut content, &mut counts)?;
    SymExpansion::from_terms(Basis::Schur, n, counts)
}

/// The Schur expansion of the default route, the Littlewood-Richardson rule.
pub fn schur_expansion(shape: &SkewShape) -> Result<SymExpansion> {
    schur_expansion_lr(shape)
}

/// Schur expansion by solving the unitriangular Kostka system against the
/// monomial expansion. Independent of [`schur_expansion_lr`].
pub fn schur_expansion_kostka(shape: &SkewShape) -> Result<SymExpansion> {
    let n = shape.size();
    let m = m_expansion(shape)?;
    for (alpha, c) in m.terms() {
        if m.coeff(&alpha.sorted().as_composition()) != c {
            return Err(Error::InternalConsistency(format!(
                "monomial expansion of {shape} is not symmetric at {alpha}"
            )));
        }
    }
    let mut rest: BTreeMap<Partition, i64> =
        m.terms().filter(|(a, _)| a.is_partition()).map(|(a, c)| (a.sorted(), c)).collect();
    let mut out = SymExpansion::zero(Basis::Schur, n);
    // decreasing lexicographic order extends dominance, so the leading term
    // of the remainder is always a Schur coefficient
    for lam in Partition::all(n as u32) {
        let c = rest.get(&lam).copied().unwrap_or(0);
        if c == 0 {
            continue;
        }
        out.add_term(lam.clone(), c)?;
        for (alpha, k) in m_expansion(&SkewShape::straight(lam))?.terms() {
            if alpha.is_partition() {
                let slot = rest.entry(alpha.sorted()).or_insert(0);
                *slot = slot.checked_sub(c.checked_mul(k).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
        }
    }
    if let Some((lam, c)) = rest.iter().find(|(_, &c)| c != 0) {
        return Err(Error::InternalConsistency(format!("Kostka inversion for {shape} left {c} at {lam}")));
    }
    Ok(out)
}

/// Partitions with nonzero Littlewood-Richardson coefficient.
pub fn schur_support(shape: &SkewShape) -> Result<BTreeSet<Partition>> {
    Ok(schur_expansion_lr(shape)?.support().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn se(terms: &[(&str, i64)]) -> SymExpansion {
        let n = terms[0].0.parse::<Partition>().unwrap().size();
        SymExpansion::from_terms(Basis::Schur, n, terms.iter().map(|&(k, c)| (k.parse().unwrap(), c))).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(schur_expansion_lr(&sh("311/1")).unwrap(), se(&[("31", 1), ("211", 1)]));
        assert_eq!(schur_expansion_lr(&sh("321/11")).unwrap(), se(&[("31", 1), ("22", 1), ("211", 1)]));
        assert_eq!(schur_expansion_lr(&sh("22")).unwrap(), se(&[("22", 1)]));
        assert_eq!(schur_expansion_lr(&sh("321/1")).unwrap(), se(&[("32", 1), ("311", 1), ("221", 1)]));
        // s_21 * s_21
        assert_eq!(
            schur_expansion_lr(&sh("4321/22")).unwrap(),
            se(&[("42", 1), ("411", 1), ("33", 1), ("321", 2), ("3111", 1), ("222", 1), ("2211", 1)])
        );
    }

    #[test]
    fn pieri_for_disjoint_column_and_row() {
        for n in 2..=7u32 {
            for leg in 1..n {
                let col = SkewShape::straight(Partition::new(vec![1; leg as usize]).unwrap());
                let row = SkewShape::straight(Partition::new(vec![n - leg]).unwrap());
                let hook = |arm: u32, l: u32| {
                    let mut p = vec![arm];
                    p.extend(std::iter::repeat_n(1, l as usize));
                    Partition::new(p).unwrap()
                };
                let e = schur_expansion_lr(&col.direct_sum(&row)).unwrap();
                let expected = SymExpansion::from_terms(
                    Basis::Schur,
                    n as usize,
                    [(hook(n - leg, leg), 1), (hook(n - leg + 1, leg - 1), 1)],
                )
                .unwrap();
                assert_eq!(e, expected, "n = {n}, leg = {leg}");
            }
        }
    }

    #[test]
    fn kostka_route_agrees() {
        for s in ["311/1", "321/11", "22", "4211/21", "553111/31", "4321/21"] {
            assert_eq!(schur_expansion_kostka(&sh(s)).unwrap(), schur_expansion_lr(&sh(s)).unwrap(), "{s}");
        }
        assert_eq!(schur_expansion_kostka(&sh("22")).unwrap(), se(&[("22", 1)]));
    }

    #[test]
    fn straight_shapes_are_single_terms() {
        for lam in Partition::all(6) {
            let e = schur_expansion_lr(&SkewShape::straight(lam.clone())).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e.coeff(&lam), 1);
        }
    }

    #[test]
    fn scaled_supports() {
        let a = schur_support(&sh("4311/21")).unwrap();
        let b = schur_support(&sh("4421/311")).unwrap();
        assert!(a.is_superset(&b));
        assert!(schur_support(&sh("8842/622")).unwrap().contains(&partition!("633")));
        assert!(!schur_support(&sh("8622/42")).unwrap().contains(&partition!("633")));
    }
}
