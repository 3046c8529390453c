//! Overlap partitions against direct counts, and the equivalence of the
//! row, column and rectangle formulations.

use skewsupp::shapes::enumerate_shapes;
use skewsupp::{dominance_leq, overlap_cols, overlap_rows, rects, Limits, OverlapProfile, SkewShape};

fn shapes(n: usize) -> Vec<SkewShape> {
    enumerate_shapes(n, &Limits::default()).unwrap()
}

/// Number of `k x l` rectangles of boxes inside the shape, by inspection.
fn count_rectangles(a: &SkewShape, k: usize, l: usize) -> u64 {
    let (rows, cols) = (a.num_rows() as u32, a.num_cols() as u32);
    let mut count = 0;
    for r in 0..rows {
        for c in 0..cols {
            let full = (r..r + k as u32).all(|i| (c..c + l as u32).all(|j| a.contains_box(i, j)));
            count += full as u64;
        }
    }
    count
}

#[test]
fn rectangle_formula_matches_direct_count() {
    for n in 1..=8 {
        for a in shapes(n) {
            let p = OverlapProfile::of(&a);
            for k in 1..=8 {
                for l in 1..=8 {
                    let direct = count_rectangles(&a, k, l);
                    assert_eq!(rects(&a, k, l), direct, "{a} k={k} l={l}");
                    assert_eq!(p.rects(k, l), direct, "{a} k={k} l={l}");
                }
            }
            assert_eq!(rects(&a, 1, 1), n as u64);
        }
    }
}

#[test]
fn profile_invariants() {
    for n in 1..=7 {
        for a in shapes(n) {
            let p = OverlapProfile::of(&a);
            assert_eq!(p.rows(1), a.rows());
            assert!(p.depth() <= a.num_rows());
            assert!(overlap_rows(&a, a.num_rows() + 1).is_empty());
            for l in 1..=a.num_cols() + 1 {
                assert_eq!(p.cols(l), overlap_cols(&a, l), "{a} l={l}");
                assert_eq!(overlap_cols(&a, l), overlap_rows(&a.transpose(), l));
            }
        }
    }
}

struct Data {
    profile: OverlapProfile,
    cols: Vec<skewsupp::Partition>,
    rects: Vec<Vec<u64>>,
}

fn data(a: &SkewShape, n: usize) -> Data {
    Data {
        profile: OverlapProfile::of(a),
        cols: (1..=n).map(|l| overlap_cols(a, l)).collect(),
        rects: (1..=n).map(|k| (1..=n).map(|l| count_rectangles(a, k, l)).collect()).collect(),
    }
}

#[test]
fn row_column_and_rectangle_data_are_equivalent() {
    for n in 1..=7 {
        let all = shapes(n);
        let d: Vec<Data> = all.iter().map(|a| data(a, n)).collect();
        for (x, a) in d.iter().zip(&all) {
            for (y, b) in d.iter().zip(&all) {
                let rows_dom = (1..=n).all(|k| dominance_leq(&x.profile.rows(k), &y.profile.rows(k)));
                let cols_dom = x.cols.iter().zip(&y.cols).all(|(p, q)| dominance_leq(p, q));
                let rects_dom = x.rects.iter().flatten().zip(y.rects.iter().flatten()).all(|(p, q)| p <= q);
                assert_eq!(rows_dom, cols_dom, "{a} vs {b}");
                assert_eq!(rows_dom, rects_dom, "{a} vs {b}");
                assert_eq!(rows_dom, x.profile.rows_dominated_by(&y.profile));
                let rows_eq = x.profile == y.profile;
                assert_eq!(rows_eq, x.cols == y.cols, "{a} vs {b}");
                assert_eq!(rows_eq, x.rects == y.rects, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn rotation_preserves_profiles() {
    for n in 1..=6 {
        for a in shapes(n) {
            assert_eq!(OverlapProfile::of(&a), OverlapProfile::of(&a.rotate()), "{a}");
        }
    }
}

#[test]
fn incomparable_overlap_example() {
    let a: SkewShape = "4211/1".parse().unwrap();
    let b: SkewShape = "4431/311".parse().unwrap();
    assert_eq!(overlap_rows(&a, 2).to_string(), "1,1,1");
    assert_eq!(overlap_rows(&b, 2).to_string(), "2,1");
    assert_eq!(overlap_rows(&a, 3).to_string(), "1");
    assert!(overlap_rows(&b, 3).is_empty());
    assert!(!skewsupp::overlaps_dominated(&a, &b).unwrap());
    assert!(!skewsupp::overlaps_dominated(&b, &a).unwrap());
}
