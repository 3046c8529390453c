//! Standard fillings whose descent compositions attain the dominance bounds
//! `rows(alpha) ⊴ cols(A)^t` and `cols(alpha) ⊴ rows(A)^t`.

use super::syt::StandardTableau;
use crate::shapes::SkewShape;

/// Repeatedly fills the top unfilled box of every column, columns taken
/// left to right. The descent composition is `cols(A)^t`.
pub fn extreme_filling_dominant(shape: &SkewShape) -> StandardTableau {
    let spans = shape.row_spans();
    let width = shape.num_cols() as u32;
    // boxes of each column, top to bottom
    let columns: Vec<Vec<usize>> =
        (0..width).map(|c| (0..spans.len()).filter(|&r| spans[r].0 <= c && c < spans[r].1).collect()).collect();
    let mut rows: Vec<Vec<u32>> = spans.iter().map(|&(a, b)| vec![0; (b - a) as usize]).collect();
    let mut next = 1;
    for depth in 0.. {
        let mut any = false;
        for (c, col) in columns.iter().enumerate() {
            if let Some(&r) = col.get(depth) {
                rows[r][c - spans[r].0 as usize] = next;
                next += 1;
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    StandardTableau::new(shape.clone(), rows).expect("column-top filling is standard")
}

/// Repeatedly fills the leftmost unfilled box of every row, rows taken top
/// to bottom. The complement of the descent set is the set of partial sums
/// of `rows(A)^t`, so `cols(alpha) = rows(A)^t`.
pub fn extreme_filling_antidominant(shape: &SkewShape) -> StandardTableau {
    let spans = shape.row_spans();
    let mut rows: Vec<Vec<u32>> = spans.iter().map(|&(a, b)| vec![0; (b - a) as usize]).collect();
    let mut next = 1;
    for depth in 0.. {
        let mut any = false;
        for row in rows.iter_mut() {
            if let Some(slot) = row.get_mut(depth) {
                *slot = next;
                next += 1;
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    StandardTableau::new(shape.clone(), rows).expect("row-start filling is standard")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Ribbon;
    use crate::{composition, partition};

    #[test]
    fn large_shape() {
        let a: SkewShape = "775333/64111".parse().unwrap();
        assert_eq!(a.rows(), partition!("433221"));
        assert_eq!(a.cols(), partition!("4422111"));
        let dom = extreme_filling_dominant(&a);
        assert_eq!(dom.descent_composition(), composition!("7422"));
        assert_eq!(a.cols().conjugate(), partition!("7422"));
        let anti = extreme_filling_antidominant(&a);
        let alpha = anti.descent_composition();
        assert_eq!(alpha, "1,1,1,1,1,2,1,1,1,2,1,2".parse().unwrap());
        assert_eq!(Ribbon::new(alpha).stats().1, partition!("6531"));
        assert_eq!(a.rows().conjugate(), partition!("6531"));
    }

    #[test]
    fn trivial_shapes() {
        let col: SkewShape = "1111".parse().unwrap();
        assert_eq!(extreme_filling_dominant(&col).descent_composition(), composition!("1111"));
        let row: SkewShape = "5".parse().unwrap();
        assert_eq!(extreme_filling_antidominant(&row).descent_composition(), composition!("5"));
    }
}
