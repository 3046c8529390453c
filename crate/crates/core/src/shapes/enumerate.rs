use super::shape::{RowSpan, SkewShape};
use crate::config::Limits;
use crate::error::{Error, Result};

/// All skew shapes in basic form with exactly `n` boxes, each once, sorted
/// lexicographically by `(outer, inner)`.
///
/// Shapes are grown from the bottom row upwards. The bottom row starts in
/// column 0; each row above starts no further left than the row below, ends
/// no further left, and starts no further right than where the row below
/// ends (otherwise a column would be empty).
pub fn enumerate_shapes(n: usize, limits: &Limits) -> Result<Vec<SkewShape>> {
    limits.check(n)?;
    if n == 0 {
        return Ok(vec![SkewShape::empty()]);
    }
    let mut out = Vec::new();
    let mut stack: Vec<RowSpan> = Vec::new();
    for len in 1..=n as u32 {
        stack.push((0, len));
        grow(&mut stack, n as u32 - len, &mut out);
        stack.pop();
    }
    out.sort();
    Ok(out)
}

fn grow(stack: &mut Vec<RowSpan>, remaining: u32, out: &mut Vec<SkewShape>) {
    if remaining == 0 {
        let spans: Vec<RowSpan> = stack.iter().rev().copied().collect();
        out.push(SkewShape::from_monotone_spans(&spans));
        return;
    }
    let (a, b) = *stack.last().unwrap();
    for start in a..=b {
        // end >= b, end > start, end - start <= remaining
        let lo = b.max(start + 1);
        let hi = start + remaining;
        for end in lo..=hi {
            stack.push((start, end));
            grow(stack, remaining - (end - start), out);
            stack.pop();
        }
    }
}

/// Number of basic skew shapes with `n` boxes.
pub fn count_shapes(n: usize, limits: &Limits) -> Result<usize> {
    enumerate_shapes(n, limits).map(|v| v.len())
}

impl Limits {
    pub fn check(&self, size: usize) -> Result<()> {
        if size > self.max_size {
            Err(Error::ResourceLimit { size, limit: self.max_size })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box() {
        let shapes = enumerate_shapes(1, &Limits::default()).unwrap();
        assert_eq!(shapes.len(), 1);
        assert_eq!(shapes[0].to_string(), "1");
    }

    #[test]
    fn three_boxes() {
        let shapes: Vec<String> =
            enumerate_shapes(3, &Limits::default()).unwrap().iter().map(|s| s.to_string()).collect();
        assert!(shapes.contains(&"3".to_string()));
        assert!(shapes.contains(&"2,1".to_string()));
        assert!(shapes.contains(&"1,1,1".to_string()));
        assert!(shapes.contains(&"2,2/1".to_string()));
        assert!(shapes.contains(&"2,2,1/1,1".to_string()));
        let mut sorted = shapes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), shapes.len());
    }

    #[test]
    fn over_limit() {
        let limits = Limits { max_size: 5 };
        assert_eq!(enumerate_shapes(6, &limits), Err(Error::ResourceLimit { size: 6, limit: 5 }));
    }

    #[test]
    fn all_basic_and_sized() {
        for n in 1..=7 {
            for s in enumerate_shapes(n, &Limits::default()).unwrap() {
                assert_eq!(s.size(), n);
                assert_eq!(SkewShape::new(s.outer().clone(), s.inner().clone()).unwrap(), s);
                assert!(s.row_lengths().iter().all(|&l| l > 0));
                assert!(s.col_lengths().iter().all(|&l| l > 0));
            }
        }
    }
}
