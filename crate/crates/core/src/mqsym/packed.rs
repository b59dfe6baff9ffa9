use crate::combinatorics::{parse_nested, Composition};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Nonnegative integer matrix without zero rows or columns.
///
/// Ordered by the derived order on the row list (rows compared
/// lexicographically as integer vectors), which fixes term order in outputs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedMat {
    rows: Vec<Vec<u32>>,
}

impl PackedMat {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = PackedMat { rows };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let q = self.rows.first().map_or(0, |r| r.len());
        if self.rows.iter().any(|r| r.len() != q) {
            return Err(Error::Invalid("ragged matrix".into()));
        }
        if self.rows.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::Invalid("matrix has a zero row".into()));
        }
        if (0..q).any(|j| self.rows.iter().all(|r| r[j] == 0)) {
            return Err(Error::Invalid("matrix has a zero column".into()));
        }
        Ok(())
    }

    /// The empty matrix, label of the unit.
    pub fn empty() -> Self {
        PackedMat { rows: Vec::new() }
    }

    /// Drops zero rows and zero columns.
    pub fn pack(rows: &[Vec<u32>]) -> Self {
        let q = rows.first().map_or(0, |r| r.len());
        let keep: Vec<usize> = (0..q).filter(|&j| rows.iter().any(|r| r[j] != 0)).collect();
        PackedMat { rows: rows.iter().filter(|r| r.iter().any(|&x| x != 0)).map(|r| keep.iter().map(|&j| r[j]).collect()).collect() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().flatten().map(|&x| x as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        let q = self.width();
        PackedMat { rows: (0..q).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect() }
    }

    /// Row sums.
    pub fn row_composition(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.iter().map(|&x| x as usize).sum()).collect()).expect("rows are nonzero")
    }

    /// Column sums.
    pub fn col_composition(&self) -> Composition {
        self.transpose().row_composition()
    }

    /// Block-diagonal sum `P ⊕ Q`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (q1, q2) = (self.width(), other.width());
        let mut rows: Vec<Vec<u32>> = self.rows.iter().map(|r| r.iter().copied().chain(std::iter::repeat_n(0, q2)).collect()).collect();
        rows.extend(other.rows.iter().map(|r| std::iter::repeat_n(0, q1).chain(r.iter().copied()).collect()));
        PackedMat { rows }
    }

    /// Splits into contiguous diagonal blocks `P = P₁ ⊕ ⋯ ⊕ P_r` with the
    /// finest such decomposition.
    pub fn diagonal_blocks(&self) -> Vec<PackedMat> {
        let (p, q) = (self.height(), self.width());
        let mut out = Vec::new();
        let (mut r0, mut c0) = (0, 0);
        // (i, j) is a cut when rows < i only use columns < j and rows ≥ i only columns ≥ j
        for i in 1..=p {
            for j in c0 + 1..=q {
                let upper_ok = self.rows[r0..i].iter().all(|r| r[j..].iter().all(|&x| x == 0));
                let lower_ok = self.rows[i..].iter().all(|r| r[c0..j].iter().all(|&x| x == 0));
                if upper_ok && lower_ok {
                    out.push(PackedMat { rows: self.rows[r0..i].iter().map(|r| r[c0..j].to_vec()).collect() });
                    r0 = i;
                    c0 = j;
                    break;
                }
            }
        }
        out
    }

    /// True when the matrix is not a contiguous block-diagonal sum of two
    /// nonempty packed matrices.
    pub fn is_connected(&self) -> bool {
        self.height() > 0 && self.diagonal_blocks().len() == 1
    }

    /// All packed matrices of degree `d`, in canonical order.
    pub fn all(d: usize) -> Vec<PackedMat> {
        if d == 0 {
            return vec![PackedMat::empty()];
        }
        let mut out = Vec::new();
        for p in 1..=d {
            for q in 1..=d {
                let mut rows = vec![vec![0u32; q]; p];
                fill(&mut rows, 0, 0, d as u32, &mut out);
            }
        }
        out.sort();
        out
    }
}

/// Fills cells row-major with the remaining budget, pruning rows or columns
/// that could no longer become nonzero.
fn fill(rows: &mut Vec<Vec<u32>>, i: usize, j: usize, left: u32, out: &mut Vec<PackedMat>) {
    let (p, q) = (rows.len(), rows[0].len());
    if i == p {
        if left == 0 && (0..q).all(|c| rows.iter().any(|r| r[c] != 0)) {
            out.push(PackedMat { rows: rows.clone() });
        }
        return;
    }
    let (ni, nj) = if j + 1 == q { (i + 1, 0) } else { (i, j + 1) };
    let row_done = j + 1 == q;
    let rows_after = (p - i - 1) as u32;
    let max = left.saturating_sub(rows_after);
    for v in 0..=max {
        rows[i][j] = v;
        if row_done && rows[i].iter().all(|&x| x == 0) {
            continue;
        }
        // every still-empty column and every later row needs a unit
        let zero_cols = (0..q).filter(|&c| rows[..=i].iter().all(|r| r[c] == 0)).count() as u32;
        let rem = left - v;
        if rem < zero_cols.max(rows_after) {
            continue;
        }
        fill(rows, ni, nj, rem, out);
    }
    rows[i][j] = 0;
}

impl fmt::Display for PackedMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for PackedMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PackedMat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_nested(s)?;
        PackedMat::new(rows.into_iter().map(|r| r.into_iter().map(|x| x as u32).collect()).collect())
    }
}

/// Packed-matrix literal helper, panics on invalid input.
pub fn packed(rows: &[&[u32]]) -> PackedMat {
    PackedMat::new(rows.iter().map(|r| r.to_vec()).collect()).expect("bad packed matrix literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|d| PackedMat::all(d).len()).collect();
        assert_eq!(counts, [1, 1, 5, 33, 281, 2961]);
    }

    #[test]
    fn blocks() {
        let m = packed(&[&[1, 0], &[0, 1]]);
        assert_eq!(m.diagonal_blocks().len(), 2);
        assert!(!m.is_connected());
        assert!(packed(&[&[0, 1], &[1, 0]]).is_connected());
        assert!(packed(&[&[1, 1]]).is_connected());
        let conn2 = PackedMat::all(2).into_iter().filter(|m| m.is_connected()).count();
        assert_eq!(conn2, 4);
        assert_eq!("[[2,1],[1,0]]".parse::<PackedMat>().unwrap().to_string(), "[[2,1],[1,0]]");
    }
}
