use super::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sparse rational vector keyed by coordinate.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Incremental row echelon form over sparse rational vectors.
///
/// Each stored row is normalized to a leading coefficient 1 at its pivot, so
/// rank queries on large but sparse incidence matrices stay cheap.
#[derive(Default, Debug, Clone)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; keeps it if it is independent.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, c)) = v.iter().next() else { return false };
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = c.clone();
                    for (&k, x) in row {
                        let e = v.entry(k).or_insert_with(Scalar::zero);
                        *e -= c.clone() * x;
                        if e.is_zero() {
                            v.remove(&k);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for x in v.values_mut() {
                        *x *= inv.clone();
                    }
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = SparseEchelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn rank_of_dependent_family() {
        let v = |xs: &[(usize, i64)]| xs.iter().map(|&(k, c)| (k, int(c))).collect::<SparseVec>();
        let r = sparse_rank([v(&[(0, 1), (2, 1)]), v(&[(1, 1), (2, -1)]), v(&[(0, 1), (1, 1)]), v(&[(3, 2)])]);
        assert_eq!(r, 3);
    }
}
