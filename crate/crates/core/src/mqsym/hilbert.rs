use super::{MQElem, MqBasis, PackedMat};
use crate::combinatorics::{permutations, Composition, MAX_PACKED_DEGREE};
use crate::error::{bound, Result};
use crate::exactalg::{QSeries, Scalar, SparseEchelon, SparseVec};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;

/// Largest degree for which free generation is checked by linear algebra.
pub const MAX_FREENESS_DEGREE: usize = 4;

/// How [`hilbert_series`] obtains the dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HilbertMethod {
    /// Count packed matrices.
    Enumerate,
    /// `Σ_{|I|=|J|=d} 2^{2d−ℓ(I)−ℓ(J)} #{σ : C(σ)=I, C(σ⁻¹)=J}`.
    DoubleCoset,
}

/// `dim MQSym_d` for `d = 0..=d_max`.
pub fn hilbert_series(d_max: usize, method: HilbertMethod) -> Result<Vec<u64>> {
    if d_max > MAX_PACKED_DEGREE {
        return Err(bound("MQSym Hilbert series degree", MAX_PACKED_DEGREE));
    }
    Ok((0..=d_max)
        .map(|d| match method {
            HilbertMethod::Enumerate => PackedMat::all(d).len() as u64,
            HilbertMethod::DoubleCoset => double_coset_dim(d),
        })
        .collect())
}

fn double_coset_dim(d: usize) -> u64 {
    if d == 0 {
        return 1;
    }
    // Σ over σ of 2^{2d − ℓ(C(σ)) − ℓ(C(σ⁻¹))}
    permutations(d)
        .map(|s| {
            let li = s.descent_composition().len();
            let lj = s.inverse().descent_composition().len();
            1u64 << (2 * d - li - lj)
        })
        .sum()
}

/// `Σ_{l,h>0} C(d+lh−1, lh−1) 2^{−(l+h+2)}`, truncated at `l, h ≤ cutoff`.
/// Floating point; only meant as a sanity comparison.
pub fn hilbert_closed_form(d: usize, cutoff: usize) -> f64 {
    let mut total = 0.0;
    for l in 1..=cutoff {
        for h in 1..=cutoff {
            let n = (l * h) as f64;
            // C(d + n − 1, d)
            let binom: f64 = (1..=d).map(|i| (n - 1.0 + i as f64) / i as f64).product();
            total += binom * 0.5f64.powi((l + h + 2) as i32);
        }
    }
    total
}

/// Reading of decomposability where rows and columns may be permuted: the
/// bipartite graph "row i to column j when a_ij ≠ 0" is connected.
pub fn bipartite_connected(p: &PackedMat) -> bool {
    let (h, w) = (p.height(), p.width());
    if h == 0 {
        return false;
    }
    let mut seen_rows = vec![false; h];
    let mut seen_cols = vec![false; w];
    let mut stack = vec![0usize];
    seen_rows[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..w {
            if p.rows()[i][j] != 0 && !seen_cols[j] {
                seen_cols[j] = true;
                for (k, seen) in seen_rows.iter_mut().enumerate() {
                    if !*seen && p.rows()[k][j] != 0 {
                        *seen = true;
                        stack.push(k);
                    }
                }
            }
        }
    }
    seen_rows.iter().all(|&s| s) && seen_cols.iter().all(|&s| s)
}

/// Number of connected packed matrices of degree `d`, for `d = 1..=d_max`.
pub fn connected_counts(d_max: usize, connected: impl Fn(&PackedMat) -> bool) -> Result<Vec<u64>> {
    if d_max > MAX_PACKED_DEGREE {
        return Err(bound("packed matrices", MAX_PACKED_DEGREE));
    }
    Ok((1..=d_max).map(|d| PackedMat::all(d).iter().filter(|p| connected(p)).count() as u64).collect())
}

/// Coefficients of `1/(1 − Σ c_d t^d)` up to `t^{d_max}`.
pub fn free_series(conn: &[u64], d_max: usize) -> Vec<BigInt> {
    let mut coeffs = vec![Scalar::one()];
    coeffs.extend((1..=d_max).map(|d| -Scalar::from_integer(BigInt::from(conn.get(d - 1).copied().unwrap_or(0)))));
    let s = QSeries::new(coeffs, d_max + 1);
    let inv = s.inverse().expect("constant term is 1");
    (0..=d_max).map(|d| inv.coeff(d).to_integer()).collect()
}

/// Outcome of the linear independence check for products of `ΦS` over
/// connected matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub degree: usize,
    pub products: usize,
    pub rank: usize,
    pub dimension: usize,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.products == self.rank && self.rank == self.dimension
    }
}

/// Multiplies out `ΦS_{A₁}⋯ΦS_{A_r}` over all sequences of connected
/// matrices of total degree `d` and measures the rank in `MS`.
pub fn freeness_check(d: usize) -> Result<FreenessReport> {
    if d > MAX_FREENESS_DEGREE {
        return Err(bound("MQSym freeness degree", MAX_FREENESS_DEGREE));
    }
    let basis = PackedMat::all(d);
    let index: HashMap<&PackedMat, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let conn: Vec<Vec<PackedMat>> = (0..=d).map(|k| PackedMat::all(k).into_iter().filter(|p| p.is_connected()).collect()).collect();
    let mut echelon = SparseEchelon::new();
    let mut products = 0;
    for c in Composition::all(d) {
        let mut partial = vec![MQElem::one()];
        for &part in c.parts() {
            partial = partial.iter().flat_map(|x| conn[part].iter().map(move |a| x.mul(&MQElem::phis(a)))).collect();
        }
        for x in partial {
            products += 1;
            let v: SparseVec = x.to_basis(MqBasis::MS).terms().iter().map(|(p, c)| (index[p], c.clone())).collect();
            echelon.insert(v);
        }
    }
    Ok(FreenessReport { degree: d, products, rank: echelon.rank(), dimension: basis.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_methods() {
        let want = [1, 1, 5, 33, 281, 2961, 37277];
        assert_eq!(hilbert_series(6, HilbertMethod::DoubleCoset).unwrap(), want);
        assert_eq!(hilbert_series(5, HilbertMethod::Enumerate).unwrap(), want[..6]);
        assert!(hilbert_series(7, HilbertMethod::Enumerate).is_err());
    }

    #[test]
    fn free_generation_series() {
        let conn = connected_counts(5, |p| p.is_connected()).unwrap();
        assert_eq!(&conn[..2], &[1, 4]);
        let s = free_series(&conn, 5);
        assert_eq!(s, [1, 1, 5, 33, 281, 2961].map(BigInt::from));
    }

    #[test]
    fn freeness_small() {
        for d in 1..=3 {
            assert!(freeness_check(d).unwrap().passed());
        }
    }

    #[test]
    fn closed_form_positive_degrees() {
        let dims = [1.0, 5.0, 33.0, 281.0];
        for (d, want) in (1..=4).zip(dims) {
            assert!((hilbert_closed_form(d, 120) - want).abs() < 1e-6, "d={d}");
        }
    }
}
