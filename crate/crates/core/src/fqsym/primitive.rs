//! Primitive elements: the projectors `p_I`, the projector `π` onto the
//! primitive Lie algebra, and rank computations behind the freeness test.

use super::{coproduct_f, product_f, FQElem, FqBasis};
use crate::combinatorics::{connected_counts, permutations, standardize_slice, Composition, Permutation};
use crate::error::{bound, Result};
use crate::exactalg::{int, plethystic_product, sparse_rank, LinComb, Ring, Scalar, SparseVec};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

/// Largest degree for the exact primitive-dimension and bracket computations.
pub const MAX_PRIMITIVE_DEGREE: usize = 6;

/// Factorization-standardization: cuts `w` into blocks of sizes `I` and
/// standardizes each block. `None` stands for `0` (length mismatch).
pub fn sfact(i: &Composition, w: &[usize]) -> Option<Vec<Permutation>> {
    if i.weight() != w.len() {
        return None;
    }
    let mut out = Vec::with_capacity(i.len());
    let mut start = 0;
    for &p in i.parts() {
        out.push(standardize_slice(&w[start..start + p]));
        start += p;
    }
    Some(out)
}

fn sconc(parts: &[Permutation]) -> Permutation {
    parts.iter().fold(Permutation::identity(0), |acc, p| acc.shifted_concat(p))
}

/// `p_I(F_α) = F_{sconc(sfact_I(α))}` and `0` off degree `|I|`.
pub fn p_projector<R: Ring>(i: &Composition, x: &FQElem<R>) -> Result<FQElem<R>> {
    let f = x.to_f()?;
    let terms = LinComb::from_terms(f.terms().iter().filter_map(|(s, c)| sfact(i, s.as_slice()).map(|parts| (sconc(&parts), c.clone()))));
    Ok(FQElem::new(FqBasis::F, terms))
}

/// `π = Σ_{|I|≥1} (−1)^{ℓ(I)−1} p_I`, applied degreewise.
pub fn pi_projector<R: Ring>(x: &FQElem<R>) -> Result<FQElem<R>> {
    let f = x.to_f()?;
    let mut out = LinComb::zero();
    for (s, c) in f.terms().iter() {
        out.add_scaled(&pi_on_f(s), c);
    }
    Ok(FQElem::new(FqBasis::F, out))
}

fn pi_on_f<R: Ring>(s: &Permutation) -> LinComb<Permutation, R> {
    let n = s.size();
    if n == 0 {
        return LinComb::zero();
    }
    LinComb::from_terms(Composition::all(n).into_iter().map(|i| {
        let sign = if i.len() % 2 == 1 { R::one() } else { -R::one() };
        let parts = sfact(&i, s.as_slice()).expect("weights agree");
        (sconc(&parts), sign)
    }))
}

/// `V_α` expanded in the `F` basis (adjoint of the `G^σ` basis).
pub fn primitive_basis_v(alpha: &Permutation) -> Result<FQElem> {
    FQElem::basis_element(FqBasis::V, alpha.clone()).to_f()
}

/// Reduced coproduct `Δ(x) − x⊗1 − 1⊗x` on degree `n`, one sparse column per
/// `F_σ`, rows indexed by the tensor labels.
pub fn reduced_coproduct_matrix(n: usize) -> Result<Vec<SparseVec>> {
    if n > MAX_PRIMITIVE_DEGREE {
        return Err(bound("primitive computation degree", MAX_PRIMITIVE_DEGREE));
    }
    let mut rows: BTreeMap<(Permutation, Permutation), usize> = BTreeMap::new();
    let mut cols = Vec::new();
    for s in permutations(n) {
        let d = coproduct_f::<Scalar>(&LinComb::basis(s));
        let mut col = SparseVec::new();
        for ((a, b), c) in d.iter() {
            if a.size() == 0 || b.size() == 0 {
                continue;
            }
            let next = rows.len();
            let r = *rows.entry((a.clone(), b.clone())).or_insert(next);
            col.insert(r, c.clone());
        }
        cols.push(col);
    }
    Ok(cols)
}

/// Dimension of the primitive space in degree `n`: `n! − rank(Δ̃)`.
pub fn primitive_dimension(n: usize) -> Result<usize> {
    let cols = reduced_coproduct_matrix(n)?;
    let total = cols.len();
    Ok(total - sparse_rank(cols))
}

fn as_sparse(x: &LinComb<Permutation, Scalar>, index: &BTreeMap<Permutation, usize>) -> SparseVec {
    x.iter().map(|(s, c)| (index[s], c.clone())).collect()
}

/// Basis `π(F_α)`, `α` connected, of the primitive space in degree `n`.
fn primitive_basis_pi(n: usize) -> Vec<LinComb<Permutation, Scalar>> {
    permutations(n).filter(|s| s.is_connected()).map(|s| pi_on_f(&s)).collect()
}

/// Rank of the span of `[x, y]`, `x ∈ L_i`, `y ∈ L_{n−i}`, in degree `n`.
pub fn bracket_rank(n: usize) -> Result<usize> {
    if n > MAX_PRIMITIVE_DEGREE {
        return Err(bound("bracket computation degree", MAX_PRIMITIVE_DEGREE));
    }
    let index: BTreeMap<Permutation, usize> = permutations(n).enumerate().map(|(k, s)| (s, k)).collect();
    let bases: Vec<Vec<LinComb<Permutation, Scalar>>> = (0..n).map(primitive_basis_pi).collect();
    let mut vectors = Vec::new();
    for i in 1..=n / 2 {
        let (left, right) = (&bases[i], &bases[n - i]);
        for (a, x) in left.iter().enumerate() {
            for (b, y) in right.iter().enumerate() {
                if i == n - i && b <= a {
                    continue;
                }
                let br = product_f(x, y) - product_f(y, x);
                vectors.push(as_sparse(&br, &index));
            }
        }
    }
    Ok(sparse_rank(vectors))
}

/// One degree of the freeness comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessRow {
    pub degree: usize,
    /// Primitive dimension from the kernel of the reduced coproduct.
    pub primitive_dim: usize,
    /// Number of connected permutations.
    pub connected: u64,
    pub bracket_rank: usize,
    /// `primitive_dim − bracket_rank`: new generators needed in this degree.
    pub generators: usize,
    /// Coefficient of `tⁿ` in `1 − ∏(1−tᵏ)^{c_k}`.
    pub predicted: i64,
}

impl FreenessRow {
    pub fn consistent(&self) -> bool {
        self.primitive_dim as u64 == self.connected && self.generators as i64 == self.predicted
    }
}

/// Primitive dimensions and generator counts against `d(t) = 1 − ∏(1−tⁿ)^{c_n}`.
pub fn freeness_report(max_degree: usize) -> Result<Vec<FreenessRow>> {
    if max_degree > MAX_PRIMITIVE_DEGREE {
        return Err(bound("freeness report degree", MAX_PRIMITIVE_DEGREE));
    }
    let c = connected_counts(max_degree);
    let d = plethystic_product(&c, false, max_degree + 1);
    (1..=max_degree)
        .map(|n| {
            let primitive_dim = primitive_dimension(n)?;
            let bracket_rank = bracket_rank(n)?;
            let predicted = (int(0) - d.coeff(n)).to_integer().to_i64().unwrap_or(i64::MAX);
            Ok(FreenessRow {
                degree: n,
                primitive_dim,
                connected: c[n - 1].to_u64().unwrap_or(u64::MAX),
                bracket_rank,
                generators: primitive_dim - bracket_rank,
                predicted,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{comp, perm};

    #[test]
    fn sfact_example() {
        assert_eq!(sfact(&comp(&[2, 3]), &[5, 3, 4, 1, 2]), Some(vec![perm("21"), perm("312")]));
        assert_eq!(sfact(&comp(&[3]), &[2, 3, 1]), Some(vec![perm("231")]));
        assert_eq!(sfact(&comp(&[2]), &[1, 2, 3]), None);
    }

    #[test]
    fn pi_matches_v() {
        let f = |s: &str| FQElem::<Scalar>::f(&perm(s));
        assert!(pi_projector(&f("123")).unwrap().is_zero());
        assert_eq!(pi_projector(&f("312")).unwrap().to_string(), "-F[213] + F[312]");
        for n in 1..=4 {
            for s in permutations(n) {
                let p = pi_projector(&FQElem::<Scalar>::f(&s)).unwrap();
                assert_eq!(pi_projector(&p).unwrap(), p);
                if s.is_connected() {
                    assert_eq!(p, primitive_basis_v(&s).unwrap(), "{s}");
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}
