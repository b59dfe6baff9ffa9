//! Pseudo-convolution `□` on the group algebras of the symmetric groups and
//! the elements `T_n`, `T_n(q)`.

use super::{FQElem, FqBasis};
use crate::combinatorics::{permutations, shuffle_with_exponents, standardize_slice, Permutation};
use crate::error::{bound, Result};
use crate::exactalg::{int, LinComb, QPoly, Ring, RingMatrix, Scalar};
use itertools::Itertools;

/// Largest `n` for which `T_n` is built.
pub const MAX_T_DEGREE: usize = 5;

/// How the terms `S_k ⧢_q S_{n−k}` are weighted in `T_n(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TnWeighting {
    /// `T_n(q) = Σ_k (1⋯k) □_q (1⋯n−k)`.
    #[default]
    Plain,
    /// `T_n(q) = Σ_k q^k (1⋯k) □_q (1⋯n−k)`.
    PowerOfK,
}

/// `α □_q β = Σ_{I⊔J=[1,k+l]} i_{α(1)}⋯i_{α(k)} ⧢_q j_{β(1)}⋯j_{β(l)}`,
/// enumerating the value subsets `I` explicitly.
pub fn pseudo_convolution_q(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation, QPoly> {
    let (k, l) = (alpha.size(), beta.size());
    let mut out = LinComb::zero();
    for subset in (1..=k + l).combinations(k) {
        let rest: Vec<usize> = (1..=k + l).filter(|x| !subset.contains(x)).collect();
        let u: Vec<usize> = alpha.as_slice().iter().map(|&a| subset[a - 1]).collect();
        let v: Vec<usize> = beta.as_slice().iter().map(|&b| rest[b - 1]).collect();
        for (w, e) in shuffle_with_exponents(&u, &v) {
            out.add_term(Permutation::from_vec_unchecked(w), QPoly::monomial(int(1), e));
        }
    }
    out
}

/// `α □ β`, the `q = 1` specialization.
pub fn pseudo_convolution(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation, Scalar> {
    pseudo_convolution_q(alpha, beta).map_coeffs(|p| p.eval(&int(1)))
}

/// `G_α ⧢_q G_β` computed in the polynomial realization `G_σ = Σ_{Std(w)=σ} w`:
/// the coefficient of `G_σ` is that of the standard word `σ`, obtained by
/// splitting the positions of `σ` into a subword of pattern `α` and one of
/// pattern `β`.
pub fn gbasis_q_shuffle(alpha: &Permutation, beta: &Permutation) -> FQElem<QPoly> {
    let (k, l) = (alpha.size(), beta.size());
    let mut out = LinComb::zero();
    for sigma in permutations(k + l) {
        let w = sigma.as_slice();
        let mut coeff = QPoly::from_ints(&[]);
        for positions in (0..k + l).combinations(k) {
            let mut left = Vec::with_capacity(k);
            let mut right = Vec::with_capacity(l);
            let mut exponent = 0;
            for (p, &x) in w.iter().enumerate() {
                if positions.contains(&p) {
                    left.push(x);
                } else {
                    right.push(x);
                    // letters of the left factor still to come
                    exponent += positions.iter().filter(|&&s| s > p).count();
                }
            }
            if standardize_slice(&left) == *alpha && standardize_slice(&right) == *beta {
                coeff = coeff + QPoly::monomial(int(1), exponent);
            }
        }
        out.add_term(sigma, coeff);
    }
    FQElem::new(FqBasis::G, out)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_T_DEGREE {
        return Err(bound("T_n degree (1..=5)", MAX_T_DEGREE));
    }
    Ok(())
}

/// `T_n(q)` in the group algebra of `S_n`.
pub fn pseudo_convolution_t_q(n: usize, weighting: TnWeighting) -> Result<LinComb<Permutation, QPoly>> {
    check_degree(n)?;
    let mut out = LinComb::zero();
    for k in 0..=n {
        let term = pseudo_convolution_q(&Permutation::identity(k), &Permutation::identity(n - k));
        let weight = match weighting {
            TnWeighting::Plain => QPoly::from_ints(&[1]),
            TnWeighting::PowerOfK => QPoly::monomial(int(1), k),
        };
        out.add_scaled(&term, &weight);
    }
    Ok(out)
}

/// `T_n = Σ_k (1⋯k) □ (1⋯n−k)`.
pub fn pseudo_convolution_t(n: usize) -> Result<LinComb<Permutation, Scalar>> {
    Ok(pseudo_convolution_t_q(n, TnWeighting::Plain)?.map_coeffs(|p| p.eval(&int(1))))
}

/// Matrix of `y ↦ x·y` on the regular representation of `S_n`, with
/// `(στ)(i) = σ(τ(i))`; basis in lexicographic order.
pub fn left_multiplication_matrix<R: Ring>(x: &LinComb<Permutation, R>, n: usize) -> RingMatrix<R> {
    let perms: Vec<Permutation> = permutations(n).collect();
    let index = |s: &Permutation| perms.binary_search(s).expect("same degree");
    let mut m = RingMatrix::zeros(perms.len(), perms.len());
    for (j, tau) in perms.iter().enumerate() {
        for (sigma, c) in x.iter().filter(|(s, _)| s.size() == n) {
            let i = index(&sigma.compose(tau));
            let cur = m.get(i, j);
            m.set(i, j, cur + c.clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;

    #[test]
    fn two_routes_agree() {
        let small: Vec<Permutation> = (0..=3).flat_map(permutations).collect();
        for a in &small {
            for b in &small {
                if a.size() + b.size() > 4 {
                    continue;
                }
                let g = gbasis_q_shuffle(a, b);
                assert_eq!(g.terms(), &pseudo_convolution_q(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn g1_g1() {
        let p = pseudo_convolution(&perm("1"), &perm("1"));
        assert_eq!(p.coeff(&perm("12")), int(2));
        assert_eq!(p.coeff(&perm("21")), int(2));
    }
}
