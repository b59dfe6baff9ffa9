//! The `q`-deformed product of FQSym and the quantum commutative image.

use super::{shifted_shuffle, FQElem, FqBasis};
use crate::combinatorics::{permutations, Permutation};
use crate::error::Result;
use crate::exactalg::{int, LinComb, QPoly, RingMatrix};
use crate::symfam::{QSymElem, QsBasis};

fn qmono(e: usize) -> QPoly {
    QPoly::monomial(int(1), e)
}

fn q_product_f(x: &LinComb<Permutation, QPoly>, y: &LinComb<Permutation, QPoly>) -> LinComb<Permutation, QPoly> {
    x.bilinear(y, |a, b| LinComb::from_terms(shifted_shuffle(a, b).into_iter().map(|(s, e)| (s, qmono(e)))))
}

/// Product of `FQSym_q`: `F_α ∗_q F_β = Σ ⟨σ | α ⧢_q β[k]⟩ F_σ`.
pub fn q_product(x: &FQElem<QPoly>, y: &FQElem<QPoly>) -> Result<FQElem<QPoly>> {
    Ok(FQElem::new(FqBasis::F, q_product_f(x.to_f()?.terms(), y.to_f()?.terms())))
}

/// Matrix whose column `σ` expands the `q`-product of the connected factors
/// of `σ` in the `F` basis; rows and columns in lexicographic order.
pub fn q_upper_matrix(n: usize) -> RingMatrix<QPoly> {
    let perms: Vec<Permutation> = permutations(n).collect();
    let mut m = RingMatrix::zeros(perms.len(), perms.len());
    for (j, s) in perms.iter().enumerate() {
        let mut acc = LinComb::basis(Permutation::identity(0));
        for part in s.connected_factorization() {
            acc = q_product_f(&acc, &LinComb::basis(part));
        }
        for (i, r) in perms.iter().enumerate() {
            m.set(i, j, acc.coeff(r));
        }
    }
    m
}

/// `φ_q(F_σ) = q^{ℓ(σ)} F_{C(σ)}` in `QSym_q`.
pub fn phi_q(x: &FQElem<QPoly>) -> Result<QSymElem<QPoly>> {
    let f = x.to_f()?;
    let terms = f.terms().map_linear(|s| LinComb::term(s.descent_composition(), qmono(s.length())));
    Ok(QSymElem::new(QsBasis::F, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;
    use num_traits::{One, Zero};

    fn fq(s: &str) -> FQElem<QPoly> {
        FQElem::f(&perm(s))
    }

    #[test]
    fn small_q_products() {
        assert_eq!(q_product(&fq("1"), &fq("1")).unwrap().to_string(), "F[12] + q*F[21]");
        // at q = 0 only the shifted concatenation survives
        for a in ["1", "21", "132"] {
            for b in ["1", "12", "21"] {
                let p = q_product(&fq(a), &fq(b)).unwrap();
                let at0: Vec<_> = p.terms().iter().filter(|(_, c)| !c.eval(&int(0)).is_zero()).collect();
                assert_eq!(at0.len(), 1);
                assert_eq!(*at0[0].0, perm(a).shifted_concat(&perm(b)));
            }
        }
    }

    #[test]
    fn upper_matrix_is_unitriangular() {
        for n in 1..=4 {
            let m = q_upper_matrix(n);
            for i in 0..m.rows() {
                assert!(m.get(i, i).is_one());
                for j in 0..i {
                    assert!(m.get(j, i).is_zero(), "entry above diagonal at n={n}");
                }
            }
        }
    }

    #[test]
    fn phi_q_examples() {
        assert_eq!(phi_q(&fq("21")).unwrap().to_string(), "q*F(1,1)");
        assert_eq!(phi_q(&fq("123")).unwrap().to_string(), "F(3)");
    }
}
