use super::SymElem;
use crate::combinatorics::{alpha, shuffle_with_exponents, Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exactalg::{render_combination, LinComb, QPoly, Ring, Scalar};
use crate::fqsym::FQElem;
use num_traits::{One, Zero};
use std::fmt;

/// Basis of quasi-symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QsBasis {
    /// Monomial quasi-symmetric functions.
    M,
    /// Fundamental (quasi-ribbon) functions.
    F,
}

/// Quasi-symmetric function; with `R = QPoly` the `q`-deformed product is
/// available through [`QSymElem::q_product`].
#[derive(Clone, PartialEq, Debug)]
pub struct QSymElem<R: Ring = Scalar> {
    basis: QsBasis,
    terms: LinComb<Composition, R>,
}

/// Compositions whose descent set contains that of `i` (finer or equal).
pub(crate) fn refinements(i: &Composition) -> Vec<Composition> {
    let n = i.weight();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let base = i.descent_set();
    let free: Vec<usize> = (1..n).filter(|d| !base.contains(d)).collect();
    (0u64..(1 << free.len()))
        .map(|mask| {
            let mut d = base.clone();
            d.extend(free.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &x)| x));
            Composition::from_descents(n, &d)
        })
        .collect()
}

/// Terms `(C(w), exponent)` of `u ⧢_q v[k]` for representatives of `I`, `J`.
pub(crate) fn f_shuffle_terms(i: &Composition, j: &Composition) -> Vec<(Composition, usize)> {
    let u = alpha(i);
    let k = u.size();
    let v: Vec<usize> = alpha(j).as_slice().iter().map(|x| x + k).collect();
    shuffle_with_exponents(u.as_slice(), &v)
        .into_iter()
        .map(|(w, e)| (Permutation::from_vec_unchecked(w).descent_composition(), e))
        .collect()
}

impl<R: Ring> QSymElem<R> {
    pub fn new(basis: QsBasis, terms: LinComb<Composition, R>) -> Self {
        QSymElem { basis, terms }
    }

    pub fn f(i: &Composition) -> Self {
        Self::new(QsBasis::F, LinComb::basis(i.clone()))
    }

    pub fn m(i: &Composition) -> Self {
        Self::new(QsBasis::M, LinComb::basis(i.clone()))
    }

    pub fn one() -> Self {
        Self::f(&Composition::empty())
    }

    pub fn zero(basis: QsBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn basis(&self) -> QsBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    pub fn to_basis(&self, target: QsBasis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let terms = match target {
            // F_I = Σ_{J finer} M_J
            QsBasis::M => self.terms.map_linear(|i| LinComb::from_terms(refinements(i).into_iter().map(|j| (j, R::one())))),
            // M_I = Σ_{J finer} (−1)^{ℓ(J)−ℓ(I)} F_J
            QsBasis::F => self.terms.map_linear(|i| {
                LinComb::from_terms(refinements(i).into_iter().map(|j| {
                    let sign = if (j.len() - i.len()) % 2 == 0 { R::one() } else { -R::one() };
                    (j, sign)
                }))
            }),
        };
        Self::new(target, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.basis, self.terms.clone() + other.to_basis(self.basis).terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-R::one()))
    }

    /// Classical product; the result is in the `F` basis.
    pub fn product(&self, other: &Self) -> Self {
        let a = self.to_basis(QsBasis::F);
        let b = other.to_basis(QsBasis::F);
        let terms = a.terms.bilinear(&b.terms, |i, j| LinComb::from_terms(f_shuffle_terms(i, j).into_iter().map(|(c, _)| (c, R::one()))));
        Self::new(QsBasis::F, terms)
    }

    /// True when every `M_I` coefficient only depends on the sorted parts.
    pub fn is_symmetric(&self) -> bool {
        let m = self.to_basis(QsBasis::M);
        m.terms.iter().all(|(i, c)| {
            let sorted = i.sorted_partition().as_composition();
            m.terms.coeff(&sorted) == *c
        }) && m.terms.iter().all(|(i, _)| {
            // every rearrangement must be present as well
            rearrangements(i).iter().all(|j| m.terms.coeff(j) == m.terms.coeff(i))
        })
    }

    pub fn render(&self) -> String {
        let sym = match self.basis {
            QsBasis::M => "M",
            QsBasis::F => "F",
        };
        render_combination(&self.terms, |i| if i.is_empty() { None } else { Some(format!("{sym}{i}")) })
    }
}

fn rearrangements(i: &Composition) -> Vec<Composition> {
    use itertools::Itertools;
    let mut parts = i.parts().to_vec();
    parts.sort_unstable();
    let n = parts.len();
    parts.into_iter().permutations(n).unique().map(|p| Composition::new(p).expect("positive parts")).collect()
}

impl QSymElem<Scalar> {
    /// Symmetric function with the same monomial expansion, if symmetric.
    pub fn to_sym(&self) -> Result<SymElem> {
        if !self.is_symmetric() {
            return Err(Error::Invalid(format!("{} is not symmetric", self.render())));
        }
        let m = self.to_basis(QsBasis::M);
        let terms = LinComb::from_terms(
            m.terms
                .iter()
                .filter(|(i, _)| i.parts().windows(2).all(|w| w[0] >= w[1]))
                .map(|(i, c)| (Partition::new(i.parts().to_vec()).expect("sorted"), c.clone())),
        );
        Ok(SymElem::new(super::SymBasis::M, terms))
    }

    /// Evaluation at finitely many commuting variables.
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let m = self.to_basis(QsBasis::M);
        m.terms.iter().map(|(i, c)| c.clone() * eval_monomial(i, x)).fold(Scalar::zero(), |a, b| a + b)
    }
}

/// `M_I(x) = Σ_{j₁<⋯<j_r} x_{j₁}^{i₁}⋯x_{j_r}^{i_r}`.
pub fn eval_monomial(i: &Composition, x: &[Scalar]) -> Scalar {
    // dp[j] = sum over placements of the parts seen so far using variables < j
    let mut dp = vec![Scalar::one(); x.len() + 1];
    for &p in i.parts() {
        let mut next = vec![Scalar::zero(); x.len() + 1];
        for j in 0..x.len() {
            let term = dp[j].clone() * pow(&x[j], p);
            next[j + 1] = next[j].clone() + term;
        }
        dp = next;
    }
    dp[x.len()].clone()
}

fn pow(x: &Scalar, e: usize) -> Scalar {
    (0..e).fold(Scalar::one(), |a, _| a * x.clone())
}

impl QSymElem<QPoly> {
    /// Product of `QSym_q`: the shuffle is replaced by the `q`-shuffle.
    pub fn q_product(&self, other: &Self) -> Self {
        let a = self.to_basis(QsBasis::F);
        let b = other.to_basis(QsBasis::F);
        let terms = a.terms.bilinear(&b.terms, |i, j| {
            LinComb::from_terms(f_shuffle_terms(i, j).into_iter().map(|(c, e)| (c, QPoly::monomial(Scalar::one(), e))))
        });
        Self::new(QsBasis::F, terms)
    }

    /// Substitutes a rational value for `q`.
    pub fn specialize(&self, q: &Scalar) -> QSymElem<Scalar> {
        QSymElem::new(self.basis, self.terms.map_coeffs(|p| p.eval(q)))
    }
}

impl<R: Ring> fmt::Display for QSymElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Commutative image `F_σ ↦ F_{C(σ)}`.
pub fn commutative_image<R: Ring>(x: &FQElem<R>) -> Result<QSymElem<R>> {
    let f = x.to_f()?;
    Ok(QSymElem::new(QsBasis::F, f.terms().map_basis(|s| s.descent_composition())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp;

    #[test]
    fn small_products() {
        let f1 = QSymElem::<Scalar>::f(&comp(&[1]));
        assert_eq!(f1.product(&f1).to_string(), "F(1,1) + F(2)");
        let q1 = QSymElem::<QPoly>::f(&comp(&[1]));
        assert_eq!(q1.q_product(&q1).to_string(), "q*F(1,1) + F(2)");
        let q2 = QSymElem::<QPoly>::f(&comp(&[2]));
        assert_ne!(q1.q_product(&q2), q2.q_product(&q1));
    }

    #[test]
    fn basis_roundtrip() {
        for n in 0..=6 {
            for i in Composition::all(n) {
                let x = QSymElem::<Scalar>::f(&i);
                assert_eq!(x.to_basis(QsBasis::M).to_basis(QsBasis::F), x);
                let y = QSymElem::<Scalar>::m(&i);
                assert_eq!(y.to_basis(QsBasis::F).to_basis(QsBasis::M), y);
            }
        }
    }
}
