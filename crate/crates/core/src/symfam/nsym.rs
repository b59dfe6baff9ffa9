use super::{SymBasis, SymElem};
use crate::combinatorics::{descent_class, Composition};
use crate::exactalg::{render_combination, LinComb, Scalar};
use crate::fqsym::{FQElem, FqBasis};
use num_traits::One;
use std::fmt;

/// Bases of noncommutative symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NsBasis {
    /// Products of complete functions `S^I = S_{i₁}⋯S_{i_r}`.
    S,
    /// Ribbon Schur functions `R_I`.
    R,
}

/// Noncommutative symmetric function with rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NSymElem {
    basis: NsBasis,
    terms: LinComb<Composition, Scalar>,
}

/// Compositions whose descent set is contained in that of `i` (coarser or equal).
fn coarsenings(i: &Composition) -> Vec<Composition> {
    let n = i.weight();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let d = i.descent_set();
    (0u64..(1 << d.len()))
        .map(|mask| {
            let kept: Vec<usize> = d.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &x)| x).collect();
            Composition::from_descents(n, &kept)
        })
        .collect()
}

impl NSymElem {
    pub fn new(basis: NsBasis, terms: LinComb<Composition, Scalar>) -> Self {
        NSymElem { basis, terms }
    }

    pub fn s(i: &Composition) -> Self {
        Self::new(NsBasis::S, LinComb::basis(i.clone()))
    }

    pub fn r(i: &Composition) -> Self {
        Self::new(NsBasis::R, LinComb::basis(i.clone()))
    }

    pub fn basis(&self) -> NsBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, Scalar> {
        &self.terms
    }

    pub fn to_basis(&self, target: NsBasis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let terms = match target {
            // S^I = Σ_{J coarser} R_J
            NsBasis::R => self.terms.map_linear(|i| LinComb::from_terms(coarsenings(i).into_iter().map(|j| (j, Scalar::one())))),
            // R_I = Σ_{J coarser} (−1)^{ℓ(I)−ℓ(J)} S^J
            NsBasis::S => self.terms.map_linear(|i| {
                LinComb::from_terms(coarsenings(i).into_iter().map(|j| {
                    let sign = if (i.len() - j.len()) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                    (j, sign)
                }))
            }),
        };
        Self::new(target, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.basis, self.terms.clone() + other.to_basis(self.basis).terms)
    }

    /// Product in the ribbon basis: `R_I R_J = R_{I·J} + R_{I▷J}`.
    pub fn ribbon_product(&self, other: &Self) -> Self {
        let a = self.to_basis(NsBasis::R);
        let b = other.to_basis(NsBasis::R);
        let terms = a.terms.bilinear(&b.terms, |i, j| {
            if i.is_empty() || j.is_empty() {
                return LinComb::basis(i.concat(j));
            }
            LinComb::from_terms([(i.concat(j), Scalar::one()), (i.glue(j), Scalar::one())])
        });
        Self::new(NsBasis::R, terms)
    }

    /// Product in the `S` basis, by concatenation of compositions.
    pub fn product(&self, other: &Self) -> Self {
        let a = self.to_basis(NsBasis::S);
        let b = other.to_basis(NsBasis::S);
        Self::new(NsBasis::S, a.terms.bilinear(&b.terms, |i, j| LinComb::basis(i.concat(j))))
    }

    /// Embedding `R_I ↦ Σ_{C(σ)=I} G_σ` into FQSym, in the `G` basis.
    pub fn embed_fqsym(&self) -> FQElem {
        let r = self.to_basis(NsBasis::R);
        FQElem::new(FqBasis::G, r.terms.map_linear(|i| LinComb::from_terms(descent_class(i).into_iter().map(|s| (s, Scalar::one())))))
    }

    /// Commutative image `S^I ↦ h_{sort(I)}`.
    pub fn commutative_image(&self) -> SymElem {
        let s = self.to_basis(NsBasis::S);
        SymElem::new(SymBasis::H, s.terms.map_basis(|i| i.sorted_partition()))
    }

    pub fn render(&self) -> String {
        let sym = match self.basis {
            NsBasis::S => "S",
            NsBasis::R => "R",
        };
        render_combination(&self.terms, |i| if i.is_empty() { None } else { Some(format!("{sym}{i}")) })
    }
}

impl fmt::Display for NSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp;

    #[test]
    fn ribbons() {
        let r1 = NSymElem::r(&comp(&[1]));
        assert_eq!(r1.ribbon_product(&r1).to_string(), "R(1,1) + R(2)");
        assert_eq!(NSymElem::r(&comp(&[2, 1])).embed_fqsym().to_string(), "G[132] + G[231]");
        for n in 0..=5 {
            for i in Composition::all(n) {
                let x = NSymElem::s(&i);
                assert_eq!(x.to_basis(NsBasis::R).to_basis(NsBasis::S), x);
            }
        }
    }
}
