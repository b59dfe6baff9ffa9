//! Free quasi-symmetric functions on permutations.
//!
//! `F_σ` multiplies by the shifted shuffle and comultiplies by
//! deconcatenation followed by standardization; `G_σ = F_{σ⁻¹}`. The pairing
//! is `⟨F_σ, F_τ⟩ = δ(σ⁻¹ = τ)`, so `F` and `G` are dual bases.

mod checks;
mod convolution;
mod identities;
mod primitive;
mod qdeform;

pub use checks::{fqsym_axioms, MAX_FQSYM_AXIOM_DEGREE};
pub use convolution::{
    gbasis_q_shuffle, left_multiplication_matrix, pseudo_convolution, pseudo_convolution_q, pseudo_convolution_t, pseudo_convolution_t_q,
    TnWeighting, MAX_T_DEGREE,
};
pub use identities::{graded_series_inverse, hat, identity_check, IdentityReport, SeriesIdentity, MAX_SERIES_DEGREE};
pub use primitive::{
    bracket_rank, freeness_report, p_projector, pi_projector, primitive_basis_v, primitive_dimension, reduced_coproduct_matrix, sfact,
    FreenessRow, MAX_PRIMITIVE_DEGREE,
};
pub use qdeform::{phi_q, q_product, q_upper_matrix};

use crate::combinatorics::{permutations, shuffle_with_exponents, standardize_slice, Permutation};
use crate::error::{bound, Error, Result};
use crate::exactalg::{render_combination, LinComb, Ring, Scalar};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest degree for which change-of-basis tables to `V` are built.
pub const MAX_V_DEGREE: usize = 5;

/// Basis in which an element is stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FqBasis {
    F,
    G,
    /// Multiplicative basis `F^σ = F_{σ₁}⋯F_{σ_r}` over the connected factorization.
    FUpper,
    /// Multiplicative basis `G^σ = G_{σ₁}⋯G_{σ_r}`.
    GUpper,
    /// Basis adjoint to `G^σ`; `V_α` is primitive for connected `α`.
    V,
}

impl FqBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            FqBasis::F => "F",
            FqBasis::G => "G",
            FqBasis::FUpper => "Fup",
            FqBasis::GUpper => "Gup",
            FqBasis::V => "V",
        }
    }
}

/// Element of FQSym (or of its `q`-deformation when `R` is a polynomial ring).
#[derive(Clone, PartialEq, Debug)]
pub struct FQElem<R: Ring = Scalar> {
    basis: FqBasis,
    terms: LinComb<Permutation, R>,
}

/// Element of `FQSym ⊗ FQSym` in the `F ⊗ F` basis.
pub type FqTensor<R = Scalar> = LinComb<(Permutation, Permutation), R>;

impl<R: Ring> FQElem<R> {
    pub fn new(basis: FqBasis, terms: LinComb<Permutation, R>) -> Self {
        FQElem { basis, terms }
    }

    pub fn zero(basis: FqBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn one() -> Self {
        Self::new(FqBasis::F, LinComb::basis(Permutation::identity(0)))
    }

    pub fn basis_element(basis: FqBasis, s: Permutation) -> Self {
        Self::new(basis, LinComb::basis(s))
    }

    pub fn f(s: &Permutation) -> Self {
        Self::basis_element(FqBasis::F, s.clone())
    }

    pub fn g(s: &Permutation) -> Self {
        Self::basis_element(FqBasis::G, s.clone())
    }

    pub fn basis(&self) -> FqBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Permutation, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> Self {
        Self::new(self.basis, self.terms.filter(|s| s.size() == n))
    }

    /// Largest degree present (0 for the zero element).
    pub fn max_degree(&self) -> usize {
        self.terms.labels().map(|s| s.size()).max().unwrap_or(0)
    }

    /// Same element expressed in the `F` basis.
    pub fn to_f(&self) -> Result<Self> {
        let terms = match self.basis {
            FqBasis::F => self.terms.clone(),
            FqBasis::G => self.terms.map_basis(|s| s.inverse()),
            FqBasis::FUpper => self.terms.map_linear(|s| upper_f(s)),
            FqBasis::GUpper => self.terms.map_linear(|s| upper_f(&s.inverse())),
            FqBasis::V => {
                let mut out = LinComb::zero();
                for (s, c) in self.terms.iter() {
                    let col = v_in_f(s)?;
                    out.add_scaled(&col.map_coeffs(scalar_to_ring), c);
                }
                out
            }
        };
        Ok(Self::new(FqBasis::F, terms))
    }

    /// Same element expressed in `target`.
    pub fn to_basis(&self, target: FqBasis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let f = self.to_f()?.terms;
        let terms = match target {
            FqBasis::F => f,
            FqBasis::G => f.map_basis(|s| s.inverse()),
            FqBasis::FUpper => reduce_to_upper(f),
            FqBasis::GUpper => reduce_to_upper(f).map_basis(|s| s.inverse()),
            FqBasis::V => {
                // coefficient of V_τ is ⟨x, G^τ⟩, i.e. x paired with F^{τ⁻¹}
                let mut out = LinComb::zero();
                for n in f.labels().map(|s| s.size()).collect::<std::collections::BTreeSet<_>>() {
                    if n > MAX_V_DEGREE {
                        return Err(bound("V basis degree", MAX_V_DEGREE));
                    }
                    for t in permutations(n) {
                        let gu = upper_f(&t.inverse());
                        let c = f.pairing(&gu, |a, b| if a.inverse() == *b { R::one() } else { R::zero() });
                        out.add_term(t, c);
                    }
                }
                out
            }
        };
        Ok(Self::new(target, terms))
    }

    /// Product; operands in different bases are multiplied in `F`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let p = Self::new(FqBasis::F, product_f(&self.to_f()?.terms, &other.to_f()?.terms));
        if self.basis == other.basis && self.basis != FqBasis::F {
            p.to_basis(self.basis)
        } else {
            Ok(p)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis == other.basis {
            return Ok(Self::new(self.basis, self.terms.clone() + other.terms.clone()));
        }
        Ok(Self::new(FqBasis::F, self.to_f()?.terms + other.to_f()?.terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-R::one()))
    }

    /// Coproduct in `F ⊗ F`.
    pub fn coproduct(&self) -> Result<FqTensor<R>> {
        Ok(coproduct_f(&self.to_f()?.terms))
    }

    /// Duality pairing.
    pub fn pair(&self, other: &Self) -> Result<R> {
        Ok(pair_f(&self.to_f()?.terms, &other.to_f()?.terms))
    }

    pub fn render(&self) -> String {
        let sym = self.basis.symbol();
        render_combination(&self.terms, |s| if s.size() == 0 { None } else { Some(format!("{sym}[{s}]")) })
    }
}

impl<R: Ring> fmt::Display for FQElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Renders a tensor as `F[1] ⊗ F[12] + …`, using `1` for the unit.
pub fn render_tensor<R: Ring>(t: &FqTensor<R>, sym: &str) -> String {
    let side = |s: &Permutation| if s.size() == 0 { "1".to_string() } else { format!("{sym}[{s}]") };
    render_combination(t, |(a, b)| Some(format!("{} ⊗ {}", side(a), side(b))))
}

pub(crate) fn scalar_to_ring<R: Ring>(c: &Scalar) -> R {
    assert!(c.is_integer(), "integral change of basis expected");
    let v: i64 = c.to_integer().try_into().expect("coefficient fits in i64");
    R::from_i64(v)
}

/// Shifted shuffle `α ⧢ β[k]` together with the `q`-exponent of each term.
pub fn shifted_shuffle(a: &Permutation, b: &Permutation) -> Vec<(Permutation, usize)> {
    let k = a.size();
    let shifted: Vec<usize> = b.as_slice().iter().map(|x| x + k).collect();
    shuffle_with_exponents(a.as_slice(), &shifted).into_iter().map(|(w, e)| (Permutation::from_vec_unchecked(w), e)).collect()
}

/// Product in the `F` basis.
pub fn product_f<R: Ring>(x: &LinComb<Permutation, R>, y: &LinComb<Permutation, R>) -> LinComb<Permutation, R> {
    x.bilinear(y, |a, b| LinComb::from_terms(shifted_shuffle(a, b).into_iter().map(|(s, _)| (s, R::one()))))
}

/// Deconcatenation-standardization coproduct in the `F` basis.
pub fn coproduct_f<R: Ring>(x: &LinComb<Permutation, R>) -> FqTensor<R> {
    let mut out = LinComb::zero();
    for (s, c) in x.iter() {
        let w = s.as_slice();
        for k in 0..=w.len() {
            out.add_term((standardize_slice(&w[..k]), standardize_slice(&w[k..])), c.clone());
        }
    }
    out
}

/// `⟨F_σ, F_τ⟩ = δ(σ⁻¹ = τ)`, extended bilinearly.
pub fn pair_f<R: Ring>(x: &LinComb<Permutation, R>, y: &LinComb<Permutation, R>) -> R {
    x.pairing(y, |a, b| if a.size() == b.size() && a.inverse() == *b { R::one() } else { R::zero() })
}

/// Product of tensors componentwise: `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn tensor_product<R: Ring>(x: &FqTensor<R>, y: &FqTensor<R>) -> FqTensor<R> {
    x.bilinear(y, |(a, b), (c, d)| {
        let left = product_f::<R>(&LinComb::basis(a.clone()), &LinComb::basis(c.clone()));
        let right = product_f::<R>(&LinComb::basis(b.clone()), &LinComb::basis(d.clone()));
        left.bilinear(&right, |u, v| LinComb::basis((u.clone(), v.clone())))
    })
}

/// `⟨x ⊗ y, t⟩ = Σ ⟨x, a⟩⟨y, b⟩` over the terms `a ⊗ b` of `t`.
pub fn pair_tensor<R: Ring>(x: &LinComb<Permutation, R>, y: &LinComb<Permutation, R>, t: &FqTensor<R>) -> R {
    let mut acc = R::zero();
    for ((a, b), c) in t.iter() {
        let pa = x.coeff(&a.inverse());
        let pb = y.coeff(&b.inverse());
        acc = acc + pa * pb * c.clone();
    }
    acc
}

/// Expansion of `F^σ` in the `F` basis.
pub(crate) fn upper_f<R: Ring>(s: &Permutation) -> LinComb<Permutation, R> {
    let mut acc = LinComb::basis(Permutation::identity(0));
    for part in s.connected_factorization() {
        acc = product_f(&acc, &LinComb::basis(part));
    }
    acc
}

/// Expresses an `F`-combination in the `F^σ` basis by peeling off the
/// lexicographically smallest label: `F^σ = F_σ + (larger labels)`.
pub(crate) fn reduce_to_upper<R: Ring>(mut x: LinComb<Permutation, R>) -> LinComb<Permutation, R> {
    let mut out = LinComb::zero();
    loop {
        let Some((s, c)) = x.iter().next().map(|(s, c)| (s.clone(), c.clone())) else { break };
        let e = upper_f::<R>(&s);
        x.add_scaled(&e, &-c.clone());
        out.add_term(s, c);
    }
    out
}

type VTable = HashMap<Permutation, LinComb<Permutation, Scalar>>;

fn v_tables() -> &'static Mutex<HashMap<usize, Arc<VTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<VTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// `V_σ` in the `F` basis: `V_σ = Σ_ρ D[ρ][σ] F_ρ` where `G_ρ = Σ_σ D[ρ][σ] G^σ`.
pub(crate) fn v_in_f(s: &Permutation) -> Result<LinComb<Permutation, Scalar>> {
    let n = s.size();
    if n > MAX_V_DEGREE {
        return Err(bound("V basis degree", MAX_V_DEGREE));
    }
    let table = {
        let mut guard = v_tables().lock().map_err(|_| Error::Internal("V table lock poisoned".into()))?;
        guard.entry(n).or_insert_with(|| Arc::new(build_v_table(n))).clone()
    };
    Ok(table[s].clone())
}

fn build_v_table(n: usize) -> VTable {
    let mut table: VTable = permutations(n).map(|s| (s, LinComb::zero())).collect();
    for rho in permutations(n) {
        // G_ρ = F_{ρ⁻¹} = Σ c_π F^π = Σ c_π G^{π⁻¹}
        let upper = reduce_to_upper::<Scalar>(LinComb::basis(rho.inverse()));
        for (pi, c) in upper.iter() {
            table.get_mut(&pi.inverse()).expect("same degree").add_term(rho.clone(), c.clone());
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;

    fn f(s: &str) -> FQElem {
        FQElem::f(&perm(s))
    }

    #[test]
    fn products_and_coproducts() {
        assert_eq!(f("1").mul(&f("1")).unwrap().to_string(), "F[12] + F[21]");
        assert_eq!(f("12").mul(&f("1")).unwrap().to_string(), "F[123] + F[132] + F[312]");
        let d = f("312").coproduct().unwrap();
        assert_eq!(render_tensor(&d, "F"), "1 ⊗ F[312] + F[1] ⊗ F[12] + F[21] ⊗ F[1] + F[312] ⊗ 1");
        assert_eq!(f("312").pair(&f("231")).unwrap(), crate::exactalg::int(1));
    }

    #[test]
    fn v_examples() {
        let v = |s: &str| FQElem::<Scalar>::basis_element(FqBasis::V, perm(s)).to_f().unwrap().to_string();
        assert_eq!(v("312"), "-F[213] + F[312]");
        assert_eq!(v("321"), "F[123] - F[132] - F[213] + F[321]");
        assert_eq!(v("4132"), "F[2134] - F[2143] - F[3124] + F[4132]");
    }

    #[test]
    fn upper_roundtrip() {
        for n in 0..=4 {
            for s in permutations(n) {
                for b in [FqBasis::G, FqBasis::FUpper, FqBasis::GUpper, FqBasis::V] {
                    let x = f(&s.to_string()).to_basis(b).unwrap();
                    assert_eq!(x.to_f().unwrap(), f(&s.to_string()), "{s} {b:?}");
                }
            }
        }
    }
}
