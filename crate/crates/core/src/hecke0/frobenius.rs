use super::algebra::HeckeElem;
use crate::combinatorics::{order_leq, permutations, Order, Permutation};
use crate::error::{bound, Result};
use crate::exactalg::{int, LinComb, Scalar};

/// Largest rank accepted by [`frobenius`].
pub const MAX_FROBENIUS_DEGREE: usize = 5;

/// `(f, g)`: coefficient of `T_ω` in `fg`.
pub fn frobenius_form(f: &HeckeElem, g: &HeckeElem) -> Result<Scalar> {
    let w = Permutation::longest(f.rank());
    Ok(f.mul(g)?.coeff(&w))
}

/// `ζ_σ = (−1)^{ℓ(ωσ⁻¹)} ξ_{ωσ⁻¹}`.
pub fn zeta(s: &Permutation) -> HeckeElem {
    let x = Permutation::longest(s.size()).compose(&s.inverse());
    let sign = if x.length().is_multiple_of(2) { int(1) } else { int(-1) };
    HeckeElem::xi_perm(&x).scale(&sign)
}

/// `δ(1) = Σ_σ η_σ ⊗ ζ_σ` in the `T ⊗ T` basis.
pub fn delta_one(n: usize) -> LinComb<(Permutation, Permutation), Scalar> {
    let mut out = LinComb::zero();
    for s in permutations(n) {
        let e = HeckeElem::eta_perm(&s);
        let z = zeta(&s);
        out.add_scaled(&e.terms().bilinear(z.terms(), |a, b| LinComb::basis((a.clone(), b.clone()))), &int(1));
    }
    out
}

/// Checks on the bilinear form. The identities are compared against
/// `sign · δ`, where `sign = (−1)^{ℓ(ω)}` is the coefficient of `T_ω` in `η_ω`;
/// the unsigned reading (`*_literal`) is recorded alongside.
#[derive(Debug, Clone)]
pub struct FrobeniusReport {
    pub n: usize,
    pub sign: i64,
    /// Rank of the Gram matrix on the `T` basis.
    pub gram_rank: usize,
    /// `(η_σ, η_{τ⁻¹ω}) = sign · δ(σ ≥ τ)` in the Bruhat order.
    pub gram_bruhat: bool,
    pub gram_bruhat_literal: bool,
    /// `(ζ_σ, η_τ) = sign · δ_{στ}`.
    pub biorthogonal: bool,
    pub biorthogonal_literal: bool,
    /// `Tᵢ δ(1) = δ(1) Tᵢ` for every generator.
    pub bimodule: bool,
    /// `(ab, c) = (a, bc)` on triples of `T` basis elements.
    pub associative: bool,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        let fact: usize = (1..=self.n).product();
        self.gram_rank == fact && self.gram_bruhat && self.biorthogonal && self.bimodule && self.associative
    }
}

pub fn frobenius(n: usize) -> Result<FrobeniusReport> {
    if n == 0 || n > MAX_FROBENIUS_DEGREE {
        return Err(bound("Frobenius form checks", MAX_FROBENIUS_DEGREE));
    }
    let perms: Vec<Permutation> = permutations(n).collect();
    let w = Permutation::longest(n);
    let sign: i64 = if w.length().is_multiple_of(2) { 1 } else { -1 };
    let eta: Vec<HeckeElem> = perms.iter().map(HeckeElem::eta_perm).collect();
    let t: Vec<HeckeElem> = perms.iter().map(HeckeElem::t_basis).collect();

    let gram: Vec<Vec<Scalar>> = t.iter().map(|a| t.iter().map(|b| frobenius_form(a, b)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let gram_rank = crate::exactalg::RingMatrix::from_rows(gram)?.rank();

    let (mut gram_bruhat, mut gram_bruhat_literal) = (true, true);
    for (s, es) in perms.iter().zip(&eta) {
        for tau in &perms {
            let other = HeckeElem::eta_perm(&tau.inverse().compose(&w));
            let v = frobenius_form(es, &other)?;
            let d = order_leq(tau, s, Order::Bruhat)? as i64;
            gram_bruhat &= v == int(sign * d);
            gram_bruhat_literal &= v == int(d);
        }
    }

    let (mut biorthogonal, mut biorthogonal_literal) = (true, true);
    for s in &perms {
        let z = zeta(s);
        for (tau, et) in perms.iter().zip(&eta) {
            let v = frobenius_form(&z, et)?;
            let d = (s == tau) as i64;
            biorthogonal &= v == int(sign * d);
            biorthogonal_literal &= v == int(d);
        }
    }

    let delta = delta_one(n);
    let mut bimodule = true;
    for i in 1..n {
        let ti = HeckeElem::t(n, i)?;
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in delta.iter() {
            let la = ti.mul(&HeckeElem::t_basis(a))?;
            let rb = HeckeElem::t_basis(b).mul(&ti)?;
            for (x, cx) in la.terms().iter() {
                left.add_term((x.clone(), b.clone()), cx.clone() * c);
            }
            for (y, cy) in rb.terms().iter() {
                right.add_term((a.clone(), y.clone()), cy.clone() * c);
            }
        }
        bimodule &= (left - right).is_zero();
    }

    // Beyond rank 4 the middle factor runs over generators only.
    let middle: Vec<HeckeElem> = if n <= 4 { t.clone() } else { (1..n).map(|i| HeckeElem::t(n, i)).collect::<Result<_>>()? };
    let mut associative = true;
    'outer: for a in &t {
        for b in &middle {
            let ab = a.mul(b)?;
            for c in &t {
                let lhs = frobenius_form(&ab, c)?;
                let rhs = frobenius_form(a, &b.mul(c)?)?;
                if lhs != rhs {
                    associative = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(FrobeniusReport { n, sign, gram_rank, gram_bruhat, gram_bruhat_literal, biorthogonal, biorthogonal_literal, bimodule, associative })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_signs() {
        let r = frobenius(2).unwrap();
        assert_eq!(r.sign, -1);
        assert!(r.passed());
        // The unsigned identities are off by the global sign here.
        assert!(!r.biorthogonal_literal);
    }

    #[test]
    fn rank_three_and_four() {
        for n in [3, 4] {
            assert!(frobenius(n).unwrap().passed(), "n = {n}");
        }
        assert!(frobenius(4).unwrap().biorthogonal_literal);
    }
}
