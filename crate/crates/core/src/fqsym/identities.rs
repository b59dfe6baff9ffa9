//! Truncated inverses of graded series and the three conjectural inverse
//! identities `H₁`, `H₂`, `H₃`.

use super::{product_f, FQElem, FqBasis};
use crate::combinatorics::{alpha, omega, permutations, Composition, Permutation};
use crate::error::{bound, Error, Result};
use crate::exactalg::{LinComb, Ring, Scalar};
use num_traits::One;

/// Largest truncation degree for the identity checks.
pub const MAX_SERIES_DEGREE: usize = 6;

/// Inverse of `x` truncated after degree `max_degree`; the degree-0
/// coefficient of `x` must be 1.
pub fn graded_series_inverse<R: Ring>(x: &FQElem<R>, max_degree: usize) -> Result<FQElem<R>> {
    let f = x.to_f()?;
    if f.terms().coeff(&Permutation::identity(0)) != R::one() {
        return Err(Error::NotUnit);
    }
    let comps: Vec<LinComb<Permutation, R>> = (0..=max_degree).map(|n| f.terms().filter(|s| s.size() == n)).collect();
    let mut inv: Vec<LinComb<Permutation, R>> = vec![LinComb::basis(Permutation::identity(0))];
    for n in 1..=max_degree {
        let mut acc = LinComb::zero();
        for k in 1..=n {
            acc = acc - product_f(&comps[k], &inv[n - k]);
        }
        inv.push(acc);
    }
    let total = inv.into_iter().fold(LinComb::zero(), |a, b| a + b);
    Ok(FQElem::new(FqBasis::F, total))
}

/// `σ̂ = σ · α(C(σ))`.
pub fn hat(s: &Permutation) -> Permutation {
    s.compose(&alpha(&s.descent_composition()))
}

/// The three series whose inverses are conjectured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesIdentity {
    /// `H₁ = Σ_I (−1)^{ℓ(I)} F_{ω(I)}`, inverse `Σ_α G_{α̂}` over all `α`.
    H1,
    /// `H₂ = Σ_n (−1)^n F_{ω(2ⁿ)}`, inverse `Σ_β G_{β̂}` over `β` with `C(β) = (2,…,2)`.
    H2,
    /// `H₃ = Σ_I (−1)^{ℓ(I)} F_{ω(2I)}`, inverse `Σ_γ G_{γ̂}` over `γ ∈ S_{2p}`
    /// with descents among the even positions.
    H3,
}

impl SeriesIdentity {
    pub fn name(self) -> &'static str {
        match self {
            SeriesIdentity::H1 => "H1",
            SeriesIdentity::H2 => "H2",
            SeriesIdentity::H3 => "H3",
        }
    }

    /// The series `H`, truncated after `max_degree`.
    pub fn series(self, max_degree: usize) -> FQElem {
        let mut out = LinComb::zero();
        for n in 0..=max_degree {
            for i in Composition::all(n) {
                let (label, sign) = match self {
                    SeriesIdentity::H1 => (i.clone(), i.len()),
                    SeriesIdentity::H2 => {
                        if i.parts().iter().any(|&p| p != 2) {
                            continue;
                        }
                        (i.clone(), i.len())
                    }
                    SeriesIdentity::H3 => {
                        if n % 2 == 1 || !i.parts().iter().all(|&p| p % 2 == 0) {
                            continue;
                        }
                        // i = 2J with ℓ(J) = ℓ(i)
                        (i.clone(), i.len())
                    }
                };
                let c = if sign % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                out.add_term(omega(&label), c);
            }
        }
        FQElem::new(FqBasis::F, out)
    }

    fn admits(self, s: &Permutation) -> bool {
        let n = s.size();
        match self {
            SeriesIdentity::H1 => true,
            SeriesIdentity::H2 => n.is_multiple_of(2) && s.descents() == (1..n / 2).map(|k| 2 * k).collect::<Vec<_>>(),
            SeriesIdentity::H3 => n.is_multiple_of(2) && s.descents().iter().all(|d| d % 2 == 0),
        }
    }

    /// The conjectured inverse `Σ G_{σ̂}`, in the `G` basis.
    pub fn claimed_inverse(self, max_degree: usize) -> FQElem {
        let mut out = LinComb::zero();
        for n in 0..=max_degree {
            for s in permutations(n).filter(|s| self.admits(s)) {
                out.add_term(hat(&s), Scalar::one());
            }
        }
        FQElem::new(FqBasis::G, out)
    }
}

/// Degreewise comparison of `H⁻¹` with the conjectured expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub identity: SeriesIdentity,
    /// `(degree, holds)` for every degree up to the truncation.
    pub degrees: Vec<(usize, bool)>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|&(_, ok)| ok)
    }

    /// First degree where the conjectured expansion differs, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.degrees.iter().find(|(_, ok)| !ok).map(|&(n, _)| n)
    }
}

/// Compares the truncated inverse of `H` with `Σ G_{σ̂}` degree by degree.
pub fn identity_check(identity: SeriesIdentity, max_degree: usize) -> Result<IdentityReport> {
    if max_degree > MAX_SERIES_DEGREE {
        return Err(bound("series truncation degree", MAX_SERIES_DEGREE));
    }
    let inv = graded_series_inverse(&identity.series(max_degree), max_degree)?;
    let claimed = identity.claimed_inverse(max_degree).to_f()?;
    let degrees = (0..=max_degree).map(|n| (n, inv.component(n) == claimed.component(n))).collect();
    Ok(IdentityReport { identity, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;

    #[test]
    fn geometric_inverse() {
        let x = FQElem::<Scalar>::one().add(&FQElem::f(&perm("1"))).unwrap();
        let inv = graded_series_inverse(&x, 2).unwrap();
        assert_eq!(inv.to_string(), "1 - F[1] + F[12] + F[21]");
        let bad = FQElem::<Scalar>::f(&perm("1"));
        assert_eq!(graded_series_inverse(&bad, 2), Err(Error::NotUnit));
    }

    #[test]
    fn low_degrees() {
        let r = identity_check(SeriesIdentity::H1, 2).unwrap();
        assert!(r.holds());
        assert_eq!(hat(&perm("21")), perm("12"));
    }
}
