//! The `QS`-distribution on permutations: `Prob(σ) = F_{C(σ⁻¹)}(x)`.

use super::{power_sum, QSymElem, QsBasis};
use crate::combinatorics::{permutations, Partition, Permutation};
use crate::error::{bound, Error, Result};
use crate::exactalg::{int, LinComb, QPoly, Ring, RingMatrix, Scalar};
use crate::fqsym::left_multiplication_matrix;
use num_traits::{One, Signed, Zero};

/// Largest `n` for the distribution report (`Γ_n` is `n! × n!`).
pub const MAX_DISTRIBUTION_DEGREE: usize = 5;

/// Probabilities, the operator `Γ_n(x)` and the checks run on them.
#[derive(Clone, Debug)]
pub struct QsReport {
    pub n: usize,
    pub probabilities: Vec<(Permutation, Scalar)>,
    pub total: Scalar,
    pub charpoly: QPoly,
    /// `∏_λ (t − p_λ(x))^{n!/z_λ}`.
    pub predicted: QPoly,
    /// Whether `Σ q^{ℓ(σ)} F_{C(σ⁻¹)} = Σ q^{maj(σ)} F_{C(σ⁻¹)}` in `QSym[q]`.
    pub inv_maj_symbolic: bool,
    /// The same identity evaluated at `x`.
    pub inv_maj_numeric: bool,
}

impl QsReport {
    pub fn eigenvalues_ok(&self) -> bool {
        self.charpoly == self.predicted
    }

    pub fn passed(&self) -> bool {
        self.total.is_one() && self.eigenvalues_ok() && self.inv_maj_symbolic && self.inv_maj_numeric
    }

    /// `permutation<TAB>probability` lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("permutation\tprobability\n");
        for (s, p) in &self.probabilities {
            out.push_str(&format!("{s}\t{}\n", p.render()));
        }
        out
    }
}

fn validate(x: &[Scalar]) -> Result<()> {
    if x.is_empty() {
        return Err(Error::Invalid("empty probability vector".into()));
    }
    if x.iter().any(|v| v.is_negative()) {
        return Err(Error::Invalid("probabilities must be nonnegative".into()));
    }
    let total = x.iter().fold(Scalar::zero(), |a, b| a + b);
    if !total.is_one() {
        return Err(Error::Invalid(format!("probabilities sum to {}", total.render())));
    }
    Ok(())
}

/// Both sides of the `inv`/`maj` identity as `QSym[q]` elements.
pub fn inv_maj_sides(n: usize) -> (QSymElem<QPoly>, QSymElem<QPoly>) {
    let side = |stat: fn(&Permutation) -> usize| {
        QSymElem::new(
            QsBasis::F,
            LinComb::from_terms(permutations(n).map(|s| (s.inverse().descent_composition(), QPoly::monomial(int(1), stat(&s))))),
        )
    };
    (side(Permutation::length), side(Permutation::maj))
}

/// Builds the report for `S_n` at the probability vector `x`.
pub fn qs_distribution(x: &[Scalar], n: usize) -> Result<QsReport> {
    validate(x)?;
    if n > MAX_DISTRIBUTION_DEGREE {
        return Err(bound("QS-distribution degree", MAX_DISTRIBUTION_DEGREE));
    }
    let probabilities: Vec<(Permutation, Scalar)> = permutations(n)
        .map(|s| {
            let p = QSymElem::<Scalar>::f(&s.inverse().descent_composition()).eval(x);
            (s, p)
        })
        .collect();
    let total = probabilities.iter().fold(Scalar::zero(), |a, (_, p)| a + p.clone());
    let gamma = LinComb::from_terms(probabilities.iter().cloned());
    let m: RingMatrix<Scalar> = left_multiplication_matrix(&gamma, n);
    let charpoly = m.charpoly()?;
    let mut fact = 1u64;
    for k in 2..=n as u64 {
        fact *= k;
    }
    let predicted = Partition::all(n).iter().fold(QPoly::one(), |acc, lambda| {
        let root = power_sum(lambda, x);
        let factor = QPoly::new(vec![-root, int(1)]);
        (0..fact / lambda.z()).fold(acc, |a, _| a * factor.clone())
    });
    let (inv_side, maj_side) = inv_maj_sides(n);
    let inv_maj_symbolic = inv_side == maj_side;
    let eval_side = |side: &QSymElem<QPoly>| -> QPoly {
        side.terms().iter().fold(QPoly::zero(), |acc, (i, c)| acc + c.scale(&QSymElem::<Scalar>::f(i).eval(x)))
    };
    let inv_maj_numeric = eval_side(&inv_side) == eval_side(&maj_side);
    Ok(QsReport { n, probabilities, total, charpoly, predicted, inv_maj_symbolic, inv_maj_numeric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::frac;

    #[test]
    fn point_mass_and_eigenvalues() {
        let r = qs_distribution(&[int(1), int(0), int(0)], 3).unwrap();
        for (s, p) in &r.probabilities {
            assert_eq!(p.is_one(), *s == Permutation::identity(3));
        }
        let r = qs_distribution(&[frac(1, 2), frac(1, 3), frac(1, 6)], 3).unwrap();
        assert!(r.passed());
        assert!(qs_distribution(&[frac(1, 2)], 2).is_err());
    }
}
