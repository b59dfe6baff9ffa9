use crate::combinatorics::{insertion_tableau, inverse_rsk, plactic_class, shuffle_with_exponents, Permutation, Tableau, Word};
use crate::error::{Error, Result};
use crate::exactalg::{render_combination, LinComb, Scalar};
use crate::fqsym::{FQElem, FqBasis};
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// `S_t = Σ_{P(σ)=t} F_σ`, enumerated through inverse RSK over all recording tableaux.
pub fn free_schur(t: &Tableau) -> Result<FQElem> {
    if !t.is_standard() {
        return Err(Error::Invalid(format!("{t} is not a standard tableau")));
    }
    let mut terms = LinComb::zero();
    for q in Tableau::standard_of_shape(&t.shape()) {
        let w = inverse_rsk(t, &q)?;
        terms.add_term(w.to_permutation()?, Scalar::one());
    }
    Ok(FQElem::new(FqBasis::F, terms))
}

/// `Sh(t′, t″)`: tableaux whose reading words lie in the shuffle of the reading
/// word of `t′` with the plactic class of `t″` shifted by `|t′|`.
pub fn lr_product_shuffle(t1: &Tableau, t2: &Tableau) -> LinComb<Tableau, Scalar> {
    let k = t1.size();
    let u = t1.reading_word();
    let class = plactic_class(&t2.shift(k).reading_word());
    let mut out = LinComb::zero();
    for v in class {
        for (w, _) in shuffle_with_exponents(u.letters(), v.letters()) {
            let word = Word::new(w);
            let p = crate::combinatorics::rsk(&word).map(|(p, _)| p);
            if let Ok(p) = p {
                if p.reading_word() == word {
                    out.add_term(p, Scalar::one());
                }
            }
        }
    }
    out
}

/// Same product computed in FQSym: multiply `S_{t′} S_{t″}` and regroup the
/// terms by insertion tableau. Fails if some class appears incompletely.
pub fn lr_product_fqsym(t1: &Tableau, t2: &Tableau) -> Result<LinComb<Tableau, Scalar>> {
    let prod = free_schur(t1)?.mul(&free_schur(t2)?)?;
    let mut groups: BTreeMap<Tableau, Vec<(Permutation, Scalar)>> = BTreeMap::new();
    for (s, c) in prod.terms().iter() {
        groups.entry(insertion_tableau(s)).or_default().push((s.clone(), c.clone()));
    }
    let mut out = LinComb::zero();
    for (t, members) in groups {
        let expected = Tableau::standard_of_shape(&t.shape()).len();
        let c = members[0].1.clone();
        if members.len() != expected || members.iter().any(|(_, x)| *x != c) {
            return Err(Error::Internal(format!("product is not a combination of free Schur functions at {t}")));
        }
        out.add_term(t, c);
    }
    Ok(out)
}

/// Element of the algebra of free symmetric functions, on the `S_t` basis.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct FSymElem(pub LinComb<Tableau, Scalar>);

impl FSymElem {
    pub fn basis(t: Tableau) -> Self {
        FSymElem(LinComb::basis(t))
    }

    /// Product by the shuffle rule.
    pub fn mul(&self, other: &Self) -> Self {
        FSymElem(self.0.bilinear(&other.0, lr_product_shuffle))
    }

    pub fn to_fqsym(&self) -> Result<FQElem> {
        let mut out = FQElem::zero(FqBasis::F);
        for (t, c) in self.0.iter() {
            out = out.add(&free_schur(t)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        render_combination(&self.0, |t| if t.size() == 0 { None } else { Some(format!("S{t}")) })
    }
}

impl fmt::Display for FSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::tableau;

    #[test]
    fn single_cells() {
        let one = tableau(&[&[1]]);
        assert_eq!(free_schur(&one).unwrap().to_string(), "F[1]");
        let p = lr_product_shuffle(&one, &one);
        assert_eq!(p.len(), 2);
        assert_eq!(lr_product_fqsym(&one, &one).unwrap(), p);
    }

    #[test]
    fn two_one_square_has_eight_terms() {
        let t = tableau(&[&[1, 2], &[3]]);
        let p = lr_product_shuffle(&t, &t);
        assert_eq!(p.len(), 8);
        assert!(p.iter().all(|(_, c)| c.is_one()));
        assert_eq!(lr_product_fqsym(&t, &t).unwrap(), p);
    }
}
