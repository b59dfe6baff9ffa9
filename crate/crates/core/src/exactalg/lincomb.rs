use super::Ring;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// Finite linear combination of basis labels with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct LinComb<B: Ord, R> {
    terms: BTreeMap<B, R>,
}

impl<B: Ord + Clone, R: Ring> Default for LinComb<B, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone, R: Ring> LinComb<B, R> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, R::one())
    }

    pub fn term(b: B, c: R) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, R)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in it {
            out.add_term(b, c);
        }
        out
    }

    /// Adds `c·b` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v.clone() * c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> R {
        self.terms.get(b).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &R)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, v)| (b.clone(), v.clone() * c.clone())))
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<B2: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<B2, R>) -> LinComb<B2, R> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Relabels terms, merging collisions.
    pub fn map_basis<B2: Ord + Clone>(&self, f: impl Fn(&B) -> B2) -> LinComb<B2, R> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LinComb<B, S> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), f(c))))
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> Self {
        LinComb { terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c.clone())).collect() }
    }

    /// Bilinear extension of a product given on basis pairs.
    pub fn bilinear<B2: Ord + Clone, B3: Ord + Clone>(
        &self,
        other: &LinComb<B2, R>,
        f: impl Fn(&B, &B2) -> LinComb<B3, R>,
    ) -> LinComb<B3, R> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    /// Bilinear extension of a scalar pairing on basis pairs.
    pub fn pairing<B2: Ord + Clone>(&self, other: &LinComb<B2, R>, dual: impl Fn(&B, &B2) -> R) -> R {
        let mut acc = R::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let d = dual(a, b);
                if !d.is_zero() {
                    acc = acc + ca.clone() * cb.clone() * d;
                }
            }
        }
        acc
    }
}

impl<B: Ord + Clone, R: Ring> Add for LinComb<B, R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (b, c) in o.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone, R: Ring> Neg for LinComb<B, R> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb { terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect() }
    }
}

impl<B: Ord + Clone, R: Ring> Sub for LinComb<B, R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<B: Ord + Clone, R: Ring> FromIterator<(B, R)> for LinComb<B, R> {
    fn from_iter<I: IntoIterator<Item = (B, R)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Scalar};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x: LinComb<u32, Scalar> = LinComb::basis(1);
        x.add_term(1, int(-1));
        assert!(x.is_zero());
        let y = LinComb::from_terms([(1u32, int(2)), (2, int(0))]);
        assert_eq!(y.len(), 1);
        assert_eq!(y.clone() + LinComb::zero(), y);
    }
}
