use super::{int, QPoly, Ring, RingMatrix, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated power series `Σ a_k q^k mod q^order`.
///
/// `order == usize::MAX` marks an exact constant (as produced by `zero()` and
/// `one()`); binary operations take the smaller order.
#[derive(Clone)]
pub struct QSeries {
    coeffs: Vec<Scalar>,
    order: usize,
}

const EXACT: usize = usize::MAX;

impl QSeries {
    pub fn new(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.truncate(order);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QSeries { coeffs, order }
    }

    pub fn from_poly(p: &QPoly, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficients `a_0..a_{order-1}` (padded with zeros).
    pub fn coeff_vec(&self) -> Vec<Scalar> {
        let n = if self.order == EXACT { self.coeffs.len() } else { self.order };
        (0..n).map(|k| self.coeff(k)).collect()
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order))
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::NotUnit);
        }
        if self.order == EXACT {
            if self.coeffs.len() <= 1 {
                return Ok(Self::new(vec![int(1) / a0], EXACT));
            }
            return Err(Error::Invalid("inverse of an exact non-constant series needs a truncation order".into()));
        }
        let n = self.order;
        let inv0 = int(1) / a0;
        let mut b: Vec<Scalar> = vec![inv0.clone()];
        for k in 1..n {
            let mut s = Scalar::zero();
            for i in 1..=k {
                let a = self.coeff(i);
                if !a.is_zero() {
                    s += a * &b[k - i];
                }
            }
            b.push(-s * &inv0);
        }
        Ok(Self::new(b, n))
    }

    pub fn render_with(&self, var: &str) -> String {
        let body = QPoly::new(self.coeffs.clone()).render_with(var);
        if self.order == EXACT {
            body
        } else {
            format!("{body} + O({var}^{})", self.order)
        }
    }
}

impl PartialEq for QSeries {
    fn eq(&self, o: &Self) -> bool {
        let n = self.order.min(o.order);
        let top = if n == EXACT { self.coeffs.len().max(o.coeffs.len()) } else { n };
        (0..top).all(|k| self.coeff(k) == o.coeff(k))
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with("q"))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with("q"))
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries { coeffs: Vec::new(), order: EXACT }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries { coeffs: vec![int(1)], order: EXACT }
    }
}

impl Add for QSeries {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let order = self.order.min(o.order);
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect(), order)
    }
}

impl Neg for QSeries {
    type Output = Self;
    fn neg(self) -> Self {
        QSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), order: self.order }
    }
}

impl Sub for QSeries {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for QSeries {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let order = self.order.min(o.order);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return QSeries { coeffs: Vec::new(), order };
        }
        let full = self.coeffs.len() + o.coeffs.len() - 1;
        let n = if order == EXACT { full } else { full.min(order) };
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= n || a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::new(out, order)
    }
}

impl Ring for QSeries {
    fn from_i64(v: i64) -> Self {
        Self::new(vec![int(v)], EXACT)
    }
    fn render(&self) -> String {
        self.render_with("q")
    }
    fn is_atomic(&self) -> bool {
        self.coeffs.len() <= 1 && self.order == EXACT
    }
}

/// Inverse of a matrix of polynomials as truncated series, `M·M⁻¹ = I mod q^order`.
pub fn series_matrix_inverse(m: &RingMatrix<QPoly>, order: usize) -> Result<RingMatrix<QSeries>> {
    if m.rows() != m.cols() {
        return Err(Error::SizeMismatch(m.rows(), m.cols()));
    }
    let n = m.rows();
    let maxdeg = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter_map(|(i, j)| m.get(i, j).degree()).max().unwrap_or(0);
    let layer = |k: usize| RingMatrix::from_fn(n, n, |i, j| m.get(i, j).coeff(k));
    let m0inv = layer(0).inverse().map_err(|_| Error::Singular("constant term of series matrix".into()))?;
    let layers: Vec<RingMatrix<Scalar>> = (0..=maxdeg).map(layer).collect();
    // X_k = M0^{-1} (δ_{k0} I − Σ_{i≥1} M_i X_{k−i})
    let mut xs: Vec<RingMatrix<Scalar>> = Vec::with_capacity(order);
    for k in 0..order {
        let mut rhs = if k == 0 { RingMatrix::identity(n) } else { RingMatrix::zeros(n, n) };
        for i in 1..=k.min(maxdeg) {
            rhs = rhs - layers[i].mul(&xs[k - i]);
        }
        xs.push(m0inv.mul(&rhs));
    }
    Ok(RingMatrix::from_fn(n, n, |i, j| QSeries::new(xs.iter().map(|x| x.get(i, j)).collect(), order)))
}

/// `∏_{n≥1} (1 − tⁿ)^{sign·a_n}` truncated at `order`, where `exps[n-1] = a_n`.
pub fn plethystic_product(exps: &[BigInt], negate: bool, order: usize) -> QSeries {
    let mut acc = QSeries::new(vec![int(1)], order);
    for (idx, a) in exps.iter().enumerate() {
        let n = idx + 1;
        if n >= order {
            break;
        }
        let e = if negate { -a.clone() } else { a.clone() };
        // (1 − tⁿ)^e = Σ_k binom(e, k) (−1)^k t^{nk}, generalized binomial.
        let mut coeffs = vec![Scalar::zero(); order];
        let mut binom = Scalar::one();
        let mut k = 0usize;
        while n * k < order {
            let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
            coeffs[n * k] = binom.clone() * sign;
            let kk = BigInt::from(k);
            binom *= Scalar::new(e.clone() - kk.clone(), kk + 1);
            k += 1;
        }
        acc = acc * QSeries::new(coeffs, order);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric() {
        let s = QSeries::new(vec![int(1), int(-1)], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff_vec(), vec![int(1); 6]);
        assert_eq!(s * inv, QSeries::one());
    }

    #[test]
    fn matrix_inverse_identity() {
        let id: RingMatrix<QPoly> = RingMatrix::identity(3);
        let inv = series_matrix_inverse(&id, 5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { QSeries::one() } else { QSeries::zero() };
                assert_eq!(inv.get(i, j), expect);
            }
        }
    }

    #[test]
    fn one_minus_q_inverse() {
        let m = RingMatrix::from_fn(1, 1, |_, _| QPoly::from_ints(&[1, -1]));
        let inv = series_matrix_inverse(&m, 7).unwrap();
        assert_eq!(inv.get(0, 0).coeff_vec(), vec![int(1); 7]);
    }
}
