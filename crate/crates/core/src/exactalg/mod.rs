//! Exact coefficient rings and dense linear algebra.
//!
//! Everything is exact: rationals are arbitrary precision, polynomials in `q`
//! carry rational coefficients, and power series always carry their
//! truncation order.

mod lincomb;
mod matrix;
mod poly;
mod series;
mod sparse;

pub use lincomb::LinComb;
pub use matrix::{independent_subset, Echelon, RingMatrix};
pub use poly::{factor_rational, render_factored, Poly, QPoly};
pub use series::{plethystic_product, series_matrix_inverse, QSeries};
pub use sparse::{sparse_rank, SparseEchelon, SparseVec};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number.
pub type Scalar = BigRational;

/// Integer as a [`Scalar`].
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// `a / b` as a [`Scalar`]. Panics on `b == 0`.
pub fn frac(a: i64, b: i64) -> Scalar {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone + PartialEq + Debug + Send + Sync + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    /// Text rendering in the crate's wire format.
    fn render(&self) -> String;
    /// True when the rendering needs no parentheses as a factor.
    fn is_atomic(&self) -> bool;
    /// Power with a nonnegative exponent.
    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Scalar {
    fn from_i64(v: i64) -> Self {
        int(v)
    }
    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
    fn is_atomic(&self) -> bool {
        self.is_integer()
    }
}

/// Field operations used by elimination routines.
pub trait Field: Ring + std::ops::Div<Output = Self> {}
impl Field for Scalar {}

/// Renders `coeff * label` with the crate's sign and unit conventions.
/// Returns the sign separately so callers can join terms with ` + ` / ` - `.
pub(crate) fn render_term<R: Ring>(coeff: &R, label: &str) -> (bool, String) {
    let one = R::one();
    if *coeff == one {
        return (false, label.to_string());
    }
    if *coeff == -one.clone() {
        return (true, label.to_string());
    }
    let text = coeff.render();
    if coeff.is_atomic() {
        if let Some(rest) = text.strip_prefix('-') {
            return (true, format!("{rest}*{label}"));
        }
        return (false, format!("{text}*{label}"));
    }
    let neg = -coeff.clone();
    match text.strip_prefix('-') {
        Some(_) if neg.is_atomic() => (true, format!("{}*{label}", neg.render())),
        Some(rest) if !text.contains(' ') => (true, format!("({rest})*{label}")),
        _ => (false, format!("({text})*{label}")),
    }
}

/// Joins signed terms as `a + b - c`; empty input renders as `0`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, text) in terms {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a linear combination; `label` returns `None` for the unit label,
/// which is printed as a bare coefficient.
pub(crate) fn render_combination<B: Ord + Clone, R: Ring>(lc: &LinComb<B, R>, label: impl Fn(&B) -> Option<String>) -> String {
    join_terms(lc.iter().map(|(b, c)| match label(b) {
        Some(l) => render_term(c, &l),
        None => {
            let text = c.render();
            match text.strip_prefix('-') {
                Some(rest) if c.is_atomic() => (true, rest.to_string()),
                _ if c.is_atomic() => (false, text),
                _ => (false, format!("({text})")),
            }
        }
    }))
}
