use super::{int, join_terms, render_term, Field, Ring, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, coefficients in increasing degree.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomials in `q` over the rationals.
pub type QPoly = Poly<Scalar>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c * var^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with the given variable name, increasing degree.
    pub fn render_with(&self, var: &str) -> String {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            if k == 0 {
                let text = c.render();
                if text.contains(' ') {
                    return (false, format!("({text})"));
                }
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                let label = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                render_term(c, &label)
            }
        });
        join_terms(terms)
    }

    /// Renders with decreasing degree, e.g. `x^2 - 28*x + 84`.
    pub fn render_desc(&self, var: &str) -> String {
        let n = self.coeffs.len();
        let terms = (0..n).rev().filter(|&k| !self.coeffs[k].is_zero()).map(|k| {
            let c = &self.coeffs[k];
            if k == 0 {
                let text = c.render();
                match text.strip_prefix('-') {
                    Some(rest) if c.is_atomic() => (true, rest.to_string()),
                    _ if c.is_atomic() => (false, text),
                    _ => (false, format!("({text})")),
                }
            } else {
                let label = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                render_term(c, &label)
            }
        });
        join_terms(terms)
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * R::from_i64(k as i64)).collect())
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() { (self.coeffs, o.coeffs) } else { (o.coeffs, self.coeffs) };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Self::new(long)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
    fn render(&self) -> String {
        self.render_with("q")
    }
    fn is_atomic(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs[0].is_atomic(),
            _ => self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 && self.leading() == R::one(),
        }
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with("q"))
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with("q"))
    }
}

impl QPoly {
    /// Integer polynomial with the given coefficients (increasing degree).
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| int(c)).collect())
    }
}

/// Square-free decomposition of a monic rational polynomial followed by
/// extraction of rational roots. Returns `(factor, multiplicity)` pairs with
/// linear factors first (by root) and remaining factors after.
pub fn factor_rational(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out: Vec<(QPoly, usize)> = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    // Yun's algorithm.
    let f = p.monic();
    let fp = f.derivative();
    let a = f.gcd(&fp);
    let mut b = f.div_rem(&a).0;
    let mut c = fp.div_rem(&a).0;
    let mut d = c - b.derivative();
    let mut mult = 1;
    loop {
        let g = b.gcd(&d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), mult));
        }
        b = b.div_rem(&g).0;
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.div_rem(&g).0;
        d = c - b.derivative();
        mult += 1;
    }
    let mut linear: Vec<(Scalar, usize)> = Vec::new();
    let mut rest: Vec<(QPoly, usize)> = Vec::new();
    for (g, m) in out {
        let mut g = g;
        for r in rational_roots(&g) {
            linear.push((r.clone(), m));
            let lin = QPoly::new(vec![-r, int(1)]);
            g = g.div_rem(&lin).0;
        }
        if g.degree().unwrap_or(0) > 0 {
            rest.push((g, m));
        }
    }
    linear.sort_by(|x, y| x.0.cmp(&y.0));
    rest.sort_by(|x, y| x.0.degree().cmp(&y.0.degree()).then_with(|| x.1.cmp(&y.1)));
    let mut res: Vec<(QPoly, usize)> = linear.into_iter().map(|(r, m)| (QPoly::new(vec![-r, int(1)]), m)).collect();
    res.extend(rest);
    res
}

/// Distinct rational roots of a square-free polynomial.
fn rational_roots(p: &QPoly) -> Vec<Scalar> {
    // Clear denominators to get an integer polynomial.
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    // Strip zero roots.
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(int(0));
    }
    let ints = &ints[lowest..];
    if ints.len() <= 1 {
        return roots;
    }
    let c0 = ints[0].abs();
    let lead = ints[ints.len() - 1].abs();
    let nums = divisors(&c0);
    let dens = divisors(&lead);
    let q = QPoly::new(ints.iter().map(|c| Scalar::from_integer(c.clone())).collect());
    let mut seen = Vec::new();
    for a in &nums {
        for b in &dens {
            for s in [1i64, -1] {
                let r = Scalar::new(a.clone() * BigInt::from(s), b.clone());
                if !seen.contains(&r) && q.eval(&r).is_zero() {
                    seen.push(r.clone());
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let e = n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Renders a factorization as `(x - 2)^6 (x - 6)^4 (x^2 - 28*x + 84)^2`.
pub fn render_factored(factors: &[(QPoly, usize)], var: &str) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|(f, m)| {
            let body = format!("({})", f.render_desc(var));
            if *m == 1 {
                body
            } else {
                format!("{body}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_increasing() {
        let p = QPoly::from_ints(&[1, 2, 3]);
        assert_eq!(p.to_string(), "1 + 2*q + 3*q^2");
        assert_eq!(QPoly::from_ints(&[0, -1]).to_string(), "-q");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, QPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&QPoly::from_ints(&[1, 1])), QPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn factor_roundtrip() {
        // (x-2)^2 (x+3) (x^2+1)
        let x2 = QPoly::from_ints(&[-2, 1]);
        let x3 = QPoly::from_ints(&[3, 1]);
        let quad = QPoly::from_ints(&[1, 0, 1]);
        let p = x2.clone() * x2.clone() * x3.clone() * quad.clone();
        let f = factor_rational(&p);
        assert_eq!(f, vec![(x3, 1), (x2, 2), (quad, 1)]);
        assert_eq!(render_factored(&f, "x"), "(x + 3) (x - 2)^2 (x^2 + 1)");
    }
}
