use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{int, render_combination, LinComb, Scalar};
use itertools::Itertools;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Largest degree handled by the brute-force expansions.
pub const MAX_SYM_DEGREE: usize = 8;

/// Bases of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymBasis {
    /// Complete homogeneous `h_λ`.
    H,
    /// Schur `s_λ`.
    S,
    /// Monomial `m_λ`.
    M,
    /// Power sums `p_λ`.
    P,
}

impl SymBasis {
    fn symbol(self) -> &'static str {
        match self {
            SymBasis::H => "h",
            SymBasis::S => "s",
            SymBasis::M => "m",
            SymBasis::P => "p",
        }
    }
}

/// Commutative polynomial in `k` variables, keyed by exponent vectors.
pub type MPoly = BTreeMap<Vec<usize>, Scalar>;

fn poly_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert_with(Scalar::zero);
            *slot += ca.clone() * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_one(k: usize) -> MPoly {
    MPoly::from([(vec![0; k], Scalar::one())])
}

fn h_poly(n: usize, k: usize) -> MPoly {
    // exponent vectors of total degree n
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut MPoly) {
        if cur.len() + 1 == k {
            cur.push(n);
            out.insert(cur.clone(), Scalar::one());
            cur.pop();
            return;
        }
        for e in 0..=n {
            cur.push(e);
            rec(n - e, k, cur, out);
            cur.pop();
        }
    }
    let mut out = MPoly::new();
    if k == 0 {
        if n == 0 {
            out.insert(Vec::new(), Scalar::one());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn p_poly(n: usize, k: usize) -> MPoly {
    (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = n;
            (e, Scalar::one())
        })
        .collect()
}

fn m_poly(lambda: &Partition, k: usize) -> MPoly {
    let mut padded = lambda.parts().to_vec();
    if padded.len() > k {
        return MPoly::new();
    }
    padded.resize(k, 0);
    padded.into_iter().permutations(k).unique().map(|e| (e, Scalar::one())).collect()
}

/// Semistandard tableaux of shape `λ` with entries in `1..=k`, as monomials.
fn s_poly(lambda: &Partition, k: usize) -> MPoly {
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = MPoly::new();
    fn rec(idx: usize, cells: &[(usize, usize)], k: usize, fill: &mut Vec<Vec<usize>>, out: &mut MPoly) {
        if idx == cells.len() {
            let mut e = vec![0; k];
            for x in fill.iter().flatten() {
                e[x - 1] += 1;
            }
            *out.entry(e).or_insert_with(Scalar::zero) += Scalar::one();
            return;
        }
        let (r, c) = cells[idx];
        // rows weakly increase, columns strictly increase (row r above row r−1)
        let lo = if c > 0 { fill[r][c - 1] } else { 1 };
        let lo = if r > 0 { lo.max(fill[r - 1][c] + 1) } else { lo };
        for x in lo.max(1)..=k {
            fill[r][c] = x;
            rec(idx + 1, cells, k, fill, out);
        }
        fill[r][c] = 0;
    }
    rec(0, &cells, k, &mut filling, &mut out);
    out
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`,
/// counted by stripping horizontal strips.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u64 {
    if lambda.weight() != mu.iter().sum::<usize>() {
        return 0;
    }
    fn rec(shape: Vec<usize>, mu: &[usize]) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(shape.iter().all(|&x| x == 0));
        };
        // remove a horizontal strip of size `last`: new row i in [shape[i+1], shape[i]]
        let mut total = 0;
        let n = shape.len();
        fn strips(i: usize, shape: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == shape.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let floor = shape.get(i + 1).copied().unwrap_or(0);
            for keep in (floor..=shape[i]).rev() {
                let removed = shape[i] - keep;
                if removed > left {
                    break;
                }
                cur.push(keep);
                strips(i + 1, shape, left - removed, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        strips(0, &shape, last, &mut Vec::with_capacity(n), &mut all);
        for s in all {
            total += rec(s, rest);
        }
        total
    }
    rec(lambda.parts().to_vec(), mu)
}

/// Symmetric function with rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct SymElem {
    basis: SymBasis,
    terms: LinComb<Partition, Scalar>,
}

impl SymElem {
    pub fn new(basis: SymBasis, terms: LinComb<Partition, Scalar>) -> Self {
        SymElem { basis, terms }
    }

    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        Self::new(basis, LinComb::basis(lambda))
    }

    pub fn zero(basis: SymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Partition, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.labels().map(|l| l.weight()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    /// Expansion as a polynomial in `k` commuting variables.
    pub fn monomial_expand(&self, k: usize) -> Result<MPoly> {
        let d = self.max_degree();
        if d > MAX_SYM_DEGREE {
            return Err(crate::error::bound("symmetric function degree", MAX_SYM_DEGREE));
        }
        if k < d {
            return Err(Error::Invalid(format!("{k} variables cannot separate degree {d}")));
        }
        let mut out = MPoly::new();
        for (lambda, c) in self.terms.iter() {
            let poly = match self.basis {
                SymBasis::M => m_poly(lambda, k),
                SymBasis::S => s_poly(lambda, k),
                SymBasis::H => lambda.parts().iter().fold(poly_one(k), |acc, &n| poly_mul(&acc, &h_poly(n, k))),
                SymBasis::P => lambda.parts().iter().fold(poly_one(k), |acc, &n| poly_mul(&acc, &p_poly(n, k))),
            };
            for (e, x) in poly {
                *out.entry(e).or_insert_with(Scalar::zero) += x * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Reads the monomial basis off a symmetric polynomial in `k ≥ degree` variables.
    fn from_poly(poly: &MPoly) -> Self {
        let terms = LinComb::from_terms(poly.iter().filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1])).map(|(e, c)| {
            let parts: Vec<usize> = e.iter().copied().filter(|&x| x > 0).collect();
            (Partition::new(parts).expect("dominant exponent"), c.clone())
        }));
        SymElem::new(SymBasis::M, terms)
    }

    /// Monomial expansion, computed by brute force in `degree` variables.
    pub fn to_m(&self) -> Result<Self> {
        if self.basis == SymBasis::M {
            return Ok(self.clone());
        }
        let k = self.max_degree();
        Ok(Self::from_poly(&self.monomial_expand(k)?))
    }

    /// Schur expansion: subtracts `c·s_λ` for the lexicographically largest
    /// remaining `m_λ` until nothing is left (the Kostka matrix is unitriangular).
    pub fn to_schur(&self) -> Result<Self> {
        if self.basis == SymBasis::S {
            return Ok(self.clone());
        }
        let mut rest = self.to_m()?.terms;
        let mut out = LinComb::zero();
        while let Some((lambda, c)) = rest.iter().max_by(|a, b| a.0.parts().cmp(b.0.parts())).map(|(l, c)| (l.clone(), c.clone())) {
            let n = lambda.weight();
            let column = LinComb::from_terms(Partition::all(n).into_iter().map(|mu| {
                let k = kostka(&lambda, mu.parts());
                (mu, int(k as i64))
            }));
            rest.add_scaled(&column, &-c.clone());
            out.add_term(lambda, c);
        }
        Ok(SymElem::new(SymBasis::S, out))
    }

    /// Conversion to the `m` or `s` basis; other targets are not supported.
    pub fn to_basis(&self, target: SymBasis) -> Result<Self> {
        match target {
            _ if target == self.basis => Ok(self.clone()),
            SymBasis::M => self.to_m(),
            SymBasis::S => self.to_schur(),
            _ => Err(Error::Type(format!("Sym[{}]", self.basis.symbol()), format!("Sym[{}]", target.symbol()))),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis == other.basis {
            return Ok(Self::new(self.basis, self.terms.clone() + other.terms.clone()));
        }
        Ok(Self::new(SymBasis::M, self.to_m()?.terms + other.to_m()?.terms))
    }

    /// Product, returned in the `m` basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let k = self.max_degree() + other.max_degree();
        let prod = poly_mul(&self.monomial_expand(k)?, &other.monomial_expand(k)?);
        Ok(Self::from_poly(&prod))
    }

    /// Evaluation at finitely many commuting variables (desk scale).
    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        let m = self.to_m()?;
        Ok(m.terms.iter().map(|(l, c)| c.clone() * eval_poly(&m_poly(l, x.len()), x)).fold(Scalar::zero(), |a, b| a + b))
    }

    pub fn render(&self) -> String {
        let sym = self.basis.symbol();
        render_combination(&self.terms, |l| if l.is_empty() { None } else { Some(format!("{sym}{l}")) })
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn eval_poly(p: &MPoly, x: &[Scalar]) -> Scalar {
    p.iter()
        .map(|(e, c)| e.iter().zip(x).fold(c.clone(), |acc, (&k, v)| acc * (0..k).fold(Scalar::one(), |a, _| a * v.clone())))
        .fold(Scalar::zero(), |a, b| a + b)
}

/// Power sum `p_λ(x)`.
pub fn power_sum(lambda: &Partition, x: &[Scalar]) -> Scalar {
    lambda
        .parts()
        .iter()
        .map(|&n| x.iter().map(|v| (0..n).fold(Scalar::one(), |a, _| a * v.clone())).fold(Scalar::zero(), |a, b| a + b))
        .fold(Scalar::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h2_two_variables() {
        let h2 = SymElem::basis_element(SymBasis::H, part("[2]"));
        let poly = h2.monomial_expand(2).unwrap();
        let expect: MPoly = [(vec![2, 0], int(1)), (vec![1, 1], int(1)), (vec![0, 2], int(1))].into_iter().collect();
        assert_eq!(poly, expect);
        assert!(h2.monomial_expand(1).is_err());
    }

    #[test]
    fn kostka_matches_tableau_enumeration() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let s = SymElem::basis_element(SymBasis::S, lambda.clone()).to_m().unwrap();
                for mu in Partition::all(n) {
                    assert_eq!(s.terms.coeff(&mu), int(kostka(&lambda, mu.parts()) as i64), "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn schur_of_h_products() {
        let h = |s: &str| SymElem::basis_element(SymBasis::H, part(s));
        assert_eq!(h("[1,1]").to_schur().unwrap().to_string(), "s[2] + s[1,1]");
        let e = h("[2]").mul(&h("[1]")).unwrap().to_schur().unwrap();
        assert_eq!(e.to_string(), "s[3] + s[2,1]");
    }
}
