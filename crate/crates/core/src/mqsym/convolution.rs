use super::{augmented_shuffle, PackedMat};
use crate::combinatorics::Composition;
use crate::error::{bound, parse_err, Error, Result};
use crate::exactalg::{LinComb, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Largest number of polynomial variables accepted by the `f_A` operators.
pub const MAX_VARIABLES: usize = 10;

/// Monomial `x₁^{e₁}x₂^{e₂}⋯` stored sparsely (variable index → exponent).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<usize, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        Monomial(BTreeMap::from([(i, 1)]))
    }

    pub fn degree(&self) -> usize {
        self.0.values().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn max_variable(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (&v, &e) in &other.0 {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|(v, e)| if *e == 1 { format!("x{v}") } else { format!("x{v}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dot product `m₁ ⋅ m₂ ⋯` of nonconstant monomials.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiWord(Vec<Monomial>);

impl MultiWord {
    /// Drops constant factors to reach normal form.
    pub fn new(factors: Vec<Monomial>) -> Self {
        MultiWord(factors.into_iter().filter(|m| !m.is_one()).collect())
    }

    pub fn factors(&self) -> &[Monomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Monomial::degree).sum()
    }

    /// Degrees of the factors.
    pub fn profile(&self) -> Vec<usize> {
        self.0.iter().map(Monomial::degree).collect()
    }

    pub fn max_variable(&self) -> usize {
        self.0.iter().map(Monomial::max_variable).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Self) -> Self {
        MultiWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// `m_(r) = X_{D₁} ⋅ X_{D₂} ⋯` with consecutive blocks of variables.
    pub fn generic(r: &Composition) -> Self {
        let mut next = 1;
        MultiWord(
            r.parts()
                .iter()
                .map(|&k| {
                    let m = Monomial((next..next + k).map(|v| (v, 1)).collect());
                    next += k;
                    m
                })
                .collect(),
        )
    }
}

impl fmt::Display for MultiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" . "))
    }
}

impl fmt::Debug for MultiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `x1*x2^3 . x4` as well as letter variables `abc . a^4b`
/// (`a` is `x1`, `b` is `x2`, …).
impl FromStr for MultiWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for piece in s.split(['.', '⋅', '·']) {
            factors.push(parse_monomial(piece, offset)?);
            offset += piece.len() + 1;
        }
        if factors.iter().any(Monomial::is_one) {
            return Err(parse_err(0, "constant factor in a multiword"));
        }
        Ok(MultiWord(factors))
    }
}

fn parse_monomial(s: &str, offset: usize) -> Result<Monomial> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut m = Monomial::one();
    let mut i = 0;
    let digits = |i: &mut usize| -> Option<usize> {
        let start = *i;
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| chars[start..*i].iter().map(|c| c.1).collect::<String>().parse().ok()).flatten()
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let var = match c {
            ' ' | '*' => continue,
            'x' => digits(&mut i).filter(|&v| v > 0).ok_or_else(|| parse_err(offset + pos, "expected a variable index after x"))?,
            'a'..='w' => c as usize - 'a' as usize + 1,
            _ => return Err(parse_err(offset + pos, format!("unexpected character {c:?}"))),
        };
        let mut exp = 1;
        if i < chars.len() && chars[i].1 == '^' {
            i += 1;
            exp = digits(&mut i).ok_or_else(|| parse_err(offset + pos, "expected an exponent"))?;
        }
        m = m.mul(&Monomial(BTreeMap::from([(var, exp as u32)])));
    }
    Ok(m)
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `δ^{(K)}(m)`: the part of the iterated coproduct of `m` with degrees `K`.
/// Variables are primitive, so `x^e` splits as `Σ C(e; a₁,…,a_q) x^{a₁}⊗⋯`.
pub fn split_monomial(m: &Monomial, k: &[u32]) -> Vec<(Vec<Monomial>, BigInt)> {
    fn rec(vars: &[(usize, u32)], left: &mut Vec<u32>, acc: &mut Vec<Monomial>, coeff: BigInt, out: &mut Vec<(Vec<Monomial>, BigInt)>) {
        let Some((&(v, e), rest)) = vars.split_first() else {
            if left.iter().all(|&x| x == 0) {
                out.push((acc.clone(), coeff));
            }
            return;
        };
        distribute(v, e, 0, rest, left, acc, coeff, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn distribute(
        v: usize,
        e: u32,
        j: usize,
        rest: &[(usize, u32)],
        left: &mut Vec<u32>,
        acc: &mut Vec<Monomial>,
        coeff: BigInt,
        out: &mut Vec<(Vec<Monomial>, BigInt)>,
    ) {
        if j + 1 == left.len() {
            if e > left[j] {
                return;
            }
            left[j] -= e;
            let saved = acc[j].clone();
            if e > 0 {
                acc[j] = acc[j].mul(&Monomial(BTreeMap::from([(v, e)])));
            }
            rec(rest, left, acc, coeff, out);
            acc[j] = saved;
            left[j] += e;
            return;
        }
        for a in 0..=e.min(left[j]) {
            left[j] -= a;
            let saved = acc[j].clone();
            if a > 0 {
                acc[j] = acc[j].mul(&Monomial(BTreeMap::from([(v, a)])));
            }
            distribute(v, e - a, j + 1, rest, left, acc, coeff.clone() * binomial(e, a), out);
            acc[j] = saved;
            left[j] += a;
        }
    }
    let mut out = Vec::new();
    if k.is_empty() {
        if m.is_one() {
            out.push((Vec::new(), BigInt::one()));
        }
        return out;
    }
    let vars: Vec<(usize, u32)> = m.exponents().collect();
    rec(&vars, &mut k.to_vec(), &mut vec![Monomial::one(); k.len()], BigInt::one(), &mut out);
    out
}

fn check_budget(m: &MultiWord, n_vars: usize) -> Result<()> {
    if n_vars > MAX_VARIABLES {
        return Err(bound("polynomial variables", MAX_VARIABLES));
    }
    if m.max_variable() > n_vars {
        return Err(bound("polynomial variables", n_vars));
    }
    Ok(())
}

/// `f_A(m₁⋅⋯⋅m_p) = μ_q^p(δ^{L₁}(m₁), …, δ^{L_p}(m_p))`, zero unless the
/// factor degrees are the row sums of `A`.
pub fn convolution_fa(a: &PackedMat, m: &MultiWord, n_vars: usize) -> Result<LinComb<MultiWord, Scalar>> {
    check_budget(m, n_vars)?;
    Ok(apply_fa(a.rows(), m))
}

/// Same rule for an arbitrary (possibly unpacked) integer matrix.
fn apply_fa(rows: &[Vec<u32>], m: &MultiWord) -> LinComb<MultiWord, Scalar> {
    let mut out = LinComb::zero();
    if rows.len() != m.len() {
        return out;
    }
    let q = rows.first().map_or(0, |r| r.len());
    let mut partial: Vec<(Vec<Monomial>, BigInt)> = vec![(vec![Monomial::one(); q], BigInt::one())];
    for (row, factor) in rows.iter().zip(m.factors()) {
        let pieces = split_monomial(factor, row);
        if pieces.is_empty() {
            return out;
        }
        partial = partial
            .iter()
            .flat_map(|(cols, c)| pieces.iter().map(move |(p, d)| (cols.iter().zip(p).map(|(x, y)| x.mul(y)).collect::<Vec<_>>(), c * d)))
            .collect();
    }
    for (cols, c) in partial {
        out.add_term(MultiWord::new(cols), Scalar::from_integer(c));
    }
    out
}

/// Coproduct of the tensor algebra on polynomials:
/// `c(m₁⋅⋯⋅m_p) = Σ μ(m′₁,…,m′_p) ⊗ μ(m″₁,…,m″_p)`.
pub fn tensor_coproduct(m: &MultiWord) -> LinComb<(MultiWord, MultiWord), Scalar> {
    let mut partial: Vec<(Vec<Monomial>, Vec<Monomial>, BigInt)> = vec![(Vec::new(), Vec::new(), BigInt::one())];
    for factor in m.factors() {
        let d = factor.degree() as u32;
        let mut next = Vec::new();
        for k in 0..=d {
            for (p, c) in split_monomial(factor, &[k, d - k]) {
                for (l, r, c0) in &partial {
                    let mut l = l.clone();
                    let mut r = r.clone();
                    l.push(p[0].clone());
                    r.push(p[1].clone());
                    next.push((l, r, c0 * &c));
                }
            }
        }
        partial = next;
    }
    partial.into_iter().map(|(l, r, c)| ((MultiWord::new(l), MultiWord::new(r)), Scalar::from_integer(c))).collect()
}

/// `(f_A ⋆ f_B)(m) = μ ∘ (f_A ⊗ f_B) ∘ c(m)`.
pub fn convolution_star(a: &PackedMat, b: &PackedMat, m: &MultiWord, n_vars: usize) -> Result<LinComb<MultiWord, Scalar>> {
    check_budget(m, n_vars)?;
    let mut out = LinComb::zero();
    for ((l, r), c) in tensor_coproduct(m).iter() {
        let fl = apply_fa(a.rows(), l);
        if fl.is_zero() {
            continue;
        }
        let fr = apply_fa(b.rows(), r);
        for (x, cx) in fl.iter() {
            for (y, cy) in fr.iter() {
                out.add_term(x.concat(y), c.clone() * cx * cy);
            }
        }
    }
    Ok(out)
}

/// `Σ_R f_R(m)` over the terms `R` of `MS_A · MS_B`.
pub fn convolution_of_product(a: &PackedMat, b: &PackedMat, m: &MultiWord, n_vars: usize) -> Result<LinComb<MultiWord, Scalar>> {
    check_budget(m, n_vars)?;
    let mut out = LinComb::zero();
    for r in augmented_shuffle(a, b) {
        out.add_scaled(&apply_fa(r.rows(), m), &Scalar::one());
    }
    Ok(out)
}

/// Pairs `(A, B)` and multiwords where `f_A ⋆ f_B ≠ Σ f_R`.
#[derive(Clone, Debug, Default)]
pub struct ConvolutionReport {
    pub max_degree: usize,
    pub pairs: usize,
    pub evaluations: usize,
    pub failures: Vec<(PackedMat, PackedMat, MultiWord)>,
}

impl ConvolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.pairs > 0
    }
}

/// Largest total degree for the exhaustive homomorphism check.
pub const MAX_CONVOLUTION_DEGREE: usize = 4;

/// Compares both sides on every generic multiword `m_(r)`, `|r| = deg A + deg B`,
/// for all nonempty `A`, `B` with `deg A + deg B ≤ max_degree`.
pub fn convolution_homomorphism_check(max_degree: usize) -> Result<ConvolutionReport> {
    if max_degree > MAX_CONVOLUTION_DEGREE {
        return Err(bound("convolution check degree", MAX_CONVOLUTION_DEGREE));
    }
    let mut report = ConvolutionReport { max_degree, ..Default::default() };
    for d in 2..=max_degree {
        let words: Vec<MultiWord> = Composition::all(d).iter().map(MultiWord::generic).collect();
        for da in 1..d {
            for a in PackedMat::all(da) {
                for b in PackedMat::all(d - da) {
                    report.pairs += 1;
                    for m in &words {
                        report.evaluations += 1;
                        if convolution_star(&a, &b, m, d)? != convolution_of_product(&a, &b, m, d)? {
                            report.failures.push((a.clone(), b.clone(), m.clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// A multiword of `f_A(m_(Row A))` that no other `f_{A′}` of the same degree
/// produces from `m_(Row A)`.
pub fn injectivity_witness(a: &PackedMat) -> Option<MultiWord> {
    let m = MultiWord::generic(&a.row_composition());
    let mine = apply_fa(a.rows(), &m);
    let others: Vec<LinComb<MultiWord, Scalar>> =
        PackedMat::all(a.degree()).into_iter().filter(|b| b != a).map(|b| apply_fa(b.rows(), &m)).collect();
    let found = mine.labels().find(|w| others.iter().all(|o| o.coeff(w).is_zero())).cloned();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mqsym::packed;

    fn lc(terms: &[(&str, i64)]) -> LinComb<MultiWord, Scalar> {
        terms.iter().map(|(s, c)| (s.parse().unwrap(), Scalar::from_integer(BigInt::from(*c)))).collect()
    }

    #[test]
    fn letter_example() {
        let a = packed(&[&[2, 0, 1], &[0, 2, 3]]);
        let m: MultiWord = "abc . a^4b".parse().unwrap();
        let got = convolution_fa(&a, &m, 3).unwrap();
        let want = lc(&[
            ("ab . a^2 . a^2bc", 6),
            ("ac . a^2 . a^2b^2", 6),
            ("bc . a^2 . a^3b", 6),
            ("ab . ab . a^3c", 4),
            ("ac . ab . a^3b", 4),
            ("bc . ab . a^4", 4),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn generic_example() {
        let a = packed(&[&[0, 1, 1], &[1, 0, 2]]);
        let m = MultiWord::generic(&a.row_composition());
        assert_eq!(m.to_string(), "x1*x2 . x3*x4*x5");
        let want = lc(&[
            ("x3 . x1 . x2*x4*x5", 1),
            ("x4 . x1 . x2*x3*x5", 1),
            ("x5 . x1 . x2*x3*x4", 1),
            ("x3 . x2 . x1*x4*x5", 1),
            ("x4 . x2 . x1*x3*x5", 1),
            ("x5 . x2 . x1*x3*x4", 1),
        ]);
        assert_eq!(convolution_fa(&a, &m, 5).unwrap(), want);
        assert!(convolution_fa(&a, &"x1 . x2".parse().unwrap(), 5).unwrap().is_zero());
        assert!(convolution_fa(&a, &m, 4).is_err());
    }

    #[test]
    fn two_variable_case() {
        let one = packed(&[&[1]]);
        for s in ["x1 . x2", "x1*x2", "x1^2"] {
            let m: MultiWord = s.parse().unwrap();
            assert_eq!(convolution_star(&one, &one, &m, 2).unwrap(), convolution_of_product(&one, &one, &m, 2).unwrap(), "{s}");
        }
    }

    #[test]
    fn homomorphism_degree_three() {
        let r = convolution_homomorphism_check(3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn witnesses() {
        for d in 1..=3 {
            for a in PackedMat::all(d) {
                assert!(injectivity_witness(&a).is_some(), "{a}");
            }
        }
    }
}
