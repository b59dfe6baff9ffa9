use crate::combinatorics::{alpha, descent_class, permutations, Composition, Permutation};
use crate::error::{bound, Error, Result};
use crate::exactalg::{int, render_combination, LinComb, Scalar};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest rank for which full algebra tables are built (dimension 720).
pub const MAX_HECKE_DEGREE: usize = 6;

/// Reduced word `[i₁, …, i_k]` with `σ = s_{i₁}⋯s_{i_k}` (right multiplication
/// by `s_i` swaps positions `i, i+1`).
pub fn reduced_word(s: &Permutation) -> Vec<usize> {
    let mut cur = s.clone();
    let mut rev = Vec::new();
    while let Some(i) = cur.descents().first().copied() {
        cur = cur.right_simple(i);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// `T_σ T_τ = ± T_{σ∗τ}` where `∗` is the Demazure product.
pub fn t_product(s: &Permutation, t: &Permutation) -> (Permutation, bool) {
    let mut cur = s.clone();
    let mut neg = false;
    for i in reduced_word(t) {
        let w = cur.as_slice();
        if w[i - 1] < w[i] {
            cur = cur.right_simple(i);
        } else {
            neg = !neg;
        }
    }
    (cur, neg)
}

/// Bases of `H_n(0)` used for input and output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeckeBasis {
    T,
    /// Products of `ξᵢ = 1 + Tᵢ`.
    Xi,
    /// Products of `ηᵢ = −Tᵢ`.
    Eta,
    /// Norton's basis adapted to the projective decomposition.
    G,
}

impl HeckeBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            HeckeBasis::T => "T",
            HeckeBasis::Xi => "xi",
            HeckeBasis::Eta => "eta",
            HeckeBasis::G => "g",
        }
    }
}

/// Element of `H_n(0)`, stored in the `T` basis.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElem {
    n: usize,
    terms: LinComb<Permutation, Scalar>,
}

impl HeckeElem {
    pub fn from_t(n: usize, terms: LinComb<Permutation, Scalar>) -> Result<Self> {
        if let Some(s) = terms.labels().find(|s| s.size() != n) {
            return Err(Error::SizeMismatch(s.size(), n));
        }
        Ok(HeckeElem { n, terms })
    }

    pub fn zero(n: usize) -> Self {
        HeckeElem { n, terms: LinComb::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::t_basis(&Permutation::identity(n))
    }

    pub fn t_basis(s: &Permutation) -> Self {
        HeckeElem { n: s.size(), terms: LinComb::basis(s.clone()) }
    }

    /// Generator `Tᵢ`.
    pub fn t(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Invalid(format!("T_{i} is not a generator of H_{n}(0)")));
        }
        Ok(Self::t_basis(&Permutation::simple(n, i)))
    }

    pub fn xi(n: usize, i: usize) -> Result<Self> {
        Ok(Self::one(n).add(&Self::t(n, i)?))
    }

    pub fn eta(n: usize, i: usize) -> Result<Self> {
        Ok(Self::t(n, i)?.scale(&int(-1)))
    }

    /// `η_σ = (−1)^{ℓ(σ)} T_σ`.
    pub fn eta_perm(s: &Permutation) -> Self {
        let sign = if s.length().is_multiple_of(2) { int(1) } else { int(-1) };
        Self::t_basis(s).scale(&sign)
    }

    /// `ξ_σ`, the product of the `ξᵢ` along a reduced word.
    pub fn xi_perm(s: &Permutation) -> Self {
        let n = s.size();
        reduced_word(s)
            .into_iter()
            .fold(Self::one(n), |acc, i| acc.mul(&Self::xi(n, i).expect("letters of a reduced word are generators")).expect("same rank"))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Permutation, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, s: &Permutation) -> Scalar {
        self.terms.coeff(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        HeckeElem { n: self.n, terms: self.terms.clone() + other.terms.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        HeckeElem { n: self.n, terms: self.terms.clone() - other.terms.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HeckeElem { n: self.n, terms: self.terms.scale(c) }
    }

    /// Product in `H_n(0)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut acc: HashMap<Permutation, Scalar> = HashMap::new();
        for (t, d) in other.terms.iter() {
            let word = reduced_word(t);
            for (s, c) in self.terms.iter() {
                let mut cur = s.clone();
                let mut neg = false;
                for &i in &word {
                    let w = cur.as_slice();
                    if w[i - 1] < w[i] {
                        cur = cur.right_simple(i);
                    } else {
                        neg = !neg;
                    }
                }
                let v = c.clone() * d;
                let e = acc.entry(cur).or_insert_with(Scalar::zero);
                if neg {
                    *e -= v;
                } else {
                    *e += v;
                }
            }
        }
        Ok(HeckeElem { n: self.n, terms: acc.into_iter().collect() })
    }

    /// Coordinates in the requested basis.
    pub fn expand(&self, basis: HeckeBasis) -> Result<LinComb<Permutation, Scalar>> {
        Ok(match basis {
            HeckeBasis::T => self.terms.clone(),
            HeckeBasis::Eta => self.terms.map_linear(|s| {
                let c = if s.length() % 2 == 0 { int(1) } else { int(-1) };
                LinComb::term(s.clone(), c)
            }),
            HeckeBasis::Xi => {
                // ξ_σ = T_σ + (Bruhat-smaller terms): peel off longest terms first.
                let mut rest = self.clone();
                let mut out = LinComb::zero();
                while let Some((s, c)) =
                    rest.terms.iter().max_by_key(|(s, _)| (s.length(), (*s).clone())).map(|(s, c)| (s.clone(), c.clone()))
                {
                    rest = rest.sub(&Self::xi_perm(&s).scale(&c));
                    out.add_term(s, c);
                }
                out
            }
            HeckeBasis::G => hecke_algebra(self.n)?.expand_g(self)?,
        })
    }

    /// Builds an element from coordinates in `basis`.
    pub fn from_basis(n: usize, basis: HeckeBasis, coords: &LinComb<Permutation, Scalar>) -> Result<Self> {
        let mut out = Self::zero(n);
        let alg = if basis == HeckeBasis::G { Some(hecke_algebra(n)?) } else { None };
        for (s, c) in coords.iter() {
            if s.size() != n {
                return Err(Error::SizeMismatch(s.size(), n));
            }
            let b = match basis {
                HeckeBasis::T => Self::t_basis(s),
                HeckeBasis::Eta => Self::eta_perm(s),
                HeckeBasis::Xi => Self::xi_perm(s),
                HeckeBasis::G => alg.as_ref().expect("built above").g(s).clone(),
            };
            out = out.add(&b.scale(c));
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        render_combination(&self.terms, |s| Some(format!("T[{s}]")))
    }

    pub fn render_in(&self, basis: HeckeBasis) -> Result<String> {
        let sym = basis.symbol();
        Ok(render_combination(&self.expand(basis)?, |s| Some(format!("{sym}[{s}]"))))
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Tables for a fixed rank: Norton's generators, the basis `g_σ` and the
/// expansion of the unit.
#[derive(Debug)]
pub struct HeckeAlgebra {
    n: usize,
    /// All permutations, sorted by length then lexicographically.
    by_length: Vec<Permutation>,
    g: HashMap<Permutation, HeckeElem>,
    eps: BTreeMap<Composition, HeckeElem>,
    unit: LinComb<Permutation, Scalar>,
}

/// `ε_I = η_{α(I)} ξ_{α(Ī~)}`.
pub fn norton_epsilon(i: &Composition) -> HeckeElem {
    let mirror_conj = i.mirror().conjugate();
    HeckeElem::eta_perm(&alpha(i)).mul(&HeckeElem::xi_perm(&alpha(&mirror_conj))).expect("same rank")
}

impl HeckeAlgebra {
    fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_HECKE_DEGREE {
            return Err(bound("0-Hecke algebra tables", MAX_HECKE_DEGREE));
        }
        let mut by_length: Vec<Permutation> = permutations(n).collect();
        by_length.sort_by_key(|s| (s.length(), s.clone()));
        let mut g = HashMap::new();
        let mut eps = BTreeMap::new();
        for i in Composition::all(n) {
            let e = norton_epsilon(&i);
            let a = alpha(&i);
            let a_inv = a.inverse();
            for s in descent_class(&i) {
                let tau = s.compose(&a_inv);
                debug_assert_eq!(tau.length() + a.length(), s.length());
                g.insert(s, HeckeElem::eta_perm(&tau).mul(&e)?);
            }
            eps.insert(i, e);
        }
        let mut alg = HeckeAlgebra { n, by_length, g, eps, unit: LinComb::zero() };
        alg.unit = alg.expand_g(&HeckeElem::one(n))?;
        Ok(alg)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn g(&self, s: &Permutation) -> &HeckeElem {
        &self.g[s]
    }

    pub fn epsilon(&self, i: &Composition) -> &HeckeElem {
        &self.eps[i]
    }

    /// Coefficients `a_σ` with `1 = Σ a_σ g_σ`.
    pub fn unit_expansion(&self) -> &LinComb<Permutation, Scalar> {
        &self.unit
    }

    /// `e_I = Σ_{σ ∈ D_I} a_σ g_σ`.
    pub fn idempotent(&self, i: &Composition) -> HeckeElem {
        let coords = self.unit.filter(|s| s.descent_composition() == *i);
        coords.iter().fold(HeckeElem::zero(self.n), |acc, (s, c)| acc.add(&self.g[s].scale(c)))
    }

    /// Expansion in `g`: each `g_σ` has leading term `±T_σ` and otherwise only
    /// longer terms, so a sweep by increasing length solves the system.
    pub fn expand_g(&self, x: &HeckeElem) -> Result<LinComb<Permutation, Scalar>> {
        if x.n != self.n {
            return Err(Error::SizeMismatch(x.n, self.n));
        }
        let mut rest: HashMap<Permutation, Scalar> = x.terms.iter().map(|(s, c)| (s.clone(), c.clone())).collect();
        let mut out = LinComb::zero();
        for s in &self.by_length {
            let Some(c) = rest.get(s).cloned() else { continue };
            if c.is_zero() {
                continue;
            }
            let gs = &self.g[s];
            let lead = gs.coeff(s);
            if lead.is_zero() {
                return Err(Error::Internal(format!("g_{s} has no leading term")));
            }
            let a = c / lead;
            for (t, d) in gs.terms.iter() {
                let e = rest.entry(t.clone()).or_insert_with(Scalar::zero);
                *e -= a.clone() * d;
            }
            out.add_term(s.clone(), a);
        }
        if rest.values().any(|c| !c.is_zero()) {
            return Err(Error::Internal("g-expansion left a remainder".into()));
        }
        Ok(out)
    }
}

/// Shared, lazily built tables for `H_n(0)`.
pub fn hecke_algebra(n: usize) -> Result<Arc<HeckeAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HeckeAlgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = cache.lock().expect("cache lock").get(&n) {
        return Ok(a.clone());
    }
    let built = Arc::new(HeckeAlgebra::build(n)?);
    Ok(cache.lock().expect("cache lock").entry(n).or_insert(built).clone())
}

/// Norton data for one rank together with the checks it is expected to pass.
#[derive(Debug, Clone)]
pub struct NortonReport {
    pub n: usize,
    pub epsilon: BTreeMap<Composition, HeckeElem>,
    pub idempotents: BTreeMap<Composition, HeckeElem>,
    /// `Σ_I e_I = 1`.
    pub sum_is_one: bool,
    /// `e_I e_J = δ_{IJ} e_I`.
    pub orthogonal: bool,
    /// Rank of the `g`-to-`T` change of basis matrix.
    pub g_rank: usize,
}

impl NortonReport {
    pub fn passed(&self) -> bool {
        let fact: usize = (1..=self.n).product();
        self.sum_is_one && self.orthogonal && self.g_rank == fact
    }
}

/// Builds `ε_I`, `e_I` and checks the idempotent decomposition of the unit.
pub fn norton_basis(n: usize) -> Result<NortonReport> {
    let alg = hecke_algebra(n)?;
    let comps = Composition::all(n);
    let idempotents: BTreeMap<Composition, HeckeElem> = comps.iter().map(|i| (i.clone(), alg.idempotent(i))).collect();
    let total = idempotents.values().fold(HeckeElem::zero(n), |acc, e| acc.add(e));
    let sum_is_one = total == HeckeElem::one(n);
    let mut orthogonal = true;
    for (i, a) in &idempotents {
        for (j, b) in &idempotents {
            let p = a.mul(b)?;
            let want = if i == j { a.clone() } else { HeckeElem::zero(n) };
            orthogonal &= p == want;
        }
    }
    let index: HashMap<&Permutation, usize> = alg.by_length.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let g_rank =
        crate::exactalg::sparse_rank(alg.by_length.iter().map(|s| alg.g(s).terms().iter().map(|(t, c)| (index[t], c.clone())).collect()));
    Ok(NortonReport { n, epsilon: alg.eps.clone(), idempotents, sum_is_one, orthogonal, g_rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{comp, perm};

    #[test]
    fn quadratic_relation_and_xi_eta() {
        for i in 1..4 {
            let t = HeckeElem::t(4, i).unwrap();
            assert_eq!(t.mul(&t).unwrap(), t.scale(&int(-1)));
            let p = HeckeElem::xi(4, i).unwrap().mul(&HeckeElem::eta(4, i).unwrap()).unwrap();
            assert!(p.is_zero());
        }
    }

    #[test]
    fn length_additive_products() {
        for s in permutations(4) {
            for t in permutations(4) {
                let st = s.compose(&t);
                if st.length() == s.length() + t.length() {
                    assert_eq!(HeckeElem::t_basis(&s).mul(&HeckeElem::t_basis(&t)).unwrap(), HeckeElem::t_basis(&st));
                }
            }
        }
    }

    #[test]
    fn rank_two_norton() {
        let alg = hecke_algebra(2).unwrap();
        assert_eq!(*alg.epsilon(&comp(&[2])), HeckeElem::xi(2, 1).unwrap());
        assert_eq!(*alg.epsilon(&comp(&[1, 1])), HeckeElem::eta(2, 1).unwrap());
        let r = norton_basis(2).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn idempotents_small_ranks() {
        for n in 1..=4 {
            assert!(norton_basis(n).unwrap().passed(), "n = {n}");
        }
    }

    #[test]
    fn xi_is_sum_over_bruhat_interval() {
        use crate::combinatorics::{order_leq, Order};
        for s in permutations(4) {
            let x = HeckeElem::xi_perm(&s);
            for t in permutations(4) {
                let want = if order_leq(&t, &s, Order::Bruhat).unwrap() { int(1) } else { int(0) };
                assert_eq!(x.coeff(&t), want);
            }
        }
    }

    #[test]
    fn basis_roundtrip() {
        let x = HeckeElem::t_basis(&perm("231")).add(&HeckeElem::xi(3, 1).unwrap());
        for b in [HeckeBasis::T, HeckeBasis::Xi, HeckeBasis::Eta, HeckeBasis::G] {
            let c = x.expand(b).unwrap();
            assert_eq!(HeckeElem::from_basis(3, b, &c).unwrap(), x);
        }
    }
}
