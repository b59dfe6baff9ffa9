//! Partial orders on `[n]`, their linear extensions and free quasi-symmetric
//! generating functions, the `⊔` and `∧` constructions, the tree posets of
//! the Loday–Ronco algebra, and the 0-Hecke modules attached to posets.

use crate::combinatorics::{binary_tree_of, order_leq, permutations, BinTree, Order, Permutation};
use crate::error::{bound, parse_err, Error, Result};
use crate::exactalg::{Scalar, SparseVec};
use crate::fqsym::{FQElem, FqBasis};
use crate::hecke0::{label_module, same_labelled_module, t_product, ModuleRep, Subspace};
use num_traits::One;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Largest size for linear extension enumeration.
pub const MAX_POSET_SIZE: usize = 8;
/// Largest size for poset modules.
pub const MAX_POSET_MODULE_SIZE: usize = 7;
/// Largest tree size for Loday–Ronco computations.
pub const MAX_TREE_SIZE: usize = 7;

/// Partial order on `{1, …, n}` with its transitive closure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `less[i][j]` iff `i+1 <_P j+1`.
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Closes `relations` (pairs `(i, j)` meaning `i <_P j`) transitively.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![vec![false; n]; n];
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Invalid(format!("relation {i}<{j} outside 1..{n}")));
            }
            less[i - 1][j - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::Invalid("relations contain a cycle".into()));
        }
        Ok(Poset { n, less })
    }

    pub fn antichain(n: usize) -> Self {
        Poset { n, less: vec![vec![false; n]; n] }
    }

    pub fn chain(n: usize) -> Self {
        Poset { n, less: (0..n).map(|i| (0..n).map(|j| i < j).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `i <_P j` (1-based).
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[i - 1][j - 1]
    }

    /// All strict relations, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|i| (1..=self.n).map(move |j| (i, j))).filter(|&(i, j)| self.lt(i, j)).collect()
    }

    /// Cover relations `i ⋖ j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(i, j)| !(1..=self.n).any(|k| self.lt(i, k) && self.lt(k, j))).collect()
    }

    /// `P₁ ⊔ P₂`: `P₂` shifted by `|P₁|`.
    pub fn disjoint_sum(&self, other: &Poset) -> Poset {
        let k = self.n;
        let mut rel = self.relations();
        rel.extend(other.relations().into_iter().map(|(i, j)| (i + k, j + k)));
        Poset::new(k + other.n, &rel).expect("union of orders on disjoint sets")
    }

    /// `P₁ ∧ P₂`: maximal element `h = |P₁|+1` above both, `P₂` shifted by `h`.
    pub fn wedge(&self, other: &Poset) -> Poset {
        let h = self.n + 1;
        let n = h + other.n;
        let mut rel = self.relations();
        rel.extend(other.relations().into_iter().map(|(i, j)| (i + h, j + h)));
        rel.extend((1..=n).filter(|&i| i != h).map(|i| (i, h)));
        Poset::new(n, &rel).expect("adjoining a maximum keeps an order")
    }

    /// `σ` is a linear extension when `i <_P j` forces `i` before `j` in `σ`.
    pub fn is_extension(&self, s: &Permutation) -> bool {
        if s.size() != self.n {
            return false;
        }
        let pos = s.inverse();
        self.relations().iter().all(|&(i, j)| pos.image(i) < pos.image(j))
    }

    /// Linear extensions in lexicographic order.
    pub fn linear_extensions(&self) -> Result<Vec<Permutation>> {
        if self.n > MAX_POSET_SIZE {
            return Err(bound("linear extensions", MAX_POSET_SIZE));
        }
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(&mut word, &mut used, &mut out);
        Ok(out)
    }

    fn extend(&self, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if word.len() == self.n {
            out.push(Permutation::new(word.clone()).expect("each element used once"));
            return;
        }
        for j in 0..self.n {
            if !used[j] && (0..self.n).all(|i| !self.less[i][j] || used[i]) {
                used[j] = true;
                word.push(j + 1);
                self.extend(word, used, out);
                word.pop();
                used[j] = false;
            }
        }
    }

    /// No `i < j` with `i <_P j`.
    pub fn is_rise_free(&self) -> bool {
        self.relations().iter().all(|&(i, j)| i > j)
    }

    /// `i <_R j` iff `i > j` and `i <_P j`.
    pub fn rise_free(&self) -> Poset {
        let rel: Vec<(usize, usize)> = self.relations().into_iter().filter(|&(i, j)| i > j).collect();
        Poset::new(self.n, &rel).expect("sub-relation of an order without cycles")
    }

    /// Candidate minimal extension: `i <_E j` iff `i <_P j` or (`i < j` and
    /// not `j <_P i`). Fails when this relation is not a total order.
    pub fn minimal_extension(&self) -> Result<Permutation> {
        let n = self.n;
        let lt = |i: usize, j: usize| self.lt(i, j) || (i < j && !self.lt(j, i));
        // A total order is a tournament without cyclic triangles; rank by wins.
        let mut ranked: Vec<(usize, usize)> = (1..=n).map(|i| ((1..=n).filter(|&j| j != i && lt(j, i)).count(), i)).collect();
        ranked.sort_unstable();
        let total = ranked.iter().enumerate().all(|(k, &(below, _))| below == k) && ranked.windows(2).all(|w| lt(w[0].1, w[1].1));
        if !total {
            return Err(Error::Invalid(format!("the candidate minimal extension of {self} is not a total order")));
        }
        Permutation::new(ranked.into_iter().map(|(_, i)| i).collect())
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        let covers = self.covers();
        if !covers.is_empty() {
            let rel: Vec<String> = covers.iter().map(|(i, j)| format!("{i}<{j}")).collect();
            write!(f, "; {}", rel.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Poset {
    type Err = Error;

    /// `n=4; 1<3, 2<3`; chains such as `1<2<4` are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = match s.find(';') {
            Some(p) => (&s[..p], Some((p + 1, &s[p + 1..]))),
            None => (s, None),
        };
        let h = head.trim();
        let n: usize = h
            .strip_prefix("n=")
            .or_else(|| h.strip_prefix("n ="))
            .ok_or_else(|| parse_err(0, "expected 'n=<size>'"))?
            .trim()
            .parse()
            .map_err(|_| parse_err(2, "size is not a number"))?;
        let mut rel = Vec::new();
        if let Some((off, body)) = tail {
            let mut pos = off;
            for item in body.split(',') {
                let t = item.trim();
                if !t.is_empty() {
                    let nums: Vec<usize> = t
                        .split('<')
                        .map(|x| x.trim().parse::<usize>().map_err(|_| parse_err(pos, format!("bad relation '{t}'"))))
                        .collect::<Result<_>>()?;
                    if nums.len() < 2 {
                        return Err(parse_err(pos, format!("relation '{t}' needs '<'")));
                    }
                    rel.extend(nums.windows(2).map(|w| (w[0], w[1])));
                }
                pos += item.len() + 1;
            }
        }
        Poset::new(n, &rel)
    }
}

/// Every partial order on `[n]` (each unordered pair related either way or
/// not at all, kept when transitive).
pub fn all_posets(n: usize) -> Result<Vec<Poset>> {
    if n > 5 {
        return Err(bound("poset enumeration", 5));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut less = vec![vec![false; n]; n];
        for &(i, j) in &pairs {
            match code % 3 {
                1 => less[i - 1][j - 1] = true,
                2 => less[j - 1][i - 1] = true,
                _ => {}
            }
            code /= 3;
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| !less[a][b] || (0..n).all(|c| !less[b][c] || less[a][c])));
        if transitive {
            out.push(Poset { n, less });
        }
    }
    Ok(out)
}

/// `Γ(P) = Σ_{σ ∈ L(P)} F_σ`.
pub fn gamma_free(p: &Poset) -> Result<FQElem> {
    Ok(FQElem::new(FqBasis::F, p.linear_extensions()?.into_iter().map(|s| (s, Scalar::one())).collect()))
}

/// Poset of a binary tree: a leaf is empty and `T₁ ∧ T₂` maps to `P(T₁) ∧ P(T₂)`.
pub fn tree_poset(t: &BinTree) -> Poset {
    match t.children() {
        None => Poset::antichain(0),
        Some((l, r)) => tree_poset(l).wedge(&tree_poset(r)),
    }
}

fn check_tree(t: &BinTree) -> Result<()> {
    if t.size() > MAX_TREE_SIZE {
        return Err(bound("tree size", MAX_TREE_SIZE));
    }
    Ok(())
}

/// `F(T) = Γ(P(T))`.
pub fn loday_ronco_f(t: &BinTree) -> Result<FQElem> {
    check_tree(t)?;
    gamma_free(&tree_poset(t))
}

/// `Σ_{T(σ) = T} G_σ`, by sorting permutations by their underlying tree.
pub fn loday_ronco_g(t: &BinTree) -> Result<FQElem> {
    check_tree(t)?;
    Ok(FQElem::new(FqBasis::G, permutations(t.size()).filter(|s| binary_tree_of(s) == *t).map(|s| (s, Scalar::one())).collect()))
}

/// Trees of `T ⊔ T′` by the recursion `L(T ⊔ T′) = L(T₁ ∧ (T₂ ⊔ T′)) + L((T ⊔ T′₁) ∧ T′₂)`.
pub fn tree_product(t: &BinTree, u: &BinTree) -> BTreeMap<BinTree, usize> {
    let (Some((t1, t2)), Some((u1, u2))) = (t.children(), u.children()) else {
        let only = if t.size() == 0 { u.clone() } else { t.clone() };
        return BTreeMap::from([(only, 1)]);
    };
    let mut out = BTreeMap::new();
    for (x, c) in tree_product(t2, u) {
        *out.entry(t1.graft(&x)).or_insert(0) += c;
    }
    for (x, c) in tree_product(t, u1) {
        *out.entry(x.graft(u2)).or_insert(0) += c;
    }
    out
}

/// Direct construction of `M_P`: labels `σ⁻¹` for `σ ∈ L(P)`, with the right
/// action `σ Tᵢ` read as a left action through `T_σ ↦ T_{σ⁻¹}`.
pub fn poset_module(p: &Poset) -> Result<ModuleRep> {
    if p.size() == 0 || p.size() > MAX_POSET_MODULE_SIZE {
        return Err(bound("poset module", MAX_POSET_MODULE_SIZE));
    }
    let labels = p.linear_extensions()?.into_iter().map(|s| s.inverse()).collect();
    label_module(p.size(), labels, false, format!("M[{p}]"))
}

/// Second construction of `M_P`: the right ideal `T_{E(P)} H_n(0)` of the
/// regular representation, which is `M_{RiseFree(P)}`, modulo the span of
/// the permutations that are not extensions of `P`.
#[derive(Clone, Debug)]
pub struct RiseFreeReport {
    pub extension: Permutation,
    /// `E(RiseFree(P)) = E(P)`.
    pub same_minimal_extension: bool,
    /// The basis of the right ideal is `L(RiseFree(P))`.
    pub ideal_is_rise_free_extensions: bool,
    /// Non-extensions of `P` span a submodule.
    pub non_extensions_submodule: bool,
    /// The quotient coincides with the direct construction.
    pub matches_direct: bool,
}

impl RiseFreeReport {
    pub fn passed(&self) -> bool {
        self.same_minimal_extension && self.ideal_is_rise_free_extensions && self.non_extensions_submodule && self.matches_direct
    }
}

pub fn poset_module_rise_free(p: &Poset) -> Result<RiseFreeReport> {
    let n = p.size();
    if n == 0 || n > MAX_POSET_MODULE_SIZE {
        return Err(bound("poset module", MAX_POSET_MODULE_SIZE));
    }
    let e = p.minimal_extension()?;
    let r = p.rise_free();
    let same_minimal_extension = r.minimal_extension().map(|x| x == e).unwrap_or(false);

    // Orbit of T_E under right multiplication by the generators.
    let simples: Vec<Permutation> = (1..n).map(|i| Permutation::simple(n, i)).collect();
    let mut basis = vec![e.clone()];
    let mut seen: HashSet<Permutation> = HashSet::from([e.clone()]);
    let mut queue = VecDeque::from([e.clone()]);
    while let Some(s) = queue.pop_front() {
        for si in &simples {
            let (t, _) = t_product(&s, si);
            if seen.insert(t.clone()) {
                basis.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    basis.sort();
    let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut gens = Vec::with_capacity(n - 1);
    for si in &simples {
        let cols: Vec<SparseVec> = basis
            .iter()
            .map(|s| {
                let (t, neg) = t_product(s, si);
                let c = if neg { -Scalar::one() } else { Scalar::one() };
                SparseVec::from([(index[&t], c)])
            })
            .collect();
        gens.push(cols);
    }
    let ideal = ModuleRep::new(n, basis.len(), gens, format!("T_E H[{p}]"))?.with_labels(basis.iter().map(|s| s.inverse()).collect())?;

    let rf_ext = r.linear_extensions()?;
    let mut sorted_ext = rf_ext.clone();
    sorted_ext.sort();
    let ideal_is_rise_free_extensions = sorted_ext == basis;

    let mut non_ext = Subspace::new(basis.len());
    for (k, s) in basis.iter().enumerate() {
        if !p.is_extension(s) {
            non_ext.insert(&SparseVec::from([(k, Scalar::one())]));
        }
    }
    let non_extensions_submodule = ideal.is_submodule(&non_ext);
    let matches_direct = non_extensions_submodule && same_labelled_module(&poset_module(p)?, &ideal.quotient(&non_ext)?);
    Ok(RiseFreeReport { extension: e, same_minimal_extension, ideal_is_rise_free_extensions, non_extensions_submodule, matches_direct })
}

/// Checks the rise-free proposition: `L(P) = {σ ≥_R E(P)}`.
pub fn rise_free_interval_holds(p: &Poset) -> Result<bool> {
    let e = p.minimal_extension()?;
    let above: Vec<Permutation> = permutations(p.size()).filter(|s| order_leq(&e, s, Order::RightWeak).unwrap_or(false)).collect();
    Ok(above == p.linear_extensions()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;
    use crate::hecke0::induction_product;

    #[test]
    fn parse_and_format() {
        let p: Poset = "n=4; 1<3, 2<3".parse().unwrap();
        assert_eq!(p.to_string(), "n=4; 1<3, 2<3");
        let q: Poset = "n=3; 1<2<3".parse().unwrap();
        assert_eq!(q.covers(), vec![(1, 2), (2, 3)]);
        assert!(q.lt(1, 3));
        assert!("n=2; 1<2, 2<1".parse::<Poset>().is_err());
        assert!("m=2".parse::<Poset>().is_err());
    }

    #[test]
    fn extension_counts() {
        assert_eq!(Poset::antichain(4).linear_extensions().unwrap().len(), 24);
        assert_eq!(Poset::chain(5).linear_extensions().unwrap(), vec![Permutation::identity(5)]);
        let p = Poset::new(3, &[(1, 3)]).unwrap();
        let brute = permutations(3).filter(|s| p.is_extension(s)).count();
        assert_eq!(p.linear_extensions().unwrap().len(), brute);
        assert_eq!(brute, 3);
    }

    #[test]
    fn wedge_of_points() {
        let dot = Poset::antichain(1);
        let w = dot.wedge(&dot);
        assert_eq!(w.linear_extensions().unwrap(), vec![perm("132"), perm("312")]);
    }

    #[test]
    fn pathological_minimal_extension() {
        let p = Poset::new(3, &[(3, 1)]).unwrap();
        assert!(p.minimal_extension().is_err());
    }

    #[test]
    fn tree_routes_agree() {
        for n in 0..=4 {
            for t in BinTree::all(n) {
                let a = loday_ronco_f(&t).unwrap();
                let b = loday_ronco_g(&t).unwrap();
                assert!(a.sub(&b).unwrap().to_f().unwrap().is_zero(), "{t}");
            }
        }
    }

    #[test]
    fn poset_module_disjoint_sum() {
        let p = Poset::new(2, &[(2, 1)]).unwrap();
        let q = Poset::antichain(2);
        let lhs = poset_module(&p.disjoint_sum(&q)).unwrap();
        let rhs = induction_product(&poset_module(&p).unwrap(), &poset_module(&q).unwrap()).unwrap();
        assert!(same_labelled_module(&lhs, &rhs));
    }
}
