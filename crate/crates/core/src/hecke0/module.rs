use super::algebra::{reduced_word, HeckeElem};
use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::exactalg::{int, QPoly, RingMatrix, Scalar, SparseVec};
use crate::fqsym::{FQElem, FqBasis};
use crate::symfam::QSymElem;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, VecDeque};

/// Sparse matrix stored by columns: `cols[j]` is the image of the `j`-th basis vector.
pub type SparseMat = Vec<SparseVec>;

fn add_scaled(out: &mut SparseVec, v: &SparseVec, c: &Scalar) {
    for (k, x) in v {
        let e = out.entry(*k).or_insert_with(Scalar::zero);
        *e += c.clone() * x;
        if e.is_zero() {
            out.remove(k);
        }
    }
}

pub(crate) fn mat_vec(m: &SparseMat, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (j, c) in v {
        add_scaled(&mut out, &m[*j], c);
    }
    out
}

pub(crate) fn unit(j: usize) -> SparseVec {
    SparseVec::from([(j, Scalar::one())])
}

/// Effect of `Tᵢ` on a basis vector of a combinatorial module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// `Tᵢ m = 0`.
    Zero,
    /// `Tᵢ m = −m`.
    Same,
    /// `Tᵢ m = ± m_target`.
    To { target: usize, negative: bool },
}

/// `table[i−1][j]` is the action of `Tᵢ` on the `j`-th basis vector.
pub type ActionTable = Vec<Vec<Action>>;

/// Checks whether two combinatorial tables describe isomorphic modules up to
/// rescaling basis vectors by signs. Returns the sign pattern on success.
pub fn tables_equivalent(a: &ActionTable, b: &ActionTable) -> Option<Vec<bool>> {
    if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.len() != y.len()) {
        return None;
    }
    let dim = a.first().map_or(0, |r| r.len());
    let mut flip: Vec<Option<bool>> = vec![None; dim];
    for start in 0..dim {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(j) = queue.pop_front() {
            let fj = flip[j].expect("assigned before queueing");
            for (ra, rb) in a.iter().zip(b) {
                match (ra[j], rb[j]) {
                    (Action::Zero, Action::Zero) | (Action::Same, Action::Same) => {}
                    (Action::To { target: ta, negative: na }, Action::To { target: tb, negative: nb }) if ta == tb => {
                        let want = fj ^ na ^ nb;
                        match flip[ta] {
                            None => {
                                flip[ta] = Some(want);
                                queue.push_back(ta);
                            }
                            Some(f) if f != want => return None,
                            _ => {}
                        }
                    }
                    _ => return None,
                }
            }
        }
    }
    Some(flip.into_iter().map(|f| f.unwrap_or(false)).collect())
}

/// Subspace kept in fully reduced row echelon form: every stored row has a 1
/// at its pivot and 0 at every other pivot.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: BTreeMap::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(|j| (j, unit(j))).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    /// True when the subspace is spanned by standard basis vectors.
    pub fn is_coordinate(&self) -> bool {
        self.rows.values().all(|r| r.len() == 1)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        r.retain(|_, c| !c.is_zero());
        for (p, row) in &self.rows {
            if let Some(c) = r.get(p).cloned() {
                add_scaled(&mut r, row, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, c)) = r.iter().next() else { return false };
        let inv = c.recip();
        for x in r.values_mut() {
            *x *= inv.clone();
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                add_scaled(row, &r, &-c);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Coordinates of `v` on [`Subspace::basis`], if `v` lies in the span.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.keys().map(|p| v.get(p).cloned().unwrap_or_else(Scalar::zero)).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }
}

/// Finite dimensional `H_n(0)`-module given by the matrices of the generators.
///
/// Optional labels attach a permutation to each basis vector; labelled
/// modules have free characteristic `Σ G_label`, and the label `π` carries
/// the simple factor `S_{C(π⁻¹)}`.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    n: usize,
    dim: usize,
    gens: Vec<SparseMat>,
    labels: Option<Vec<Permutation>>,
    name: String,
}

impl ModuleRep {
    /// Builds a module and checks the defining relations exactly.
    pub fn new(n: usize, dim: usize, gens: Vec<SparseMat>, name: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("modules are over H_n(0) with n ≥ 1".into()));
        }
        if gens.len() != n - 1 {
            return Err(Error::SizeMismatch(gens.len(), n - 1));
        }
        for g in &gens {
            if g.len() != dim || g.iter().any(|c| c.keys().any(|&k| k >= dim)) {
                return Err(Error::Invalid("generator matrix has the wrong size".into()));
            }
        }
        let m = ModuleRep { n, dim, gens, labels: None, name: name.into() };
        m.check_relations()?;
        Ok(m)
    }

    pub fn from_table(n: usize, table: &ActionTable, name: impl Into<String>) -> Result<Self> {
        let dim = table.first().map_or(0, |r| r.len());
        let dim = if n == 1 { 0 } else { dim };
        let gens = table
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, a)| match *a {
                        Action::Zero => SparseVec::new(),
                        Action::Same => SparseVec::from([(j, int(-1))]),
                        Action::To { target, negative } => SparseVec::from([(target, if negative { int(-1) } else { int(1) })]),
                    })
                    .collect()
            })
            .collect();
        Self::new(n, dim, gens, name)
    }

    /// One-dimensional simple module `S_I`: `Tᵢ = −1` on the descents of `I`, `0` elsewhere.
    pub fn simple(i: &Composition) -> Result<Self> {
        let n = i.weight();
        let des = i.descent_set();
        let gens = (1..n).map(|k| vec![if des.contains(&k) { SparseVec::from([(0, int(-1))]) } else { SparseVec::new() }]).collect();
        Self::new(n, 1, gens, format!("S{i}"))
    }

    pub fn with_labels(mut self, labels: Vec<Permutation>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::SizeMismatch(labels.len(), self.dim));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> Option<&[Permutation]> {
        self.labels.as_deref()
    }

    pub fn generator(&self, i: usize) -> &SparseMat {
        &self.gens[i - 1]
    }

    /// Dense matrix of `Tᵢ` (column `j` is the image of basis vector `j`).
    pub fn matrix(&self, i: usize) -> RingMatrix<Scalar> {
        let g = &self.gens[i - 1];
        RingMatrix::from_fn(self.dim, self.dim, |r, c| g[c].get(&r).cloned().unwrap_or_else(Scalar::zero))
    }

    pub fn apply(&self, i: usize, v: &SparseVec) -> SparseVec {
        mat_vec(&self.gens[i - 1], v)
    }

    /// `T_{w₁}⋯T_{w_k} v`.
    pub fn apply_word(&self, word: &[usize], v: &SparseVec) -> SparseVec {
        word.iter().rev().fold(v.clone(), |acc, &i| self.apply(i, &acc))
    }

    /// Action of an algebra element.
    pub fn act(&self, x: &HeckeElem, v: &SparseVec) -> Result<SparseVec> {
        if x.rank() != self.n {
            return Err(Error::SizeMismatch(x.rank(), self.n));
        }
        let mut out = SparseVec::new();
        for (s, c) in x.terms().iter() {
            add_scaled(&mut out, &self.apply_word(&reduced_word(s), v), c);
        }
        Ok(out)
    }

    /// `Tᵢ² = −Tᵢ`, braid relations, and commutation of distant generators.
    pub fn check_relations(&self) -> Result<()> {
        for j in 0..self.dim {
            let e = unit(j);
            for i in 1..self.n {
                let a = self.apply(i, &e);
                let aa = self.apply(i, &a);
                if !is_neg(&aa, &a) {
                    return Err(Error::Internal(format!("{}: T_{i}^2 != -T_{i}", self.name)));
                }
                for k in i + 1..self.n {
                    let (l, r) = if k == i + 1 {
                        (self.apply_word(&[i, k, i], &e), self.apply_word(&[k, i, k], &e))
                    } else {
                        (self.apply_word(&[i, k], &e), self.apply_word(&[k, i], &e))
                    };
                    if l != r {
                        return Err(Error::Internal(format!("{}: relation between T_{i} and T_{k} fails", self.name)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Combinatorial description of the generators, when every column is
    /// `0`, `−e_j` or `±e_k`.
    pub fn action_table(&self) -> Option<ActionTable> {
        self.gens
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .map(|(j, col)| {
                        if col.is_empty() {
                            return Some(Action::Zero);
                        }
                        if col.len() != 1 {
                            return None;
                        }
                        let (&k, c) = col.iter().next().expect("one entry");
                        let neg = *c == int(-1);
                        if !neg && *c != int(1) {
                            return None;
                        }
                        match (k == j, neg) {
                            (true, true) => Some(Action::Same),
                            (true, false) => None,
                            (false, _) => Some(Action::To { target: k, negative: neg }),
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Smallest submodule containing `vectors`.
    pub fn submodule(&self, vectors: impl IntoIterator<Item = SparseVec>) -> Subspace {
        let mut sub = Subspace::new(self.dim);
        let mut queue: VecDeque<SparseVec> = VecDeque::new();
        for v in vectors {
            if sub.insert(&v) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 1..self.n {
                let w = self.apply(i, &v);
                if sub.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
        sub
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|b| (1..self.n).all(|i| sub.contains(&self.apply(i, b))))
    }

    /// Action on an invariant subspace, in the coordinates of its reduced basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<ModuleRep> {
        let basis = sub.basis();
        let mut gens = Vec::with_capacity(self.n - 1);
        for i in 1..self.n {
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let c =
                    sub.coords(&self.apply(i, b)).ok_or_else(|| Error::Internal(format!("{}: subspace is not T_{i}-stable", self.name)))?;
                cols.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
            }
            gens.push(cols);
        }
        let mut m = ModuleRep::new(self.n, basis.len(), gens, format!("sub({})", self.name))?;
        if let (Some(l), true) = (&self.labels, sub.is_coordinate()) {
            m.labels = Some(sub.pivots().into_iter().map(|p| l[p].clone()).collect());
        }
        Ok(m)
    }

    /// Quotient by an invariant subspace; the basis is the images of the
    /// standard vectors at non-pivot positions.
    pub fn quotient(&self, sub: &Subspace) -> Result<ModuleRep> {
        if !self.is_submodule(sub) {
            return Err(Error::Internal(format!("{}: quotient by a non-submodule", self.name)));
        }
        let piv = sub.pivots();
        let rest: Vec<usize> = (0..self.dim).filter(|j| !piv.contains(j)).collect();
        let pos: BTreeMap<usize, usize> = rest.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut gens = Vec::with_capacity(self.n - 1);
        for i in 1..self.n {
            let cols =
                rest.iter().map(|&j| sub.reduce(&self.apply(i, &unit(j))).into_iter().map(|(k, c)| (pos[&k], c)).collect()).collect();
            gens.push(cols);
        }
        let mut m = ModuleRep::new(self.n, rest.len(), gens, format!("quot({})", self.name))?;
        if let (Some(l), true) = (&self.labels, sub.is_coordinate()) {
            m.labels = Some(rest.iter().map(|&j| l[j].clone()).collect());
        }
        Ok(m)
    }

    pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep> {
        let n = parts.first().map_or(1, |m| m.n);
        if let Some(m) = parts.iter().find(|m| m.n != n) {
            return Err(Error::SizeMismatch(m.n, n));
        }
        let dim: usize = parts.iter().map(|m| m.dim).sum();
        let mut gens = vec![Vec::with_capacity(dim); n.saturating_sub(1)];
        let mut off = 0;
        for m in parts {
            for (g, mg) in gens.iter_mut().zip(&m.gens) {
                g.extend(mg.iter().map(|c| c.iter().map(|(k, x)| (k + off, x.clone())).collect::<SparseVec>()));
            }
            off += m.dim;
        }
        let name = parts.iter().map(|m| m.name.as_str()).collect::<Vec<_>>().join(" + ");
        ModuleRep::new(n, dim, gens, name)
    }

    /// Multiplicities `[M : S_J]`. The trace of `η_{w₀(K)}` (longest element of
    /// the parabolic subgroup on `K`) counts factors whose descent set contains
    /// `K`; Möbius inversion over subsets recovers the multiplicities.
    pub fn composition_factors(&self) -> Result<BTreeMap<Composition, usize>> {
        let m = self.n - 1;
        let subsets = 1usize << m;
        let mut f = vec![Scalar::zero(); subsets];
        for (mask, fk) in f.iter_mut().enumerate() {
            let word = reduced_word(&parabolic_longest(self.n, mask));
            let sign = if word.len().is_multiple_of(2) { int(1) } else { int(-1) };
            let mut tr = Scalar::zero();
            for j in 0..self.dim {
                if let Some(c) = self.apply_word(&word, &unit(j)).get(&j) {
                    tr += c.clone();
                }
            }
            *fk = tr * sign;
        }
        let mut out = BTreeMap::new();
        for d in 0..subsets {
            let mut total = Scalar::zero();
            for (k, fk) in f.iter().enumerate() {
                if k & d == d {
                    let extra = (k & !d).count_ones();
                    if extra % 2 == 0 {
                        total += fk.clone();
                    } else {
                        total -= fk.clone();
                    }
                }
            }
            if !total.is_integer() || total < Scalar::zero() {
                return Err(Error::Internal(format!("{}: non-integral factor multiplicity", self.name)));
            }
            let c: usize = total.to_integer().try_into().map_err(|_| Error::Internal("multiplicity overflow".into()))?;
            if c > 0 {
                out.insert(mask_composition(self.n, d), c);
            }
        }
        if out.values().sum::<usize>() != self.dim {
            return Err(Error::Internal(format!("{}: factor count differs from dimension", self.name)));
        }
        Ok(out)
    }

    /// `rad(U)` for an invariant subspace `U`: the submodule generated by the
    /// commutators `[Tᵢ, Tᵢ₊₁]` applied to `U`. These generate the radical of
    /// the algebra as a two-sided ideal, since the quotient by them is
    /// commutative and spanned by commuting idempotents.
    pub fn radical_of(&self, u: &Subspace) -> Subspace {
        let mut seeds = Vec::new();
        for b in u.basis() {
            for i in 1..self.n.saturating_sub(1) {
                let x = self.apply_word(&[i, i + 1], &b);
                let y = self.apply_word(&[i + 1, i], &b);
                let mut d = x;
                add_scaled(&mut d, &y, &int(-1));
                if !d.is_empty() {
                    seeds.push(d);
                }
            }
        }
        self.submodule(seeds)
    }

    pub fn radical(&self) -> Subspace {
        self.radical_of(&Subspace::full(self.dim))
    }

    /// Radical series `M ⊇ rad M ⊇ rad² M ⊇ ⋯ ⊇ 0`.
    pub fn radical_series(&self) -> Result<Vec<Subspace>> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("nonempty");
            if last.dim() == 0 {
                return Ok(series);
            }
            let next = self.radical_of(last);
            if next.dim() >= last.dim() {
                return Err(Error::Internal(format!("{}: radical series does not descend", self.name)));
            }
            series.push(next);
        }
    }

    /// Composition factors of each layer `radᵏ M / radᵏ⁺¹ M`.
    pub fn radical_layers(&self) -> Result<Vec<BTreeMap<Composition, usize>>> {
        let series = self.radical_series()?;
        let factors: Vec<BTreeMap<Composition, usize>> =
            series.iter().map(|s| self.restrict(s)?.composition_factors()).collect::<Result<_>>()?;
        Ok(factors
            .windows(2)
            .map(|w| {
                let mut layer = w[0].clone();
                for (j, c) in &w[1] {
                    let e = layer.get_mut(j).expect("factors of a submodule occur in the module");
                    *e -= c;
                }
                layer.retain(|_, c| *c > 0);
                layer
            })
            .collect())
    }

    /// Socle multiplicities: dimensions of the joint eigenspaces
    /// `{v : Tᵢ v = −v for i ∈ D, Tᵢ v = 0 otherwise}`.
    pub fn socle(&self) -> BTreeMap<Composition, usize> {
        let m = self.n - 1;
        let mut out = BTreeMap::new();
        for d in 0..(1usize << m) {
            let rows = m * self.dim;
            let mut big = RingMatrix::<Scalar>::zeros(rows.max(1), self.dim);
            for i in 1..self.n {
                let shift = if d & (1 << (i - 1)) != 0 { int(1) } else { int(0) };
                for (c, col) in self.gens[i - 1].iter().enumerate() {
                    for (r, x) in col {
                        big.set((i - 1) * self.dim + r, c, x.clone());
                    }
                    let r = (i - 1) * self.dim + c;
                    let cur = big.get(r, c);
                    big.set(r, c, cur + shift.clone());
                }
            }
            let k = if m == 0 { self.dim } else { self.dim - big.rank() };
            if k > 0 {
                out.insert(mask_composition(self.n, d), k);
            }
        }
        out
    }

    /// Quasi-symmetric characteristic `Σ [M : S_J] F_J`.
    pub fn characteristic(&self) -> Result<QSymElem> {
        Ok(self
            .composition_factors()?
            .into_iter()
            .fold(QSymElem::zero(crate::symfam::QsBasis::F), |acc, (j, c)| acc.add(&QSymElem::f(&j).scale(&int(c as i64)))))
    }

    /// Radical layers weighted by powers of `q`.
    pub fn characteristic_q(&self) -> Result<QSymElem<QPoly>> {
        let mut terms = crate::exactalg::LinComb::zero();
        for (k, layer) in self.radical_layers()?.into_iter().enumerate() {
            for (j, c) in layer {
                terms.add_term(j, QPoly::monomial(int(c as i64), k));
            }
        }
        Ok(QSymElem::new(crate::symfam::QsBasis::F, terms))
    }

    /// Free characteristic `Σ G_label`; needs a labelled basis.
    pub fn free_characteristic(&self) -> Result<FQElem> {
        let labels = self.labels.as_ref().ok_or_else(|| Error::Type("unlabelled module".into(), "FQSym characteristic".into()))?;
        Ok(FQElem::new(FqBasis::G, labels.iter().map(|s| (s.clone(), Scalar::one())).collect()))
    }
}

fn is_neg(a: &SparseVec, b: &SparseVec) -> bool {
    a.len() == b.len() && a.iter().all(|(k, x)| b.get(k).is_some_and(|y| *x == -y.clone()))
}

/// Longest element of the parabolic subgroup generated by `{sᵢ : bit i−1 of mask}`.
pub(crate) fn parabolic_longest(n: usize, mask: usize) -> Permutation {
    let mut w: Vec<usize> = (1..=n).collect();
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && mask & (1 << end) != 0 {
            end += 1;
        }
        w[start..=end].reverse();
        start = end + 1;
    }
    Permutation::new(w).expect("block reversal is a permutation")
}

/// Composition of `n` whose descent set is encoded by `mask`.
pub(crate) fn mask_composition(n: usize, mask: usize) -> Composition {
    let d: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
    Composition::from_descents(n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp;

    #[test]
    fn simple_modules() {
        let s = ModuleRep::simple(&comp(&[2, 1, 1])).unwrap();
        let f = s.composition_factors().unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(comp(&[2, 1, 1]), 1)]);
        assert_eq!(s.socle().into_iter().collect::<Vec<_>>(), vec![(comp(&[2, 1, 1]), 1)]);
        assert_eq!(s.radical().dim(), 0);
    }

    #[test]
    fn relation_violation_is_reported() {
        let bad = vec![vec![SparseVec::from([(0, int(1))])]];
        assert!(matches!(ModuleRep::new(2, 1, bad, "bad"), Err(Error::Internal(_))));
    }

    #[test]
    fn subspace_coordinates() {
        let mut s = Subspace::new(3);
        s.insert(&SparseVec::from([(0, int(1)), (1, int(1))]));
        s.insert(&SparseVec::from([(1, int(2)), (2, int(1))]));
        let v = SparseVec::from([(0, int(1)), (1, int(3)), (2, int(1))]);
        assert_eq!(s.coords(&v).unwrap().len(), 2);
        assert!(s.coords(&unit(2)).is_none());
    }

    #[test]
    fn parabolic_blocks() {
        assert_eq!(parabolic_longest(4, 0b101).to_string(), "2143");
        assert_eq!(parabolic_longest(3, 0b11).to_string(), "321");
        assert_eq!(mask_composition(4, 0b010), comp(&[2, 2]));
    }
}
