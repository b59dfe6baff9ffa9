use super::algebra::{hecke_algebra, HeckeElem};
use super::build::{build_module, regular_module, ModuleKind};
use super::module::{mask_composition, unit, ModuleRep, Subspace};
use crate::combinatorics::{alpha, permutations, Composition, Permutation};
use crate::error::{bound, Error, Result};
use crate::exactalg::{int, series_matrix_inverse, QPoly, QSeries, RingMatrix, Scalar, SparseVec};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Largest rank for Cartan matrices and quivers computed from modules.
pub const MAX_CARTAN_DEGREE: usize = 5;
/// Largest rank for the rewriting description of the quiver.
pub const MAX_QUIVER_DEGREE: usize = 6;
/// Largest rank for projective resolutions.
pub const MAX_RESOLUTION_DEGREE: usize = 4;
/// Largest number of resolution steps.
pub const MAX_RESOLUTION_STEPS: usize = 10;

/// `c_IJ(q) = Σ_k [radᵏ P_I / radᵏ⁺¹ P_I : S_J] qᵏ`, rows and columns
/// indexed by compositions in lexicographic order.
#[derive(Clone, Debug)]
pub struct QCartan {
    pub n: usize,
    pub comps: Vec<Composition>,
    pub matrix: RingMatrix<QPoly>,
}

impl QCartan {
    pub fn entry(&self, i: &Composition, j: &Composition) -> Option<QPoly> {
        let a = self.comps.iter().position(|c| c == i)?;
        let b = self.comps.iter().position(|c| c == j)?;
        Some(self.matrix.get(a, b))
    }

    /// Submatrix on the given rows and columns, in that order.
    pub fn block(&self, order: &[Composition]) -> Result<RingMatrix<QPoly>> {
        let idx: Vec<usize> = order
            .iter()
            .map(|c| {
                self.comps.iter().position(|x| x == c).ok_or_else(|| Error::Invalid(format!("{c} is not a composition of {}", self.n)))
            })
            .collect::<Result<_>>()?;
        Ok(RingMatrix::from_fn(idx.len(), idx.len(), |a, b| self.matrix.get(idx[a], idx[b])))
    }

    /// Classical Cartan matrix `C(1)`.
    pub fn at_one(&self) -> RingMatrix<Scalar> {
        self.matrix.map(|p| p.eval(&int(1)))
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("I");
        for c in &self.comps {
            let _ = write!(out, "\t{c}");
        }
        out.push('\n');
        for (a, c) in self.comps.iter().enumerate() {
            out.push_str(&c.to_string());
            for b in 0..self.comps.len() {
                let _ = write!(out, "\t{}", self.matrix.get(a, b).render_with("q"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .comps
            .iter()
            .enumerate()
            .map(|(a, c)| {
                let entries: serde_json::Map<String, serde_json::Value> =
                    self.comps.iter().enumerate().map(|(b, d)| (d.to_string(), self.matrix.get(a, b).render_with("q").into())).collect();
                serde_json::json!({ "row": c.to_string(), "entries": entries })
            })
            .collect();
        serde_json::json!({ "n": self.n, "cartan": rows })
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> =
            (0..self.comps.len()).map(|a| (0..self.comps.len()).map(|b| self.matrix.get(a, b).render_with("q")).collect()).collect();
        let w = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .chain(self.comps.iter().map(|c| c.to_string().chars().count()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:w$}", "");
        for c in &self.comps {
            let _ = write!(out, " {:>w$}", c.to_string());
        }
        out.push('\n');
        for (c, row) in self.comps.iter().zip(cells) {
            let _ = write!(out, "{:w$}", c.to_string());
            for s in row {
                let _ = write!(out, " {s:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

pub fn q_cartan(n: usize) -> Result<QCartan> {
    if n == 0 || n > MAX_CARTAN_DEGREE {
        return Err(bound("q-Cartan matrix", MAX_CARTAN_DEGREE));
    }
    let comps = Composition::all(n);
    let layers: Vec<Vec<BTreeMap<Composition, usize>>> =
        comps.par_iter().map(|i| build_module(&ModuleKind::Projective(i.clone()))?.radical_layers()).collect::<Result<_>>()?;
    let matrix = RingMatrix::from_fn(comps.len(), comps.len(), |a, b| {
        let mut coeffs = Vec::new();
        for (k, layer) in layers[a].iter().enumerate() {
            if let Some(&c) = layer.get(&comps[b]) {
                coeffs.resize(k + 1, Scalar::zero());
                coeffs[k] = int(c as i64);
            }
        }
        QPoly::new(coeffs)
    });
    Ok(QCartan { n, comps, matrix })
}

/// Two descriptions of the radical of `H_n(0)` compared as subspaces of the
/// `T`-coordinate space.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub n: usize,
    /// Dimension of `span{g_σ : σ ≠ α(C(σ))}`.
    pub norton_dim: usize,
    /// Dimension of the common kernel of the one-dimensional characters.
    pub annihilator_dim: usize,
    /// Dimension of the commutator-generated radical of the regular module.
    pub commutator_dim: usize,
    pub equal: bool,
    /// Dimensions of `radᵏ` for `k = 0, 1, …` down to zero.
    pub series_dims: Vec<usize>,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        self.equal && self.norton_dim == self.annihilator_dim && self.annihilator_dim == self.commutator_dim
    }

    /// Smallest `k` with `radᵏ = 0`.
    pub fn loewy_length(&self) -> usize {
        self.series_dims.len() - 1
    }
}

pub fn radical_report(n: usize) -> Result<RadicalReport> {
    let alg = hecke_algebra(n)?;
    let perms: Vec<Permutation> = permutations(n).collect();
    let index: BTreeMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let to_vec = |x: &HeckeElem| -> SparseVec { x.terms().iter().map(|(p, c)| (index[p], c.clone())).collect() };

    let mut norton = Subspace::new(perms.len());
    for s in &perms {
        if *s != alpha(&s.descent_composition()) {
            norton.insert(&to_vec(alg.g(s)));
        }
    }

    // χ_J(T_σ) = (−1)^{ℓ(σ)} when every letter of σ lies in Des(J), else 0.
    let masks = 1usize << (n - 1);
    let chars = RingMatrix::from_fn(masks.max(1), perms.len(), |d, c| {
        let s = &perms[c];
        let supp = super::algebra::reduced_word(s).iter().fold(0usize, |acc, &i| acc | (1 << (i - 1)));
        if supp & !d == 0 {
            if s.length().is_multiple_of(2) {
                int(1)
            } else {
                int(-1)
            }
        } else {
            Scalar::zero()
        }
    });
    let mut annihilator = Subspace::new(perms.len());
    for v in chars.kernel() {
        annihilator.insert(&v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
    }

    let reg = regular_module(n)?;
    let commutator = reg.radical();
    let series_dims = reg.radical_series()?.iter().map(Subspace::dim).collect();
    let equal = norton.is_subspace_of(&annihilator)
        && annihilator.is_subspace_of(&norton)
        && commutator.is_subspace_of(&norton)
        && norton.is_subspace_of(&commutator);
    Ok(RadicalReport {
        n,
        norton_dim: norton.dim(),
        annihilator_dim: annihilator.dim(),
        commutator_dim: commutator.dim(),
        equal,
        series_dims,
    })
}

/// Subset of `{1, …, n−1}` encoded as a bit mask.
pub type Vertex = usize;

/// Ext-quiver of `H_n(0)` on subsets of `{1, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub n: usize,
    /// Arrows with multiplicities.
    pub arrows: BTreeMap<(Vertex, Vertex), usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuiverMethod {
    /// Multiplicities of `S_J` in `rad P_I / rad² P_I`.
    Ext1,
    /// Rewriting rules on subsets.
    Theorem,
}

fn render_subset(n: usize, v: Vertex) -> String {
    let items: Vec<String> = (1..n).filter(|i| v & (1 << (i - 1)) != 0).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn subset_of(c: &Composition) -> Vertex {
    c.descent_set().iter().fold(0, |acc, i| acc | (1 << (i - 1)))
}

impl Quiver {
    pub fn arrow_count(&self) -> usize {
        self.arrows.values().sum()
    }

    /// Connected components of the underlying graph.
    pub fn blocks(&self) -> Vec<BTreeSet<Vertex>> {
        let size = 1usize << (self.n - 1);
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(a, b) in self.arrows.keys() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut comps: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
        for v in 0..size {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().insert(v);
        }
        comps.into_values().collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph quiver_{} {{\n", self.n);
        for v in 0..(1usize << (self.n - 1)) {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", render_subset(self.n, v));
        }
        for (&(a, b), &m) in &self.arrows {
            for _ in 0..m {
                let _ = writeln!(out, "  v{a} -> v{b};");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        self.arrows
            .iter()
            .map(|(&(a, b), &m)| {
                let mult = if m > 1 { format!(" x{m}") } else { String::new() };
                format!("{} -> {}{mult}", render_subset(self.n, a), render_subset(self.n, b))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = self
            .arrows
            .iter()
            .map(|(&(a, b), &m)| serde_json::json!({ "from": render_subset(self.n, a), "to": render_subset(self.n, b), "multiplicity": m }))
            .collect();
        serde_json::json!({ "n": self.n, "arrows": arrows, "blocks": self.blocks().len() })
    }
}

pub fn quiver(n: usize, method: QuiverMethod) -> Result<Quiver> {
    if n == 0 {
        return Err(Error::Invalid("quiver of H_0(0)".into()));
    }
    let mut arrows = BTreeMap::new();
    match method {
        QuiverMethod::Ext1 => {
            let c = q_cartan(n)?;
            for (a, i) in c.comps.iter().enumerate() {
                for (b, j) in c.comps.iter().enumerate() {
                    let m = c.matrix.get(a, b).coeff(1);
                    if !m.is_zero() {
                        let m: usize = m.to_integer().try_into().map_err(|_| Error::Internal("negative Cartan coefficient".into()))?;
                        arrows.insert((subset_of(i), subset_of(j)), m);
                    }
                }
            }
        }
        QuiverMethod::Theorem => {
            if n > MAX_QUIVER_DEGREE {
                return Err(bound("quiver by rewriting", MAX_QUIVER_DEGREE));
            }
            let m = n - 1;
            let bit = |i: usize| 1usize << (i - 1);
            let inside = |i: usize| (1..=m).contains(&i);
            for s in 0..(1usize << m) {
                let has = |i: usize| inside(i) && s & bit(i) != 0;
                for i in (1..=m).filter(|&i| has(i)) {
                    for j in [i.wrapping_sub(1), i + 1] {
                        if inside(j) && !has(j) {
                            arrows.insert((s, s & !bit(i) | bit(j)), 1);
                        }
                    }
                    if i >= 2 && inside(i - 1) && inside(i + 1) && !has(i - 1) && !has(i + 1) {
                        arrows.insert((s, s & !bit(i) | bit(i - 1) | bit(i + 1)), 1);
                    }
                }
                for i in 2..m {
                    if has(i - 1) && has(i + 1) && !has(i) {
                        arrows.insert((s, s & !bit(i - 1) & !bit(i + 1) | bit(i)), 1);
                    }
                }
            }
        }
    }
    Ok(Quiver { n, arrows })
}

/// `(3n−7)·2^{n−3}`.
pub fn quiver_arrow_formula(n: usize) -> usize {
    (3 * n - 7) << (n - 3)
}

/// Minimal projective resolution `⋯ → P¹ → P⁰ → M → 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub n: usize,
    /// Multiplicities of each `P_J` in `Pᵏ`.
    pub covers: Vec<BTreeMap<Composition, usize>>,
    /// Radical layers of each syzygy `Ωᵏ M`, starting with `M` itself.
    pub syzygy_layers: Vec<Vec<BTreeMap<Composition, usize>>>,
    pub syzygy_dims: Vec<usize>,
    /// Radical layers of each `Pᵏ`.
    pub cover_layers: Vec<Vec<BTreeMap<Composition, usize>>>,
}

fn graded_sum(layers: &[BTreeMap<Composition, usize>]) -> BTreeMap<(usize, Composition), i64> {
    let mut out = BTreeMap::new();
    for (k, l) in layers.iter().enumerate() {
        for (j, &c) in l {
            *out.entry((k, j.clone())).or_insert(0) += c as i64;
        }
    }
    out
}

impl Resolution {
    /// `P_q(M) = Σ_k qᵏ ch(Pᵏ)` in the ribbon basis.
    pub fn render_pq(&self) -> String {
        let mut terms = Vec::new();
        for (k, cover) in self.covers.iter().enumerate() {
            if cover.is_empty() {
                continue;
            }
            let inner: Vec<String> = cover.iter().map(|(j, &m)| if m == 1 { format!("R{j}") } else { format!("{m}R{j}") }).collect();
            let body = if inner.len() > 1 && k > 0 { format!("({})", inner.join(" + ")) } else { inner.join(" + ") };
            terms.push(match k {
                0 => body,
                1 => format!("q*{body}"),
                _ => format!("q^{k}*{body}"),
            });
        }
        terms.join(" + ")
    }

    /// `ch_q(Ωᵏ)` rendered in the `F` basis.
    pub fn render_syzygy(&self, k: usize) -> String {
        let mut terms = Vec::new();
        for (d, layer) in self.syzygy_layers[k].iter().enumerate() {
            let inner: Vec<String> = layer.iter().map(|(j, &m)| if m == 1 { format!("F{j}") } else { format!("{m}F{j}") }).collect();
            if inner.is_empty() {
                continue;
            }
            let body = if inner.len() > 1 && d > 0 { format!("({})", inner.join(" + ")) } else { inner.join(" + ") };
            terms.push(match d {
                0 => body,
                1 => format!("q*{body}"),
                _ => format!("q^{d}*{body}"),
            });
        }
        terms.join(" + ")
    }

    /// For each `k ≥ 1`: does `ch_q(Ωᵏ) = q⁻¹(ch_q(Pᵏ⁻¹) − ch_q(Ωᵏ⁻¹))` hold?
    pub fn q_recursion(&self) -> Vec<bool> {
        (1..self.syzygy_layers.len())
            .map(|k| {
                let mut diff = graded_sum(&self.cover_layers[k - 1]);
                for (key, c) in graded_sum(&self.syzygy_layers[k - 1]) {
                    *diff.entry(key).or_insert(0) -= c;
                }
                diff.retain(|_, c| *c != 0);
                if diff.keys().any(|(d, _)| *d == 0) {
                    return false;
                }
                let shifted: BTreeMap<(usize, Composition), i64> = diff.into_iter().map(|((d, j), c)| ((d - 1, j), c)).collect();
                shifted == graded_sum(&self.syzygy_layers[k])
            })
            .collect()
    }

    /// `Σ_k m^k_J qᵏ` for each `J`.
    pub fn poincare(&self, j: &Composition) -> Vec<usize> {
        self.covers.iter().map(|c| c.get(j).copied().unwrap_or(0)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = (0..self.covers.len())
            .map(|k| {
                let cover: serde_json::Map<String, serde_json::Value> =
                    self.covers[k].iter().map(|(j, m)| (j.to_string(), (*m).into())).collect();
                serde_json::json!({ "k": k, "cover": cover, "syzygy_dim": self.syzygy_dims[k], "syzygy_ch_q": self.render_syzygy(k) })
            })
            .collect();
        serde_json::json!({ "n": self.n, "P_q": self.render_pq(), "steps": steps })
    }
}

/// Projective cover `⊕ P_J → M` built from vectors of `e_J M` lifting a basis
/// of the top. Returns the multiplicities, the cover module and the kernel.
fn projective_cover(m: &ModuleRep) -> Result<(BTreeMap<Composition, usize>, ModuleRep, Subspace)> {
    let n = m.rank();
    let alg = hecke_algebra(n)?;
    let rad = m.radical();
    let top = m.radical_layers()?.into_iter().next().unwrap_or_default();
    let mut span = rad.clone();
    let mut parts: Vec<ModuleRep> = Vec::new();
    let mut images: Vec<SparseVec> = Vec::new();
    for (j, &mult) in &top {
        let e = alg.idempotent(j);
        let p = build_module(&ModuleKind::Projective(j.clone()))?;
        let mut found = 0;
        for col in 0..m.dim() {
            if found == mult {
                break;
            }
            let v = m.act(&e, &unit(col))?;
            if !span.insert(&v) {
                continue;
            }
            found += 1;
            for s in p.labels().expect("projectives are labelled") {
                images.push(m.act(alg.g(s), &v)?);
            }
            parts.push(p.clone());
        }
        if found != mult {
            return Err(Error::Internal(format!("could not lift the top of {} at {j}", m.name())));
        }
    }
    let refs: Vec<&ModuleRep> = parts.iter().collect();
    let cover = ModuleRep::direct_sum(&refs)?;
    // φ must intertwine the actions.
    for (c, img) in images.iter().enumerate() {
        for i in 1..n {
            let lhs: SparseVec = {
                let mut acc = SparseVec::new();
                for (k, x) in cover.apply(i, &unit(c)) {
                    for (r, y) in &images[k] {
                        let e = acc.entry(*r).or_insert_with(Scalar::zero);
                        *e += x.clone() * y;
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            };
            if lhs != m.apply(i, img) {
                return Err(Error::Internal(format!("cover of {} is not a module map", m.name())));
            }
        }
    }
    let phi = RingMatrix::from_fn(m.dim(), images.len(), |r, c| images[c].get(&r).cloned().unwrap_or_else(Scalar::zero));
    if phi.rank() != m.dim() {
        return Err(Error::Internal(format!("cover of {} is not surjective", m.name())));
    }
    let mut kernel = Subspace::new(cover.dim());
    for v in phi.kernel() {
        kernel.insert(&v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
    }
    if !kernel.is_subspace_of(&cover.radical()) {
        return Err(Error::Internal(format!("non-minimal cover detected for {}", m.name())));
    }
    Ok((top, cover, kernel))
}

pub fn syzygy_resolution(m: &ModuleRep, k_max: usize) -> Result<Resolution> {
    let n = m.rank();
    if n > MAX_RESOLUTION_DEGREE {
        return Err(bound("projective resolution", MAX_RESOLUTION_DEGREE));
    }
    if k_max > MAX_RESOLUTION_STEPS {
        return Err(bound("resolution length", MAX_RESOLUTION_STEPS));
    }
    let mut res = Resolution { n, covers: Vec::new(), syzygy_layers: Vec::new(), syzygy_dims: Vec::new(), cover_layers: Vec::new() };
    let mut cur = m.clone();
    for _ in 0..=k_max {
        res.syzygy_dims.push(cur.dim());
        res.syzygy_layers.push(cur.radical_layers()?);
        if cur.dim() == 0 {
            res.covers.push(BTreeMap::new());
            res.cover_layers.push(Vec::new());
            continue;
        }
        let (top, cover, kernel) = projective_cover(&cur)?;
        res.cover_layers.push(cover.radical_layers()?);
        res.covers.push(top);
        cur = cover.restrict(&kernel)?.with_name("syzygy");
    }
    Ok(res)
}

/// Result of comparing `Σ_k m^k_IJ qᵏ` with `a_IJ(−q)`, `A = C(q)⁻¹`.
#[derive(Clone, Debug)]
pub struct ExtReport {
    pub n: usize,
    pub truncation: usize,
    pub pairs_checked: usize,
    /// `(I, J, k)` where the two sides differ.
    pub failures: Vec<(Composition, Composition, usize)>,
}

impl ExtReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn ext_poincare_check(n: usize, truncation: usize) -> Result<ExtReport> {
    if n == 0 || n > MAX_RESOLUTION_DEGREE {
        return Err(bound("Ext Poincaré check", MAX_RESOLUTION_DEGREE));
    }
    let c = q_cartan(n)?;
    let inv = series_matrix_inverse(&c.matrix, truncation + 1)?;
    let results: Vec<Vec<(Composition, Composition, usize)>> = c
        .comps
        .par_iter()
        .enumerate()
        .map(|(a, i)| -> Result<Vec<_>> {
            let res = syzygy_resolution(&ModuleRep::simple(i)?, truncation)?;
            let mut bad = Vec::new();
            for (b, j) in c.comps.iter().enumerate() {
                let ser: &QSeries = inv.at(a, b);
                for (k, &m) in res.poincare(j).iter().enumerate() {
                    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                    if ser.coeff(k) * sign != int(m as i64) {
                        bad.push((i.clone(), j.clone(), k));
                    }
                }
            }
            Ok(bad)
        })
        .collect::<Result<_>>()?;
    Ok(ExtReport { n, truncation, pairs_checked: c.comps.len() * c.comps.len(), failures: results.into_iter().flatten().collect() })
}

/// Composition labelling a vertex.
pub fn vertex_composition(n: usize, v: Vertex) -> Composition {
    mask_composition(n, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp;

    #[test]
    fn quiver_n3() {
        let q = quiver(3, QuiverMethod::Theorem).unwrap();
        assert_eq!(q.arrows.keys().copied().collect::<Vec<_>>(), vec![(0b01, 0b10), (0b10, 0b01)]);
        assert_eq!(q, quiver(3, QuiverMethod::Ext1).unwrap());
        assert_eq!(q.blocks().len(), 3);
    }

    #[test]
    fn cartan_n3_classical() {
        let c = q_cartan(3).unwrap();
        let one = c.at_one();
        for (a, i) in c.comps.iter().enumerate() {
            let total: Scalar = (0..c.comps.len()).map(|b| one.get(a, b)).sum();
            assert_eq!(total, int(crate::combinatorics::descent_class(i).len() as i64));
        }
        assert_eq!(c.entry(&comp(&[2, 1]), &comp(&[1, 2])).unwrap(), QPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn radical_small() {
        for n in 1..=3 {
            assert!(radical_report(n).unwrap().passed());
        }
    }
}
