use super::algebra::{hecke_algebra, HeckeElem};
use super::module::{Action, ActionTable, ModuleRep};
use crate::combinatorics::{alpha, descent_class, order_leq, permutations, Composition, Order, Partition, Permutation, Tableau};
use crate::error::{bound, Error, Result};
use crate::exactalg::int;
use crate::posets::Poset;
use std::collections::HashMap;
use std::fmt;

/// Largest rank for the combinatorial constructions.
pub const MAX_COMBINATORIAL_DEGREE: usize = 6;
/// Largest rank for the regular representation.
pub const MAX_REGULAR_DEGREE: usize = 5;

/// Connected skew diagram in French convention: `rows[r] = (start, len)`,
/// row 0 at the bottom, columns counted from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    rows: Vec<(usize, usize)>,
}

impl SkewShape {
    pub fn new(rows: Vec<(usize, usize)>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(|r| r.1 == 0) {
            return Err(Error::Invalid("skew diagram rows must be nonempty".into()));
        }
        for w in rows.windows(2) {
            let ((s0, l0), (s1, l1)) = (w[0], w[1]);
            if s1 > s0 || s1 + l1 > s0 + l0 {
                return Err(Error::Invalid("rows do not form a skew diagram".into()));
            }
            if s0 >= s1 + l1 {
                return Err(Error::Invalid("skew diagram is not connected".into()));
            }
        }
        let shift = rows.iter().map(|r| r.0).min().unwrap_or(0);
        Ok(SkewShape { rows: rows.into_iter().map(|(s, l)| (s - shift, l)).collect() })
    }

    /// `λ/μ` with both partitions listed from the longest part.
    pub fn from_partitions(lambda: &Partition, mu: &Partition) -> Result<Self> {
        let l = lambda.parts();
        let m = mu.parts();
        if m.len() > l.len() {
            return Err(Error::Invalid("inner shape does not fit".into()));
        }
        Self::new(
            l.iter()
                .enumerate()
                .map(|(r, &x)| {
                    let s = m.get(r).copied().unwrap_or(0);
                    (s, x.saturating_sub(s))
                })
                .collect(),
        )
    }

    pub fn straight(lambda: &Partition) -> Self {
        SkewShape { rows: lambda.parts().iter().map(|&x| (0, x)).collect() }
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        self.rows.iter().enumerate().flat_map(|(r, &(s, l))| (s..s + l).map(move |c| (r, c))).collect()
    }

    /// Filling whose columns, left to right, hold consecutive integers
    /// increasing upwards; returned as rows.
    pub fn hyperstandard(&self) -> Vec<Vec<usize>> {
        let mut cells = self.cells();
        cells.sort_by_key(|&(r, c)| (c, r));
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.1]).collect();
        for (k, (r, c)) in cells.into_iter().enumerate() {
            rows[r][c - self.rows[r].0] = k + 1;
        }
        rows
    }

    /// Row reading of the hyperstandard filling (top row first).
    pub fn reading(&self) -> Permutation {
        Permutation::new(self.hyperstandard().into_iter().rev().flatten().collect()).expect("filling uses 1..n")
    }

    /// Standard fillings (rows increase rightwards, columns upwards) as
    /// value → row maps.
    pub fn standard_fillings(&self) -> Vec<Vec<usize>> {
        let cells = self.cells();
        let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut out = Vec::new();
        let mut filled = vec![false; cells.len()];
        let mut rows_of = Vec::with_capacity(cells.len());
        fn rec(
            cells: &[(usize, usize)],
            index: &HashMap<(usize, usize), usize>,
            filled: &mut [bool],
            rows_of: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if rows_of.len() == cells.len() {
                out.push(rows_of.clone());
                return;
            }
            for (k, &(r, c)) in cells.iter().enumerate() {
                if filled[k] {
                    continue;
                }
                let left_ok = c == 0 || index.get(&(r, c - 1)).is_none_or(|&j| filled[j]);
                let below_ok = r == 0 || index.get(&(r - 1, c)).is_none_or(|&j| filled[j]);
                if left_ok && below_ok {
                    filled[k] = true;
                    rows_of.push(r);
                    rec(cells, index, filled, rows_of, out);
                    rows_of.pop();
                    filled[k] = false;
                }
            }
        }
        rec(&cells, &index, &mut filled, &mut rows_of, &mut out);
        out
    }

    /// The two ways of attaching the first cell of `other` (left end of its
    /// top row) after the last cell of `self` (right end of its bottom row):
    /// `(beside, below)`.
    pub fn glue(&self, other: &SkewShape) -> Result<(SkewShape, SkewShape)> {
        let (bs, bl) = self.rows[0];
        let end = bs + bl;
        let top = other.rows.len() - 1;
        let place = |target: usize| -> Vec<(i64, usize)> {
            let off = target as i64 - other.rows[top].0 as i64;
            other.rows.iter().map(|&(s, l)| (s as i64 + off, l)).collect()
        };
        let build = |lower: Vec<(i64, usize)>, upper: Vec<(i64, usize)>| -> Result<SkewShape> {
            let all: Vec<(i64, usize)> = lower.into_iter().chain(upper).collect();
            let m = all.iter().map(|r| r.0).min().unwrap_or(0);
            SkewShape::new(all.into_iter().map(|(s, l)| ((s - m) as usize, l)).collect())
        };
        let mine: Vec<(i64, usize)> = self.rows.iter().map(|&(s, l)| (s as i64, l)).collect();
        let mut beside = place(end);
        let merged = beside.pop().expect("nonempty");
        let mut upper = mine.clone();
        upper[0] = (mine[0].0, bl + merged.1);
        let d1 = build(beside, upper)?;
        let d2 = build(place(end - 1), mine)?;
        Ok((d1, d2))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outer: Vec<String> = self.rows.iter().map(|(s, l)| (s + l).to_string()).collect();
        let inner: Vec<String> = self.rows.iter().map(|(s, _)| s.to_string()).collect();
        write!(f, "({})/({})", outer.join(","), inner.join(","))
    }
}

/// Kinds of modules that can be constructed.
#[derive(Clone, Debug)]
pub enum ModuleKind {
    Projective(Composition),
    Simple(Composition),
    N(Permutation),
    M(Permutation),
    Specht(Partition),
    SkewSpecht(SkewShape),
    Poset(Poset),
    Regular(usize),
}

/// Combinatorial module on a set of labels: `Tᵢ π = −π` when `i+1` precedes
/// `i` in `π`, `Tᵢ π = ∓ sᵢπ` when `sᵢπ` is a label, `0` otherwise. The
/// sign is `−` for Norton-type modules and `+` for poset modules.
pub fn label_module(n: usize, labels: Vec<Permutation>, negative: bool, name: impl Into<String>) -> Result<ModuleRep> {
    if labels.iter().any(|l| l.size() != n) {
        return Err(Error::Invalid("labels of mixed size".into()));
    }
    let index: HashMap<&Permutation, usize> = labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let table: ActionTable = (1..n)
        .map(|i| {
            labels
                .iter()
                .map(|p| {
                    if p.is_left_descent(i) {
                        Action::Same
                    } else {
                        match index.get(&p.left_simple(i)) {
                            Some(&k) => Action::To { target: k, negative },
                            None => Action::Zero,
                        }
                    }
                })
                .collect()
        })
        .collect();
    let m = if n == 1 { ModuleRep::new(1, labels.len(), Vec::new(), name)? } else { ModuleRep::from_table(n, &table, name)? };
    m.with_labels(labels)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_COMBINATORIAL_DEGREE {
        return Err(bound("module construction", MAX_COMBINATORIAL_DEGREE));
    }
    Ok(())
}

/// `[σ, ω(I)]` in the left weak order, `I = C(σ)`.
fn upper_interval(s: &Permutation) -> Result<Vec<Permutation>> {
    descent_class(&s.descent_composition())
        .into_iter()
        .filter_map(|t| match order_leq(s, &t, Order::LeftWeak) {
            Ok(true) => Some(Ok(t)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// Builds a module.
pub fn build_module(kind: &ModuleKind) -> Result<ModuleRep> {
    match kind {
        ModuleKind::Projective(i) => {
            check_degree(i.weight())?;
            label_module(i.weight(), descent_class(i), true, format!("P{i}"))
        }
        ModuleKind::Simple(i) => {
            check_degree(i.weight())?;
            ModuleRep::simple(i)
        }
        ModuleKind::N(s) => {
            check_degree(s.size())?;
            label_module(s.size(), upper_interval(s)?, true, format!("N{s}"))
        }
        ModuleKind::M(s) => {
            check_degree(s.size())?;
            let upper = upper_interval(s)?;
            let rest = descent_class(&s.descent_composition()).into_iter().filter(|t| !upper.contains(t)).collect();
            label_module(s.size(), rest, true, format!("M{s}"))
        }
        ModuleKind::Specht(lambda) => {
            check_degree(lambda.weight())?;
            let s = Tableau::column_superstandard(lambda).reading_word().to_permutation()?;
            Ok(build_module(&ModuleKind::N(s))?.with_name(format!("V{}", lambda.as_composition())))
        }
        ModuleKind::SkewSpecht(d) => {
            check_degree(d.size())?;
            Ok(build_module(&ModuleKind::N(d.reading()))?.with_name(format!("V{d}")))
        }
        ModuleKind::Poset(p) => crate::posets::poset_module(p),
        ModuleKind::Regular(n) => regular_module(*n),
    }
}

/// Left regular representation on the `T` basis.
pub fn regular_module(n: usize) -> Result<ModuleRep> {
    if n == 0 || n > MAX_REGULAR_DEGREE {
        return Err(bound("regular representation", MAX_REGULAR_DEGREE));
    }
    let perms: Vec<Permutation> = permutations(n).collect();
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut gens = Vec::with_capacity(n - 1);
    for i in 1..n {
        let ti = HeckeElem::t(n, i)?;
        let mut cols = Vec::with_capacity(perms.len());
        for p in &perms {
            let prod = ti.mul(&HeckeElem::t_basis(p))?;
            cols.push(prod.terms().iter().map(|(q, c)| (index[q], c.clone())).collect());
        }
        gens.push(cols);
    }
    ModuleRep::new(n, perms.len(), gens, format!("H{n}(0)"))
}

/// Checks the combinatorial action on `P_I` against multiplication in the
/// algebra: `ηᵢ g_σ` expanded on the `g` basis, every `I` and `σ ∈ D_I`.
pub fn verify_projective_action(n: usize) -> Result<bool> {
    let alg = hecke_algebra(n)?;
    for i in Composition::all(n) {
        let labels = descent_class(&i);
        for s in &labels {
            let g = alg.g(s);
            for k in 1..n {
                let got = alg.expand_g(&HeckeElem::eta(n, k)?.mul(g)?)?;
                let want = if s.is_left_descent(k) {
                    Some(s.clone())
                } else {
                    let t = s.left_simple(k);
                    labels.contains(&t).then_some(t)
                };
                let ok = match want {
                    None => got.is_zero(),
                    Some(t) => got.len() == 1 && got.coeff(&t) == int(1),
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        // Sanity: g_{α(I)} generates, i.e. it is the minimum of the class.
        if !labels.contains(&alpha(&i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{comp, omega, perm};
    use crate::hecke0::module::tables_equivalent;

    #[test]
    fn projective_dimensions() {
        for n in 1..=5 {
            for i in Composition::all(n) {
                let p = build_module(&ModuleKind::Projective(i.clone())).unwrap();
                assert_eq!(p.dim(), descent_class(&i).len());
            }
        }
    }

    #[test]
    fn combinatorial_rule_matches_algebra() {
        for n in 1..=4 {
            assert!(verify_projective_action(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn socle_of_projectives() {
        for n in 2..=4 {
            for i in Composition::all(n) {
                let p = build_module(&ModuleKind::Projective(i.clone())).unwrap();
                let soc = p.socle();
                assert_eq!(soc.into_iter().collect::<Vec<_>>(), vec![(i.mirror(), 1)], "I = {i}");
            }
        }
    }

    #[test]
    fn bottom_of_interval_is_simple() {
        for i in Composition::all(4) {
            let n = build_module(&ModuleKind::N(omega(&i))).unwrap();
            let s = ModuleRep::simple(&i.mirror()).unwrap();
            assert!(tables_equivalent(&n.action_table().unwrap(), &s.action_table().unwrap()).is_some());
        }
    }

    #[test]
    fn specht_reading_words() {
        let l = Partition::new(vec![3, 2, 1]).unwrap();
        let s = Tableau::column_superstandard(&l).reading_word().to_permutation().unwrap();
        assert_eq!(s, perm("325146"));
        let v = build_module(&ModuleKind::Specht(Partition::new(vec![2, 2]).unwrap())).unwrap();
        assert_eq!(v.labels().unwrap()[0], perm("2413"));
        assert_eq!(v.radical_layers().unwrap()[0].keys().cloned().collect::<Vec<_>>(), vec![comp(&[1, 2, 1])]);
    }

    #[test]
    fn skew_shapes() {
        assert!(SkewShape::new(vec![(1, 2), (0, 1)]).is_err());
        let d = SkewShape::new(vec![(1, 2), (0, 2)]).unwrap();
        assert_eq!(d.hyperstandard(), vec![vec![2, 4], vec![1, 3]]);
        assert_eq!(d.reading(), perm("1324"));
        let (b, c) = d.glue(&SkewShape::straight(&Partition::new(vec![1]).unwrap())).unwrap();
        assert_eq!(b.size(), 5);
        assert_eq!(c.rows().len(), 3);
    }
}
