use super::PackedMat;
use crate::combinatorics::{standardize_slice, Composition, MAX_PACKED_DEGREE};
use crate::error::{bound, Error, Result};
use crate::exactalg::{render_combination, LinComb, Scalar};
use crate::fqsym::FQElem;
use crate::symfam::{NSymElem, NsBasis, QSymElem, QsBasis};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Basis in which an [`MQElem`] is stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MqBasis {
    MS,
    /// `ΦS_P = Σ_{|K|=h} (1/K!) MS_{P⟩K}`.
    PhiS,
}

impl MqBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            MqBasis::MS => "MS",
            MqBasis::PhiS => "PhiS",
        }
    }
}

/// Element of `MQSym ⊗ MQSym` in the `MS ⊗ MS` basis.
pub type MqTensor = LinComb<(PackedMat, PackedMat), Scalar>;

/// Matrix quasi-symmetric function with rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MQElem {
    basis: MqBasis,
    terms: LinComb<PackedMat, Scalar>,
}

/// Quasi-shuffles of two row lists: every row of `a` and of `b` is used once,
/// in order, and a row of each may share a line.
fn stuffle_rows(a: &[Vec<u32>], b: &[Vec<u32>], qa: usize, qb: usize, acc: &mut Vec<Vec<u32>>, out: &mut Vec<PackedMat>) {
    if a.is_empty() && b.is_empty() {
        out.push(PackedMat::pack(acc));
        return;
    }
    let zero_a = vec![0u32; qa];
    let zero_b = vec![0u32; qb];
    if let Some((ra, rest)) = a.split_first() {
        acc.push(ra.iter().chain(&zero_b).copied().collect());
        stuffle_rows(rest, b, qa, qb, acc, out);
        acc.pop();
    }
    if let Some((rb, rest)) = b.split_first() {
        acc.push(zero_a.iter().chain(rb).copied().collect());
        stuffle_rows(a, rest, qa, qb, acc, out);
        acc.pop();
    }
    if let (Some((ra, ra_rest)), Some((rb, rb_rest))) = (a.split_first(), b.split_first()) {
        acc.push(ra.iter().chain(rb).copied().collect());
        stuffle_rows(ra_rest, rb_rest, qa, qb, acc, out);
        acc.pop();
    }
}

/// Augmented shuffle of `P` and `Q`: the terms of `MS_P · MS_Q`, each with
/// multiplicity one.
pub fn augmented_shuffle(p: &PackedMat, q: &PackedMat) -> Vec<PackedMat> {
    let mut out = Vec::new();
    stuffle_rows(p.rows(), q.rows(), p.width(), q.width(), &mut Vec::new(), &mut out);
    out
}

/// Cuts the row list at every position and column-packs both halves.
pub fn row_cuts(p: &PackedMat) -> Vec<(PackedMat, PackedMat)> {
    let rows = p.rows();
    (0..=rows.len()).map(|k| (PackedMat::pack(&rows[..k]), PackedMat::pack(&rows[k..]))).collect()
}

/// `P⟩K`: sums consecutive blocks of `k₁, k₂, …` rows.
pub fn row_merge(p: &PackedMat, k: &Composition) -> Result<PackedMat> {
    if k.weight() != p.height() {
        return Err(Error::SizeMismatch(k.weight(), p.height()));
    }
    let mut rows = Vec::with_capacity(k.len());
    let mut start = 0;
    for &len in k.parts() {
        let mut row = vec![0u32; p.width()];
        for r in &p.rows()[start..start + len] {
            row.iter_mut().zip(r).for_each(|(x, y)| *x += y);
        }
        rows.push(row);
        start += len;
    }
    PackedMat::new(rows)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn inverse_k_factorial(k: &Composition) -> Scalar {
    let den: BigInt = k.parts().iter().map(|&x| factorial(x)).product();
    Scalar::new(BigInt::one(), den)
}

/// `ΦS_P` expanded in `MS`.
pub fn phis_in_ms(p: &PackedMat) -> LinComb<PackedMat, Scalar> {
    if p.height() == 0 {
        return LinComb::basis(p.clone());
    }
    Composition::all(p.height()).into_iter().map(|k| (row_merge(p, &k).expect("heights agree"), inverse_k_factorial(&k))).collect()
}

/// `MS_P` expanded in `ΦS`, by peeling the height-lowering corrections.
fn ms_in_phis(p: &PackedMat, memo: &mut HashMap<PackedMat, LinComb<PackedMat, Scalar>>) -> LinComb<PackedMat, Scalar> {
    if let Some(v) = memo.get(p) {
        return v.clone();
    }
    let mut out = LinComb::basis(p.clone());
    if p.height() > 1 {
        for k in Composition::all(p.height()) {
            if k.len() == p.height() {
                continue;
            }
            let lower = row_merge(p, &k).expect("heights agree");
            let sub = ms_in_phis(&lower, memo);
            out.add_scaled(&sub, &-inverse_k_factorial(&k));
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

impl MQElem {
    pub fn new(basis: MqBasis, terms: LinComb<PackedMat, Scalar>) -> Self {
        MQElem { basis, terms }
    }

    pub fn ms(p: &PackedMat) -> Self {
        Self::new(MqBasis::MS, LinComb::basis(p.clone()))
    }

    pub fn phis(p: &PackedMat) -> Self {
        Self::new(MqBasis::PhiS, LinComb::basis(p.clone()))
    }

    pub fn one() -> Self {
        Self::ms(&PackedMat::empty())
    }

    pub fn zero(basis: MqBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn basis(&self) -> MqBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<PackedMat, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.labels().map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    pub fn to_basis(&self, target: MqBasis) -> Self {
        let terms = match (self.basis, target) {
            (a, b) if a == b => self.terms.clone(),
            (MqBasis::PhiS, MqBasis::MS) => self.terms.map_linear(phis_in_ms),
            _ => {
                let mut memo = HashMap::new();
                let mut out = LinComb::zero();
                for (p, c) in self.terms.iter() {
                    out.add_scaled(&ms_in_phis(p, &mut memo), c);
                }
                out
            }
        };
        Self::new(target, terms)
    }

    pub fn to_ms(&self) -> Self {
        self.to_basis(MqBasis::MS)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.basis, self.terms.clone() + other.to_basis(self.basis).terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Product; computed in `MS` and returned in `ΦS` only when both
    /// operands are stored there.
    pub fn mul(&self, other: &Self) -> Self {
        let terms = self
            .to_ms()
            .terms
            .bilinear(&other.to_ms().terms, |p, q| augmented_shuffle(p, q).into_iter().map(|r| (r, Scalar::one())).collect());
        let p = Self::new(MqBasis::MS, terms);
        if self.basis == MqBasis::PhiS && other.basis == MqBasis::PhiS {
            p.to_basis(MqBasis::PhiS)
        } else {
            p
        }
    }

    /// Coproduct in `MS ⊗ MS`.
    pub fn coproduct(&self) -> MqTensor {
        let mut out = LinComb::zero();
        for (p, c) in self.to_ms().terms.iter() {
            for cut in row_cuts(p) {
                out.add_term(cut, c.clone());
            }
        }
        out
    }

    /// Counit: coefficient of the unit.
    pub fn counit(&self) -> Scalar {
        self.to_ms().terms.coeff(&PackedMat::empty())
    }

    /// `⟨MS_P, MS_Q⟩ = δ(P = ᵗQ)`.
    pub fn pair(&self, other: &Self) -> Scalar {
        let b = other.to_ms();
        self.to_ms().terms.iter().map(|(p, c)| c.clone() * b.terms.coeff(&p.transpose())).fold(Scalar::zero(), |a, x| a + x)
    }

    pub fn render(&self) -> String {
        let sym = self.basis.symbol();
        render_combination(&self.terms, |p| if p.height() == 0 { None } else { Some(format!("{sym}{p}")) })
    }
}

impl fmt::Display for MQElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Product of tensors componentwise.
pub fn tensor_mul(x: &MqTensor, y: &MqTensor) -> MqTensor {
    x.bilinear(y, |(a, b), (c, d)| {
        let left = augmented_shuffle(a, c);
        let right = augmented_shuffle(b, d);
        let mut out = LinComb::zero();
        for l in &left {
            for r in &right {
                out.add_term((l.clone(), r.clone()), Scalar::one());
            }
        }
        out
    })
}

/// `⟨x ⊗ y, t⟩`.
pub fn pair_tensor(x: &MQElem, y: &MQElem, t: &MqTensor) -> Scalar {
    let (x, y) = (x.to_ms(), y.to_ms());
    t.iter().map(|((a, b), c)| c.clone() * x.terms.coeff(&a.transpose()) * y.terms.coeff(&b.transpose())).fold(Scalar::zero(), |a, v| a + v)
}

/// `Ev(MS_P) = M_{Row(P)}`.
pub fn ev(x: &MQElem) -> QSymElem {
    QSymElem::new(QsBasis::M, x.to_ms().terms.map_basis(|p| p.row_composition()))
}

/// `ᵗEv(S^I) = Σ_{Col(P)=I} MS_P`.
pub fn t_ev(x: &NSymElem) -> Result<MQElem> {
    let s = x.to_basis(NsBasis::S);
    let mut out = LinComb::zero();
    let mut cache: HashMap<usize, Vec<PackedMat>> = HashMap::new();
    for (i, c) in s.terms().iter() {
        let d = i.weight();
        if d > MAX_PACKED_DEGREE {
            return Err(bound("packed matrices", MAX_PACKED_DEGREE));
        }
        for p in cache.entry(d).or_insert_with(|| PackedMat::all(d)).iter() {
            if p.col_composition() == *i {
                out.add_term(p.clone(), c.clone());
            }
        }
    }
    Ok(MQElem::new(MqBasis::MS, out))
}

/// Packed words of length `n` (surjections onto `[k]` for some `k`).
pub fn packed_words(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.len() == n {
            let k = w.iter().copied().max().unwrap_or(0);
            let mut seen = vec![false; k + 1];
            w.iter().for_each(|&x| seen[x] = true);
            if seen[1..].iter().all(|&s| s) {
                out.push(w.clone());
            }
            return;
        }
        for x in 1..=n {
            w.push(x);
            rec(n, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Unit-column matrix of a packed word: column `j` has its 1 in row `w_j`.
pub fn word_matrix(w: &[usize]) -> PackedMat {
    let k = w.iter().copied().max().unwrap_or(0);
    let rows: Vec<Vec<u32>> = (1..=k).map(|r| w.iter().map(|&x| u32::from(x == r)).collect()).collect();
    PackedMat::pack(&rows)
}

/// Image of `F_σ` under words-as-multiwords: the packed words standardizing
/// to `σ⁻¹`.
pub fn embed_fqsym(x: &FQElem) -> Result<MQElem> {
    let f = x.to_f()?;
    let mut words: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    let mut out = LinComb::zero();
    for (s, c) in f.terms().iter() {
        let n = s.size();
        if n > MAX_PACKED_DEGREE {
            return Err(bound("packed words", MAX_PACKED_DEGREE));
        }
        let inv = s.inverse();
        for w in words.entry(n).or_insert_with(|| packed_words(n)).iter() {
            if standardize_slice(w) == inv {
                out.add_term(word_matrix(w), c.clone());
            }
        }
    }
    Ok(MQElem::new(MqBasis::MS, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mqsym::packed;

    #[test]
    fn product_example() {
        let p = MQElem::ms(&packed(&[&[2, 1], &[1, 0]])).mul(&MQElem::ms(&packed(&[&[3, 1]])));
        let expected = [
            "[[2,1,0,0],[1,0,0,0],[0,0,3,1]]",
            "[[2,1,0,0],[1,0,3,1]]",
            "[[2,1,0,0],[0,0,3,1],[1,0,0,0]]",
            "[[2,1,3,1],[1,0,0,0]]",
            "[[0,0,3,1],[2,1,0,0],[1,0,0,0]]",
        ];
        let want: LinComb<PackedMat, Scalar> = expected.iter().map(|s| (s.parse().unwrap(), Scalar::one())).collect();
        assert_eq!(p.terms(), &want);
        let one = MQElem::ms(&packed(&[&[1]]));
        assert_eq!(one.mul(&one).to_string(), "MS[[0,1],[1,0]] + MS[[1,0],[0,1]] + MS[[1,1]]");
    }

    #[test]
    fn coproduct_example() {
        let m = packed(&[&[1, 0, 3], &[0, 2, 1], &[0, 0, 3], &[1, 0, 2]]);
        let d = MQElem::ms(&m).coproduct();
        let e = PackedMat::empty();
        let want: MqTensor = [
            (e.clone(), m.clone()),
            (packed(&[&[1, 3]]), packed(&[&[0, 2, 1], &[0, 0, 3], &[1, 0, 2]])),
            (packed(&[&[1, 0, 3], &[0, 2, 1]]), packed(&[&[0, 3], &[1, 2]])),
            (packed(&[&[1, 0, 3], &[0, 2, 1], &[0, 0, 3]]), packed(&[&[1, 2]])),
            (m.clone(), e),
        ]
        .into_iter()
        .map(|k| (k, Scalar::one()))
        .collect();
        assert_eq!(d, want);
    }

    #[test]
    fn row_merge_example() {
        let p = packed(&[&[1, 2, 0, 2], &[0, 1, 2, 1], &[1, 2, 0, 0], &[0, 3, 1, 5], &[1, 3, 1, 0]]);
        let k = Composition::new(vec![3, 2]).unwrap();
        assert_eq!(row_merge(&p, &k).unwrap(), packed(&[&[2, 5, 2, 3], &[1, 6, 2, 5]]));
        assert_eq!(row_merge(&p, &Composition::new(vec![1; 5]).unwrap()).unwrap(), p);
        assert!(row_merge(&p, &Composition::new(vec![2, 2]).unwrap()).is_err());
    }

    #[test]
    fn phis_round_trip() {
        for d in 0..=3 {
            for p in PackedMat::all(d) {
                let x = MQElem::phis(&p);
                let ms = x.to_ms();
                assert_eq!(ms.terms().coeff(&p), Scalar::one());
                assert!(ms.terms().labels().all(|r| r == &p || r.height() < p.height()));
                assert_eq!(ms.to_basis(MqBasis::PhiS), x);
            }
        }
    }
}
