use super::tableau::closure;
use super::{plactic_class, standardize, Composition, Permutation, Word};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Ribbon filling of a composition shape. `rows[k]` is the `k`-th row from the
/// top; the first cell of each row sits directly below the last cell of the
/// previous one. Rows weakly increase, columns strictly increase downwards.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiRibbon {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl QuasiRibbon {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Invalid("empty ribbon row".into()));
        }
        for r in &rows {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Invalid("ribbon rows must weakly increase".into()));
            }
        }
        for w in rows.windows(2) {
            if w[0].last() >= w[1].first() {
                return Err(Error::Invalid("ribbon columns must strictly increase".into()));
            }
        }
        let shape = Composition::new(rows.iter().map(|r| r.len()).collect())?;
        Ok(QuasiRibbon { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Reading by columns, each from bottom to top, columns left to right.
    pub fn column_reading(&self) -> Word {
        let mut out = Vec::new();
        // The shared column of rows k and k+1 holds last(row k) above first(row k+1).
        let mut pending: Option<usize> = None;
        for (k, row) in self.rows.iter().enumerate() {
            let last = row.len() - 1;
            for (j, &x) in row.iter().enumerate() {
                if j == 0 {
                    if let Some(above) = pending.take() {
                        out.push(x);
                        out.push(above);
                        continue;
                    }
                }
                if j == last && k + 1 < self.rows.len() {
                    pending = Some(x);
                } else {
                    out.push(x);
                }
            }
        }
        Word::new(out)
    }

    fn from_word_rows(sorted: &[usize], shape: &Composition) -> Self {
        let mut rows = Vec::new();
        let mut k = 0;
        for &p in shape.parts() {
            rows.push(sorted[k..k + p].to_vec());
            k += p;
        }
        QuasiRibbon { shape: shape.clone(), rows }
    }
}

impl fmt::Display for QuasiRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).map(|s| format!("[{s}]")).collect();
        write!(f, "{}:{}", self.shape, rows.join(""))
    }
}

impl fmt::Debug for QuasiRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Hypoplactic correspondence `w ↦ (Q(w), R(w))`. `Q(w)` fills the shape
/// `C(Std(w)⁻¹)` with the sorted letters of `w`; `R(w)` is `Std(w)⁻¹` cut into
/// the rows of the same shape.
pub fn hypoplactic_rsk(w: &Word) -> Result<(QuasiRibbon, QuasiRibbon)> {
    let std = standardize(w)?;
    let inv = std.inverse();
    let shape = inv.descent_composition();
    let sorted = w.sorted();
    Ok((QuasiRibbon::from_word_rows(sorted.letters(), &shape), QuasiRibbon::from_word_rows(inv.as_slice(), &shape)))
}

/// Inverse of [`hypoplactic_rsk`].
pub fn inverse_hypoplactic(q: &QuasiRibbon, r: &QuasiRibbon) -> Result<Word> {
    if q.shape != r.shape {
        return Err(Error::Invalid("Q and R must share a shape".into()));
    }
    let sorted: Vec<usize> = q.rows.iter().flatten().copied().collect();
    let sigma = Permutation::new(r.rows.iter().flatten().copied().collect())?;
    // w ∘ σ = sorted, so w(i) = sorted(σ⁻¹(i)).
    let inv = sigma.inverse();
    Ok(Word::new(inv.as_slice().iter().map(|&j| sorted[j - 1]).collect()))
}

/// Hypoplactic class by closing under the plactic and quartic relations.
pub fn hypoplactic_class(w: &Word) -> BTreeSet<Word> {
    closure(w, |v, out| {
        for p in plactic_class(&Word::new(v.to_vec())) {
            if p.letters() != v {
                out.push(p.letters().to_vec());
            }
        }
        let l = v.len();
        for i in 0..l.saturating_sub(3) {
            let f = [v[i], v[i + 1], v[i + 2], v[i + 3]];
            for g in quartic_moves(f) {
                let mut nw = v.to_vec();
                nw[i..i + 4].copy_from_slice(&g);
                out.push(nw);
            }
        }
    })
}

/// Images of a length-4 factor under the quartic relations (both directions).
fn quartic_moves(f: [usize; 4]) -> Vec<[usize; 4]> {
    let [w, x, y, z] = f;
    let mut out = Vec::new();
    // baba ≡ abab, a < b
    if w == y && x == z && w != x {
        out.push([x, w, x, w]);
    }
    // baca ≡ abac, a < b < c
    if x == z && x < w && w < y {
        out.push([x, w, x, y]);
    }
    if w == y && w < x && x < z {
        out.push([x, w, z, w]);
    }
    // cacb ≡ acbc, a < b < c
    if w == y && x < z && z < w {
        out.push([x, w, z, w]);
    }
    if x == z && w < y && y < x {
        out.push([x, w, x, y]);
    }
    // cbab ≡ bacb, a < b < c
    if x == z && y < x && x < w {
        out.push([x, y, w, x]);
    }
    if w == z && x < w && w < y {
        out.push([y, w, x, w]);
    }
    // badc ≡ dbca, a < b < c < d
    if x < w && w < z && z < y {
        out.push([y, w, z, x]);
    }
    if z < x && x < y && y < w {
        out.push([x, z, w, y]);
    }
    // acbd ≡ cdab, a < b < c < d
    if w < y && y < x && x < z {
        out.push([x, z, w, y]);
    }
    if y < z && z < w && w < x {
        out.push([y, w, z, x]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::word;

    #[test]
    fn quartic_and_plactic_examples() {
        let q = |s: &str| hypoplactic_rsk(&word(s)).unwrap().0;
        assert_eq!(q("2121"), q("1212"));
        assert_eq!(q("132"), q("312"));
        assert_ne!(q("12"), q("21"));
    }

    #[test]
    fn roundtrip() {
        for s in ["2121", "3112", "4213", "1"] {
            let w = word(s);
            let (q, r) = hypoplactic_rsk(&w).unwrap();
            assert_eq!(inverse_hypoplactic(&q, &r).unwrap(), w);
        }
    }
}
