use super::{Composition, Word};
use crate::error::{parse_err, Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Permutation of `{1..n}` in one-line notation.
///
/// Products compose right to left: `(σ·τ)(i) = σ(τ(i))`. Left multiplication
/// by `s_i` exchanges the values `i` and `i+1`; right multiplication exchanges
/// the positions `i` and `i+1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    /// Caller guarantees the word is a permutation.
    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n n−1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn to_word(&self) -> Word {
        Word::new(self.0.clone())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Positions `i` with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descents(self.size(), &self.descents())
    }

    /// Major index: sum of descents.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// `s_i · σ`: exchanges the values `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Self {
        Permutation(
            self.0
                .iter()
                .map(|&x| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// `σ · s_i`: exchanges the positions `i` and `i+1`.
    pub fn right_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// True when `s_i σ` is shorter than `σ` (value `i+1` precedes `i`).
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// Shifted concatenation `σ • τ = σ · τ[|σ|]`.
    pub fn shifted_concat(&self, other: &Self) -> Self {
        let k = self.size();
        let mut w = self.0.clone();
        w.extend(other.0.iter().map(|&x| x + k));
        Permutation(w)
    }

    /// True when no proper prefix `σ([1,k])` equals `[1,k]`.
    pub fn is_connected(&self) -> bool {
        self.size() > 0 && self.cut_points().is_empty()
    }

    /// Proper prefix lengths `k` with `σ([1,k]) = [1,k]`.
    fn cut_points(&self) -> Vec<usize> {
        let mut max = 0;
        let mut cuts = Vec::new();
        for (i, &x) in self.0.iter().enumerate() {
            max = max.max(x);
            if max == i + 1 && i + 1 < self.size() {
                cuts.push(i + 1);
            }
        }
        cuts
    }

    /// Unique maximal factorization `σ = σ₁ • ⋯ • σ_r` into connected permutations.
    pub fn connected_factorization(&self) -> Vec<Permutation> {
        let mut bounds = vec![0];
        bounds.extend(self.cut_points());
        bounds.push(self.size());
        bounds.windows(2).filter(|w| w[1] > w[0]).map(|w| Permutation(self.0[w[0]..w[1]].iter().map(|&x| x - w[0]).collect())).collect()
    }

    /// Positions-inversion set `{(i,j) : i<j, σ(i)>σ(j)}`.
    pub fn position_inversions(&self) -> Vec<(usize, usize)> {
        let w = &self.0;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Value-inversion set `{(a,b) : a<b, b placed before a}`.
    pub fn value_inversions(&self) -> Vec<(usize, usize)> {
        self.inverse().position_inversions()
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic: by size, then by one-line word.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.0.is_empty() && self.0.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| parse_err(s.len(), "missing ']'"))?;
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .enumerate()
                    .map(|(i, t)| t.trim().parse::<usize>().map_err(|_| parse_err(i, format!("bad entry '{t}'"))))
                    .collect::<Result<_>>()?
            }
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err(i, format!("bad digit '{c}'"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// Parses a permutation literal, panicking on malformed input. Test and example helper.
pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap_or_else(|e| panic!("bad permutation literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s = perm("312");
        assert_eq!(s.inverse(), perm("231"));
        assert_eq!(s.length(), 2);
        assert_eq!(s.descent_composition().parts(), &[1, 2]);
        assert_eq!(perm("21").shifted_concat(&perm("21")), perm("2143"));
        assert_eq!(perm("[3,1,2]"), s);
        assert_eq!(perm("132").left_simple(1), perm("231"));
    }

    #[test]
    fn factorization() {
        assert_eq!(perm("2143").connected_factorization(), vec![perm("21"), perm("21")]);
        assert_eq!(perm("312").connected_factorization(), vec![perm("312")]);
        assert_eq!(perm("123").connected_factorization(), vec![perm("1"); 3]);
    }
}
