use super::Permutation;
use crate::error::{parse_err, Error, Result};
use crate::exactalg::{int, LinComb, QPoly};
use std::fmt;
use std::str::FromStr;

/// Word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.contains(&0), "letters are positive");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every letter increased by `k`.
    pub fn shift(&self, k: usize) -> Self {
        Word(self.0.iter().map(|x| x + k).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend(&other.0);
        Word(w)
    }

    /// `u • v = u · v[|u|]`.
    pub fn shifted_concat(&self, other: &Self) -> Self {
        self.concat(&other.shift(self.len()))
    }

    /// Letter multiplicities indexed by letter (index 0 unused).
    pub fn evaluation(&self) -> Vec<usize> {
        let m = self.0.iter().copied().max().unwrap_or(0);
        let mut ev = vec![0; m + 1];
        for &x in &self.0 {
            ev[x] += 1;
        }
        ev
    }

    /// Nondecreasing rearrangement.
    pub fn sorted(&self) -> Self {
        let mut w = self.0.clone();
        w.sort_unstable();
        Word(w)
    }

    /// Interprets the word as a permutation when it is one.
    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::new(self.0.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "w:{}", parts.join("."))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix("w:").ok_or_else(|| parse_err(0, "words start with 'w:'"))?;
        if body.is_empty() {
            return Ok(Word::empty());
        }
        let letters = body
            .split('.')
            .enumerate()
            .map(|(i, t)| match t.parse::<usize>() {
                Ok(x) if x > 0 => Ok(x),
                _ => Err(parse_err(2 + i, format!("bad letter '{t}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

/// Standardization: occurrences of the smallest letter are numbered first,
/// left to right, then the next letter, and so on.
pub fn standardize(w: &Word) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(standardize_slice(w.letters()))
}

pub(crate) fn standardize_slice(w: &[usize]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation::from_vec_unchecked(out)
}

/// All interleavings of `u` and `v` with the exponent of `q` attached:
/// each letter taken from `v` costs the number of letters of `u` still pending.
pub fn shuffle_with_exponents(u: &[usize], v: &[usize]) -> Vec<(Vec<usize>, usize)> {
    fn rec(u: &[usize], v: &[usize], cur: &mut Vec<usize>, exp: usize, out: &mut Vec<(Vec<usize>, usize)>) {
        if u.is_empty() && v.is_empty() {
            out.push((cur.clone(), exp));
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            cur.push(a);
            rec(rest, v, cur, exp, out);
            cur.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            cur.push(b);
            rec(u, rest, cur, exp + u.len(), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(u, v, &mut Vec::with_capacity(u.len() + v.len()), 0, &mut out);
    out
}

/// `u ⧢_q v = a(u′ ⧢_q v) + q^{|u|} b(u ⧢_q v′)` with `u = a u′`, `v = b v′`.
pub fn q_shuffle(u: &Word, v: &Word) -> LinComb<Word, QPoly> {
    LinComb::from_terms(shuffle_with_exponents(u.letters(), v.letters()).into_iter().map(|(w, e)| (Word(w), QPoly::monomial(int(1), e))))
}

/// Classical shuffle with multiplicities (the `q = 1` specialization).
pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word, crate::exactalg::Scalar> {
    LinComb::from_terms(shuffle_with_exponents(u.letters(), v.letters()).into_iter().map(|(w, _)| (Word(w), int(1))))
}

/// Word literal helper (`"312"` style digits), panics on malformed input.
pub fn word(s: &str) -> Word {
    Word(s.chars().map(|c| c.to_digit(10).expect("digit") as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;

    #[test]
    fn standardization() {
        assert_eq!(standardize(&word("53")).unwrap(), perm("21"));
        assert_eq!(standardize(&word("412")).unwrap(), perm("312"));
        assert_eq!(standardize(&word("212")).unwrap(), perm("213"));
        assert_eq!(standardize(&word("1124")).unwrap(), perm("1234"));
        assert_eq!(standardize(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn q_shuffles() {
        let s = q_shuffle(&word("1"), &word("2"));
        assert_eq!(s.coeff(&word("12")), QPoly::from_ints(&[1]));
        assert_eq!(s.coeff(&word("21")), QPoly::from_ints(&[0, 1]));
        let t = q_shuffle(&word("12"), &word("3"));
        assert_eq!(t.len(), 3);
        assert_eq!(t.coeff(&word("132")), QPoly::from_ints(&[0, 1]));
        assert_eq!(t.coeff(&word("312")), QPoly::from_ints(&[0, 0, 1]));
        assert_eq!(q_shuffle(&word("12"), &Word::empty()), LinComb::basis(word("12")));
    }

    #[test]
    fn serialization() {
        let w: Word = "w:3.1.2".parse().unwrap();
        assert_eq!(w, word("312"));
        assert_eq!(w.to_string(), "w:3.1.2");
    }
}
