use super::{Partition, Permutation, Word};
use crate::error::{parse_err, Error, Result};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Young tableau in French convention: `rows[0]` is the bottom (longest) row.
/// Rows weakly increase left to right; columns strictly increase upwards.
/// Standard tableaux contain `1..n` exactly once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        if t.rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Invalid("empty tableau row".into()));
        }
        for (i, r) in t.rows.iter().enumerate() {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Invalid(format!("row {i} is not weakly increasing")));
            }
            if i > 0 {
                let below = &t.rows[i - 1];
                if r.len() > below.len() || r.iter().zip(below).any(|(a, b)| a <= b) {
                    return Err(Error::Invalid(format!("row {i} breaks column strictness or shape")));
                }
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("tableau shape is a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_standard(&self) -> bool {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Row reading: top row first, each row left to right.
    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Row index (0 = bottom) of the entry `x` in a standard tableau.
    fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&x))
    }

    /// Recoil set: `i` such that `i+1` lies in a strictly higher row than `i`.
    pub fn recoils(&self) -> Vec<usize> {
        let n = self.size();
        (1..n).filter(|&i| self.row_of(i + 1) > self.row_of(i)).collect()
    }

    /// All standard tableaux of a shape, in canonical order.
    pub fn standard_of_shape(shape: &Partition) -> Vec<Tableau> {
        let n = shape.weight();
        let lens = shape.parts().to_vec();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lens.len()];
        fn rec(k: usize, n: usize, lens: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
            if k > n {
                out.push(Tableau { rows: rows.clone() });
                return;
            }
            for i in 0..lens.len() {
                let ok = rows[i].len() < lens[i] && (i == 0 || rows[i - 1].len() > rows[i].len());
                if ok {
                    rows[i].push(k);
                    rec(k + 1, n, lens, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(1, n, &lens, &mut rows, &mut out);
        out.sort();
        out
    }

    /// Tableau whose columns are filled with consecutive integers, left to right,
    /// each column from bottom to top.
    pub fn column_superstandard(shape: &Partition) -> Tableau {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut k = 1;
        for h in shape.conjugate().parts() {
            for row in rows.iter_mut().take(*h) {
                row.push(k);
                k += 1;
            }
        }
        Tableau { rows }
    }

    /// Tableau whose rows are filled with consecutive integers, bottom row first.
    pub fn row_superstandard(shape: &Partition) -> Tableau {
        let mut k = 0;
        Tableau {
            rows: shape
                .parts()
                .iter()
                .map(|&l| {
                    let r: Vec<usize> = (k + 1..=k + l).collect();
                    k += l;
                    r
                })
                .collect(),
        }
    }

    /// Every entry increased by `k`.
    pub fn shift(&self, k: usize) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|x| x + k).collect()).collect() }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = super::parse_nested(s)?;
        Tableau::new(rows)
    }
}

/// Tableau literal helper (rows bottom first), panics on invalid input.
pub fn tableau(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("bad tableau literal")
}

/// Row insertion of `x` into `p`; returns the row index of the new cell.
fn insert(p: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (i, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(j) => x = std::mem::replace(&mut row[j], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Robinson–Schensted–Knuth row insertion: returns `(P, Q)`.
pub fn rsk(w: &Word) -> Result<(Tableau, Tableau)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(rsk_slice(w.letters()))
}

pub(crate) fn rsk_slice(w: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        let r = insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k + 1);
    }
    (Tableau { rows: p }, Tableau { rows: q })
}

/// Insertion tableau of a permutation.
pub fn insertion_tableau(s: &Permutation) -> Tableau {
    rsk_slice(s.as_slice()).0
}

/// Inverse of [`rsk`]: recovers the word from `(P, Q)`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Word> {
    if p.shape() != q.shape() || !q.is_standard() {
        return Err(Error::Invalid("P and Q must share a shape and Q must be standard".into()));
    }
    let mut p = p.rows.clone();
    let mut q = q.rows.clone();
    let n = q.iter().map(|r| r.len()).sum::<usize>();
    let mut out = vec![0; n];
    for k in (1..=n).rev() {
        let r = q.iter().position(|row| row.last() == Some(&k)).ok_or_else(|| Error::Invalid("Q is not standard".into()))?;
        q[r].pop();
        let mut x = p[r].pop().expect("shapes agree");
        for row in p[..r].iter_mut().rev() {
            let j = row.iter().rposition(|&y| y < x).expect("valid bumping path");
            x = std::mem::replace(&mut row[j], x);
        }
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        out[k - 1] = x;
    }
    Ok(Word::new(out))
}

/// Plactic class of a word: closure under `xzy ≡ zxy (x≤y<z)` and `yxz ≡ yzx (x<y≤z)`.
pub fn plactic_class(w: &Word) -> BTreeSet<Word> {
    closure(w, |v, out| {
        let l = v.len();
        for i in 0..l.saturating_sub(2) {
            let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
            // x z y <-> z x y with x ≤ y < z
            if a <= c && c < b {
                out.push(swap_at(v, i));
            }
            if b <= c && c < a {
                out.push(swap_at(v, i));
            }
            // y x z <-> y z x with x < y ≤ z
            if b < a && a <= c {
                out.push(swap_at(v, i + 1));
            }
            if c < a && a <= b {
                out.push(swap_at(v, i + 1));
            }
        }
    })
}

fn swap_at(v: &[usize], i: usize) -> Vec<usize> {
    let mut w = v.to_vec();
    w.swap(i, i + 1);
    w
}

/// Breadth-first closure of a word under a set of local moves.
pub(crate) fn closure(w: &Word, moves: impl Fn(&[usize], &mut Vec<Vec<usize>>)) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    let mut buf = Vec::new();
    while let Some(v) = queue.pop_front() {
        buf.clear();
        moves(v.letters(), &mut buf);
        for nw in buf.drain(..) {
            let nw = Word::new(nw);
            if seen.insert(nw.clone()) {
                queue.push_back(nw);
            }
        }
    }
    seen
}

/// Parses `[[1,2],[3]]`.
pub(crate) fn parse_nested(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    let inner = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| parse_err(0, "expected nested list"))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    let mut pos = 1;
    while !rest.is_empty() {
        let body = rest.strip_prefix('[').ok_or_else(|| parse_err(pos, "expected '['"))?;
        let end = body.find(']').ok_or_else(|| parse_err(pos, "missing ']'"))?;
        let row: Vec<usize> = if body[..end].trim().is_empty() {
            Vec::new()
        } else {
            body[..end]
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| parse_err(pos, format!("bad entry '{t}'"))))
                .collect::<Result<_>>()?
        };
        rows.push(row);
        pos += end + 2;
        rest = body[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            pos += 1;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{perm, word};

    #[test]
    fn reading_and_recoils() {
        let t = tableau(&[&[1, 2], &[3]]);
        assert_eq!(t.reading_word(), word("312"));
        assert_eq!(insertion_tableau(&perm("312")), t);
        assert_eq!(t.recoils(), vec![2]);
        assert_eq!(t.to_string(), "[[1,2],[3]]");
        assert_eq!("[[1,2],[3]]".parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn rsk_roundtrip_small() {
        for w in [word("3142"), word("2213"), word("1"), word("4321")] {
            let (p, q) = rsk(&w).unwrap();
            assert_eq!(inverse_rsk(&p, &q).unwrap(), w);
        }
    }

    #[test]
    fn plactic_class_of_reading_word() {
        let cls = plactic_class(&word("312"));
        let expect: BTreeSet<Word> = [word("312"), word("132")].into_iter().collect();
        assert_eq!(cls, expect);
    }

    #[test]
    fn superstandard() {
        let sh: Partition = "[3,2,1]".parse().unwrap();
        assert_eq!(Tableau::column_superstandard(&sh), tableau(&[&[1, 4, 6], &[2, 5], &[3]]));
        assert_eq!(Tableau::standard_of_shape(&sh).len(), 16);
    }
}
