use crate::error::{parse_err, Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Composition: sequence of positive parts. Ordered lexicographically on parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `i₁, i₁+i₂, …` excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Composition of `n` with the given descent set (entries in `1..n`).
    pub fn from_descents(n: usize, descents: &[usize]) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut d: Vec<usize> = descents.iter().copied().filter(|&x| x > 0 && x < n).collect();
        d.sort_unstable();
        d.dedup();
        let mut parts = Vec::with_capacity(d.len() + 1);
        let mut prev = 0;
        for x in d {
            parts.push(x - prev);
            prev = x;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Mirror image `Ī`: parts reversed.
    pub fn mirror(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Complement: descent set replaced by its complement in `1..n`.
    pub fn complement(&self) -> Self {
        let n = self.weight();
        let d = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|i| !d.contains(i)).collect();
        Self::from_descents(n, &comp)
    }

    /// Conjugate `I~`: mirror of the complement.
    pub fn conjugate(&self) -> Self {
        self.complement().mirror()
    }

    /// True when `self` is finer than or equal to `other` (`Des(self) ⊇ Des(other)`).
    pub fn refines(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine = self.descent_set();
        other.descent_set().iter().all(|d| mine.contains(d))
    }

    /// `I ∨ J`: composition with descent set `Des(I) ∪ Des(J)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.weight() != other.weight() {
            return Err(Error::SizeMismatch(self.weight(), other.weight()));
        }
        let mut d = self.descent_set();
        d.extend(other.descent_set());
        Ok(Self::from_descents(self.weight(), &d))
    }

    /// Concatenation `I·J`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut p = self.0.clone();
        p.extend(&other.0);
        Composition(p)
    }

    /// Glueing `I ▷ J`: last part of `I` merged with the first part of `J`.
    pub fn glue(&self, other: &Self) -> Self {
        match (self.0.split_last(), other.0.split_first()) {
            (Some((last, init)), Some((first, rest))) => {
                let mut p = init.to_vec();
                p.push(last + first);
                p.extend(rest);
                Composition(p)
            }
            _ => self.concat(other),
        }
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = (0u64..(1 << (n - 1)))
            .map(|mask| {
                let d: Vec<usize> = (1..n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                Self::from_descents(n, &d)
            })
            .collect();
        out.sort();
        out
    }

    /// Sorted parts, as a partition.
    pub fn sorted_partition(&self) -> Partition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_list(s: &str, open: char, close: char) -> Result<Vec<usize>> {
    let s = s.trim();
    let inner =
        s.strip_prefix(open).and_then(|x| x.strip_suffix(close)).ok_or_else(|| parse_err(0, format!("expected {open}...{close}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').enumerate().map(|(i, t)| t.trim().parse::<usize>().map_err(|_| parse_err(i, format!("bad part '{t}'")))).collect()
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_list(s, '(', ')')?)
    }
}

/// Composition literal helper, panics on malformed input.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("bad composition literal")
}

/// Integer partition (weakly decreasing positive parts).
///
/// Ordered by weight, then reverse lexicographically, so `[4] < [3,1] < [2,2]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Self {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// All partitions of `n`, largest first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the centralizer `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.0[i..].iter().take_while(|&&x| x == p).count();
            for k in 1..=m as u64 {
                z *= k * p as u64;
            }
            i += m;
        }
        z
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s, '[', ']')?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_sets() {
        let c = comp(&[2, 1, 3]);
        assert_eq!(c.descent_set(), vec![2, 3]);
        assert_eq!(Composition::from_descents(6, &[2, 3]), c);
        assert_eq!(c.mirror(), comp(&[3, 1, 2]));
        assert_eq!(comp(&[2, 1]).conjugate(), comp(&[2, 1]));
        assert_eq!(comp(&[1, 1, 2]).conjugate(), comp(&[1, 3]));
        assert_eq!(comp(&[1, 1, 1]).conjugate(), comp(&[3]));
        assert_eq!(comp(&[1, 2]).glue(&comp(&[3])), comp(&[1, 5]));
        assert_eq!(Composition::all(4).len(), 8);
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!("[3,1]".parse::<Partition>().unwrap().conjugate().to_string(), "[2,1,1]");
        assert_eq!("[2,1]".parse::<Partition>().unwrap().z(), 2);
        assert_eq!("[1,1,1]".parse::<Partition>().unwrap().z(), 6);
    }
}
