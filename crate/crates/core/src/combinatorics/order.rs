use super::{Composition, Permutation};
use crate::error::{Error, Result};

/// Partial orders on a symmetric group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Bruhat,
    /// Generated by `σ < s_i σ` with length increasing (values swapped).
    LeftWeak,
    /// Generated by `σ < σ s_i` with length increasing (positions swapped).
    RightWeak,
}

/// Decides `σ ≤ τ`. The weak orders are decided by inclusion of inversion
/// sets (positions for the left order, values for the right order); Bruhat by
/// the rank-matrix criterion.
pub fn order_leq(s: &Permutation, t: &Permutation, which: Order) -> Result<bool> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    Ok(match which {
        Order::LeftWeak => subset(&s.position_inversions(), &t.position_inversions()),
        Order::RightWeak => subset(&s.value_inversions(), &t.value_inversions()),
        Order::Bruhat => bruhat_leq(s.as_slice(), t.as_slice()),
    })
}

fn subset(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    // both are produced in lexicographic order
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// `σ ≤ τ` iff `#{a ≤ i : σ(a) ≥ j} ≤ #{a ≤ i : τ(a) ≥ j}` for all `i, j`.
fn bruhat_leq(s: &[usize], t: &[usize]) -> bool {
    let n = s.len();
    let mut cs = vec![0usize; n + 2];
    let mut ct = vec![0usize; n + 2];
    for i in 0..n {
        for j in 1..=s[i] {
            cs[j] += 1;
        }
        for j in 1..=t[i] {
            ct[j] += 1;
        }
        if (1..=n).any(|j| cs[j] > ct[j]) {
            return false;
        }
    }
    true
}

/// `(α(I), ω(I))`: the minimal and maximal permutations with descent
/// composition `I`.
pub fn descent_class_bounds(i: &Composition) -> (Permutation, Permutation) {
    (alpha(i), omega(i))
}

/// Minimal element of the descent class: runs of the complementary
/// composition filled with decreasing consecutive values, runs increasing.
pub fn alpha(i: &Composition) -> Permutation {
    let n = i.weight();
    let des = i.descent_set();
    let comp: Vec<usize> = (1..n).filter(|d| !des.contains(d)).collect();
    let k = Composition::from_descents(n, &comp);
    let mut w = Vec::with_capacity(n);
    let mut base = 0;
    for &p in k.parts() {
        w.extend((base + 1..=base + p).rev());
        base += p;
    }
    Permutation::from_vec_unchecked(w)
}

/// Maximal element of the descent class: blocks of `I` filled with increasing
/// consecutive values, blocks decreasing.
pub fn omega(i: &Composition) -> Permutation {
    let n = i.weight();
    let mut w = Vec::with_capacity(n);
    let mut top = n;
    for &p in i.parts() {
        w.extend(top - p + 1..=top);
        top -= p;
    }
    Permutation::from_vec_unchecked(w)
}

/// `{σ : C(σ) = I}` in lexicographic order.
pub fn descent_class(i: &Composition) -> Vec<Permutation> {
    let des = i.descent_set();
    super::permutations(i.weight()).filter(|s| s.descents() == des).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{comp, perm, permutations};
    use std::collections::{BTreeSet, VecDeque};

    /// Up-set of `s` under the covers `σ → s_i σ` (or `σ s_i`) with length +1.
    fn weak_upset(s: &Permutation, left: bool) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::from([s.clone()]);
        let mut q = VecDeque::from([s.clone()]);
        while let Some(x) = q.pop_front() {
            for i in 1..x.size() {
                let y = if left { x.left_simple(i) } else { x.right_simple(i) };
                if y.length() == x.length() + 1 && seen.insert(y.clone()) {
                    q.push_back(y);
                }
            }
        }
        seen
    }

    /// Subword criterion: some reduced word of `t` contains a reduced word of `s`.
    fn bruhat_subword(s: &Permutation, t: &Permutation) -> bool {
        let n = t.size();
        let mut word = Vec::new();
        let mut x = t.clone();
        while let Some(i) = (1..n).find(|&i| x.as_slice()[i - 1] > x.as_slice()[i]) {
            word.push(i);
            x = x.right_simple(i);
        }
        word.reverse();
        // t = s_{word[0]} ... s_{word[k-1]} (as right products from the identity)
        let k = word.len();
        (0u32..(1 << k)).any(|mask| {
            let mut y = Permutation::identity(n);
            for (j, &g) in word.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    y = y.right_simple(g);
                }
            }
            y == *s
        })
    }

    #[test]
    fn weak_orders_match_cover_chains() {
        for n in 1..=4 {
            let all: Vec<_> = permutations(n).collect();
            for s in &all {
                let up_l = weak_upset(s, true);
                let up_r = weak_upset(s, false);
                for t in &all {
                    assert_eq!(order_leq(s, t, Order::LeftWeak).unwrap(), up_l.contains(t), "{s} {t}");
                    assert_eq!(order_leq(s, t, Order::RightWeak).unwrap(), up_r.contains(t), "{s} {t}");
                    assert_eq!(order_leq(s, t, Order::Bruhat).unwrap(), bruhat_subword(s, t), "{s} {t}");
                }
            }
        }
    }

    #[test]
    fn descent_classes_are_left_weak_intervals() {
        for n in 1..=6 {
            for i in Composition::all(n) {
                let (a, w) = descent_class_bounds(&i);
                let class: BTreeSet<_> = descent_class(&i).into_iter().collect();
                let interval: BTreeSet<_> = permutations(n)
                    .filter(|s| order_leq(&a, s, Order::LeftWeak).unwrap() && order_leq(s, &w, Order::LeftWeak).unwrap())
                    .collect();
                assert_eq!(class, interval, "{i}");
            }
        }
        assert_eq!(descent_class_bounds(&comp(&[2, 1])), (perm("132"), perm("231")));
        assert_eq!(descent_class_bounds(&comp(&[3])), (perm("123"), perm("123")));
        assert_eq!(descent_class_bounds(&comp(&[1, 1, 1])), (perm("321"), perm("321")));
    }
}
