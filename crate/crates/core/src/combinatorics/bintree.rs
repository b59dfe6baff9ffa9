use super::Permutation;
use crate::error::{parse_err, Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Planar binary tree. Size counts internal nodes, so trees of size `n` are
/// in bijection with posets built from the one-node poset by grafting, and
/// `Node(Leaf, Leaf)` is that one-node tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinTree {
    Leaf,
    Node(Arc<BinTree>, Arc<BinTree>),
}

impl BinTree {
    /// The tree with a single internal node.
    pub fn single() -> Self {
        BinTree::Leaf.graft(&BinTree::Leaf)
    }

    /// `T₁ ∧ T₂`: new root with `T₁` on the left and `T₂` on the right.
    pub fn graft(&self, right: &BinTree) -> Self {
        BinTree::Node(Arc::new(self.clone()), Arc::new(right.clone()))
    }

    pub fn size(&self) -> usize {
        match self {
            BinTree::Leaf => 0,
            BinTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn children(&self) -> Option<(&BinTree, &BinTree)> {
        match self {
            BinTree::Leaf => None,
            BinTree::Node(l, r) => Some((l, r)),
        }
    }

    /// All trees with `n` internal nodes, in canonical order.
    pub fn all(n: usize) -> Vec<BinTree> {
        let mut table: Vec<Vec<BinTree>> = vec![vec![BinTree::Leaf]];
        for k in 1..=n {
            let mut level = Vec::new();
            for i in 0..k {
                for l in &table[i] {
                    for r in &table[k - 1 - i] {
                        level.push(l.graft(r));
                    }
                }
            }
            level.sort();
            table.push(level);
        }
        table.swap_remove(n)
    }
}

impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinTree::Leaf => write!(f, "."),
            BinTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BinTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        fn parse(b: &[char], pos: &mut usize) -> Result<BinTree> {
            match b.get(*pos) {
                Some('.') => {
                    *pos += 1;
                    Ok(BinTree::Leaf)
                }
                Some('(') => {
                    *pos += 1;
                    let l = parse(b, pos)?;
                    if b.get(*pos) != Some(&',') {
                        return Err(parse_err(*pos, "expected ','"));
                    }
                    *pos += 1;
                    let r = parse(b, pos)?;
                    if b.get(*pos) != Some(&')') {
                        return Err(parse_err(*pos, "expected ')'"));
                    }
                    *pos += 1;
                    Ok(l.graft(&r))
                }
                _ => Err(parse_err(*pos, "expected '.' or '('")),
            }
        }
        let t = parse(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(parse_err(pos, "trailing input"));
        }
        Ok(t)
    }
}

/// Underlying binary tree: split `σ = u n v` around its maximum and recurse on
/// the standardized factors; the empty permutation gives the empty tree.
pub fn binary_tree_of(s: &Permutation) -> BinTree {
    fn rec(w: &[usize]) -> BinTree {
        match w.iter().enumerate().max_by_key(|(_, &x)| x) {
            None => BinTree::Leaf,
            Some((i, _)) => rec(&w[..i]).graft(&rec(&w[i + 1..])),
        }
    }
    // Splitting around the maximum commutes with standardization of the factors.
    rec(s.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm;
    use std::collections::BTreeSet;

    #[test]
    fn catalan_and_parsing() {
        let trees: BTreeSet<BinTree> = ["123", "132", "213", "231", "312", "321"].iter().map(|s| binary_tree_of(&perm(s))).collect();
        assert_eq!(trees.len(), 5);
        assert_eq!(BinTree::all(4).len(), 14);
        assert_eq!(binary_tree_of(&perm("1")), BinTree::single());
        let t: BinTree = "((.,.),.)".parse().unwrap();
        assert_eq!(t.size(), 2);
        assert_eq!(t.to_string(), "((.,.),.)");
        assert_ne!(binary_tree_of(&perm("213")), binary_tree_of(&perm("231")));
    }
}
