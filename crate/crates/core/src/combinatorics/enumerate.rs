//! Exhaustive enumerations in frozen canonical orders.

use super::{Composition, Permutation, Word};
use crate::error::{bound, Result};
use crate::mqsym::PackedMat;
use itertools::Itertools;

/// Largest permutation size enumerated on request.
pub const MAX_PERMUTATION_SIZE: usize = 8;
/// Largest packed-matrix degree enumerated on request.
pub const MAX_PACKED_DEGREE: usize = 6;
/// Largest number of words enumerated on request.
pub const MAX_WORDS: usize = 1 << 20;

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Permutations(usize),
    Compositions(usize),
    PackedMatrices(usize),
    Words { len: usize, max_letter: usize },
}

/// One enumerated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Permutation(Permutation),
    Composition(Composition),
    PackedMatrix(PackedMat),
    Word(Word),
}

impl std::fmt::Display for Item {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Item::Permutation(x) => write!(f, "{x}"),
            Item::Composition(x) => write!(f, "{x}"),
            Item::PackedMatrix(x) => write!(f, "{x}"),
            Item::Word(x) => write!(f, "{x}"),
        }
    }
}

/// Every permutation of size `n`, lexicographic on one-line words. Unbounded;
/// callers outside the crate go through [`enumerate`].
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(Permutation::from_vec_unchecked)
}

/// Every word of length `len` over `1..=max_letter`, lexicographic.
pub fn words(len: usize, max_letter: usize) -> impl Iterator<Item = Word> {
    (0..len).map(|_| 1..=max_letter).multi_cartesian_product().map(Word::new)
}

/// Bounded enumeration, collected eagerly.
pub fn enumerate(kind: Family) -> Result<Vec<Item>> {
    match kind {
        Family::Permutations(n) => {
            if n > MAX_PERMUTATION_SIZE {
                return Err(bound("permutations", MAX_PERMUTATION_SIZE));
            }
            Ok(permutations(n).map(Item::Permutation).collect())
        }
        Family::Compositions(n) => {
            if n > 20 {
                return Err(bound("compositions", 20));
            }
            Ok(Composition::all(n).into_iter().map(Item::Composition).collect())
        }
        Family::PackedMatrices(d) => {
            if d > MAX_PACKED_DEGREE {
                return Err(bound("packed matrices", MAX_PACKED_DEGREE));
            }
            Ok(PackedMat::all(d).into_iter().map(Item::PackedMatrix).collect())
        }
        Family::Words { len, max_letter } => {
            let count = (max_letter as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
            if count > MAX_WORDS as u128 {
                return Err(bound("words", MAX_WORDS));
            }
            Ok(words(len, max_letter).map(Item::Word).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_bounds() {
        assert_eq!(enumerate(Family::Permutations(3)).unwrap().len(), 6);
        assert_eq!(enumerate(Family::Compositions(4)).unwrap().len(), 8);
        assert_eq!(enumerate(Family::PackedMatrices(2)).unwrap().len(), 5);
        assert_eq!(enumerate(Family::Words { len: 3, max_letter: 2 }).unwrap().len(), 8);
        assert_eq!(enumerate(Family::Words { len: 0, max_letter: 2 }).unwrap().len(), 1);
        assert!(enumerate(Family::Permutations(9)).is_err());
        assert!(enumerate(Family::PackedMatrices(7)).is_err());
        let p: Vec<String> = permutations(3).map(|s| s.to_string()).collect();
        assert_eq!(p, ["123", "132", "213", "231", "312", "321"]);
    }
}
