//! Permutations, words, compositions, tableaux and the shuffle and
//! standardization calculus shared by every algebra in the crate.

mod bintree;
mod composition;
mod enumerate;
mod order;
mod permutation;
mod ribbon;
mod tableau;
mod word;

pub use bintree::{binary_tree_of, BinTree};
pub use composition::{comp, Composition, Partition};
pub use enumerate::{enumerate, permutations, words, Family, Item, MAX_PACKED_DEGREE, MAX_PERMUTATION_SIZE};
pub use order::{alpha, descent_class, descent_class_bounds, omega, order_leq, Order};
pub use permutation::{perm, Permutation};
pub use ribbon::{hypoplactic_class, hypoplactic_rsk, inverse_hypoplactic, QuasiRibbon};
pub(crate) use tableau::parse_nested;
pub use tableau::{insertion_tableau, inverse_rsk, plactic_class, rsk, tableau, Tableau};
pub(crate) use word::standardize_slice;
pub use word::{q_shuffle, shuffle, shuffle_with_exponents, standardize, word, Word};

use crate::error::{Error, Result};
use crate::exactalg::{QSeries, Scalar};
use num_bigint::BigInt;

/// Number of connected permutations of size `n`, by filtering `S_n`.
pub fn count_connected_by_filter(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Invalid("connected counts start at n = 1".into()));
    }
    if n > 10 {
        return Err(crate::error::bound("connected permutation filter", 10));
    }
    Ok(permutations(n).filter(|s| s.is_connected()).count() as u64)
}

/// Number of connected permutations of size `n`, from
/// `Σ c_n tⁿ = 1 − (Σ n! tⁿ)⁻¹`.
pub fn count_connected(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Invalid("connected counts start at n = 1".into()));
    }
    Ok(connected_counts(n).pop().expect("nonempty"))
}

/// `[c_1, …, c_n]` from the factorial series.
pub fn connected_counts(n: usize) -> Vec<BigInt> {
    let mut fact = vec![BigInt::from(1)];
    for k in 1..=n {
        let last = fact[k - 1].clone();
        fact.push(last * BigInt::from(k));
    }
    let series = QSeries::new(fact.into_iter().map(Scalar::from_integer).collect(), n + 1);
    let inv = series.inverse().expect("constant term is 1");
    (1..=n).map(|k| -inv.coeff(k).to_integer()).collect()
}
