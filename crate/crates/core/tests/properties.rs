use combhopf::combinatorics::{
    descent_class_bounds, hypoplactic_rsk, inverse_hypoplactic, inverse_rsk, order_leq, q_shuffle, rsk, standardize, Composition, Order,
    Permutation, Word,
};
use combhopf::exactalg::{LinComb, Scalar};
use combhopf::fqsym::{coproduct_f, product_f, tensor_product};
use combhopf::hecke0::HeckeElem;
use combhopf::mqsym::PackedMat;
use combhopf::posets::all_posets;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1usize..=4, 1..8).prop_map(Word::new)
}

fn f(s: &Permutation) -> LinComb<Permutation, Scalar> {
    LinComb::basis(s.clone())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[test]
fn empty_word_is_rejected() {
    assert!(standardize(&Word::empty()).is_err());
    assert!(rsk(&Word::empty()).is_err());
    assert!(hypoplactic_rsk(&Word::empty()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rsk_is_a_bijection(w in word()) {
        let (p, q) = rsk(&w).unwrap();
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(inverse_rsk(&p, &q).unwrap(), w);
    }

    #[test]
    fn hypoplactic_insertion_is_a_bijection(w in word()) {
        let (q, r) = hypoplactic_rsk(&w).unwrap();
        prop_assert_eq!(inverse_hypoplactic(&q, &r).unwrap(), w);
    }

    #[test]
    fn standardization_breaks_ties_left_to_right(w in word()) {
        let s = standardize(&w).unwrap();
        let (a, b) = (w.letters(), s.as_slice());
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                prop_assert_eq!(a[i] <= a[j], b[i] < b[j]);
            }
        }
    }

    #[test]
    fn permutation_text_round_trips(s in permutation(7)) {
        prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
    }

    #[test]
    fn inverse_and_length(s in permutation(6)) {
        prop_assert_eq!(s.compose(&s.inverse()), Permutation::identity(s.size()));
        prop_assert_eq!(s.length(), s.inverse().length());
        prop_assert_eq!(s.descent_composition().weight(), s.size());
    }

    #[test]
    fn connected_factors_reassemble(s in permutation(7)) {
        let factors = s.connected_factorization();
        prop_assert!(factors.iter().all(Permutation::is_connected));
        let back = factors.iter().fold(Permutation::identity(0), |acc, p| acc.shifted_concat(p));
        prop_assert_eq!(back, s);
    }

    #[test]
    fn descent_class_lies_in_its_weak_interval(s in permutation(6)) {
        let c = s.descent_composition();
        let (lo, hi) = descent_class_bounds(&c);
        prop_assert_eq!(lo.descent_composition(), c.clone());
        prop_assert_eq!(hi.descent_composition(), c);
        prop_assert!(order_leq(&lo, &s, Order::LeftWeak).unwrap());
        prop_assert!(order_leq(&s, &hi, Order::LeftWeak).unwrap());
    }

    #[test]
    fn composition_descent_set_round_trips(parts in prop::collection::vec(1usize..4, 0..5)) {
        let c = Composition::new(parts).unwrap();
        prop_assert_eq!(Composition::from_descents(c.weight(), &c.descent_set()), c);
    }

    #[test]
    fn classical_shuffle_mass_is_binomial(u in word(), v in word()) {
        let total = q_shuffle(&u, &v).iter().fold(Scalar::from_integer(0.into()), |acc, (_, c)| acc + c.eval(&Scalar::one()));
        prop_assert_eq!(total, Scalar::from_integer(binomial(u.len() + v.len(), u.len())));
    }

    #[test]
    fn fqsym_product_is_associative(a in permutation(3), b in permutation(3), c in permutation(2)) {
        let left = product_f(&product_f(&f(&a), &f(&b)), &f(&c));
        let right = product_f(&f(&a), &product_f(&f(&b), &f(&c)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn fqsym_coproduct_is_multiplicative(a in permutation(3), b in permutation(3)) {
        let left = coproduct_f(&product_f(&f(&a), &f(&b)));
        let right = tensor_product(&coproduct_f(&f(&a)), &coproduct_f(&f(&b)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hecke_product_is_associative(a in Just((1..=4).collect::<Vec<usize>>()).prop_shuffle(),
                                    b in Just((1..=4).collect::<Vec<usize>>()).prop_shuffle(),
                                    c in Just((1..=4).collect::<Vec<usize>>()).prop_shuffle()) {
        let t = |v: Vec<usize>| HeckeElem::t_basis(&Permutation::new(v).unwrap());
        let (x, y, z) = (t(a), t(b), t(c));
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn packed_matrix_text_round_trips(d in 0usize..4, i in any::<prop::sample::Index>()) {
        let all = PackedMat::all(d);
        let p = &all[i.index(all.len())];
        prop_assert_eq!(&p.to_string().parse::<PackedMat>().unwrap(), p);
        prop_assert_eq!(&p.transpose().transpose(), p);
    }

    #[test]
    fn disjoint_sum_extensions_count(m in 1usize..4, n in 1usize..3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (ps, qs) = (all_posets(m).unwrap(), all_posets(n).unwrap());
        let (p, q) = (&ps[i.index(ps.len())], &qs[j.index(qs.len())]);
        let e = |x: &combhopf::posets::Poset| BigInt::from(x.linear_extensions().unwrap().len());
        let sum = p.disjoint_sum(q);
        prop_assert_eq!(e(&sum), binomial(m + n, m) * e(p) * e(q));
    }
}
