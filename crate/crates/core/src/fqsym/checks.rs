use super::{coproduct_f, pair_f, pair_tensor, product_f, tensor_product, FqTensor};
use crate::combinatorics::{permutations, Permutation};
use crate::error::{bound, Result};
use crate::exactalg::{LinComb, Scalar};
use crate::suite::{AxiomReport, Tally};
use num_traits::One;
use std::collections::HashMap;

/// Largest degree accepted by [`fqsym_axioms`].
pub const MAX_FQSYM_AXIOM_DEGREE: usize = 5;

type Elem = LinComb<Permutation, Scalar>;
type Triple = LinComb<(Permutation, Permutation, Permutation), Scalar>;

fn f(s: &Permutation) -> Elem {
    LinComb::basis(s.clone())
}

fn coassoc_sides(s: &Permutation) -> (Triple, Triple) {
    let mut left = Triple::zero();
    let mut right = Triple::zero();
    for ((a, b), c) in coproduct_f(&f(s)).iter() {
        for ((a1, a2), c1) in coproduct_f(&f(a)).iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c.clone() * c1);
        }
        for ((b1, b2), c2) in coproduct_f(&f(b)).iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c.clone() * c2);
        }
    }
    (left, right)
}

/// Antipode from `μ(S ⊗ id)Δ = ηε`, memoized on permutations.
struct Antipode(HashMap<Permutation, Elem>);

impl Antipode {
    fn of(&mut self, s: &Permutation) -> Elem {
        if let Some(x) = self.0.get(s) {
            return x.clone();
        }
        let out = if s.size() == 0 {
            f(s)
        } else {
            let mut acc = Elem::zero();
            for ((a, b), c) in coproduct_f(&f(s)).iter().filter(|((_, b), _)| b.size() > 0) {
                let sa = self.of(a);
                acc.add_scaled(&product_f(&sa, &f(b)), &-c.clone());
            }
            acc
        };
        self.0.insert(s.clone(), out.clone());
        out
    }
}

/// Bialgebra axioms, antipode, and self-duality of the pairing on `F_σ`
/// with `|σ| ≤ max_degree` (adjointness up to degree 4).
pub fn fqsym_axioms(max_degree: usize) -> Result<AxiomReport> {
    if max_degree > MAX_FQSYM_AXIOM_DEGREE {
        return Err(bound("FQSym axiom degree", MAX_FQSYM_AXIOM_DEGREE));
    }
    let d = max_degree;
    let perms: Vec<Permutation> = (1..=d).flat_map(permutations).collect();
    let pairs = || perms.iter().flat_map(|p| perms.iter().filter(move |q| p.size() + q.size() <= d).map(move |q| (p, q)));

    let mut assoc = Tally::new("associativity");
    for (p, q) in pairs() {
        let pq = product_f(&f(p), &f(q));
        for r in perms.iter().filter(|r| p.size() + q.size() + r.size() <= d) {
            assoc.record(product_f(&pq, &f(r)) == product_f(&f(p), &product_f(&f(q), &f(r))));
        }
    }

    let mut coassoc = Tally::new("coassociativity");
    let mut counit = Tally::new("counit");
    let mut antipode = Tally::new("antipode");
    let mut symmetric = Tally::new("pairing symmetry");
    let mut s_map = Antipode(HashMap::new());
    for p in &perms {
        let (l, r) = coassoc_sides(p);
        coassoc.record(l == r);
        let delta = coproduct_f(&f(p));
        let left: Elem = delta.iter().filter(|((a, _), _)| a.size() == 0).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: Elem = delta.iter().filter(|((_, b), _)| b.size() == 0).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        counit.record(left == f(p) && right == f(p));
        if p.size() <= 4 {
            // μ(id ⊗ S)Δ = 0 in positive degree
            let mut acc = Elem::zero();
            for ((a, b), c) in delta.iter() {
                acc.add_scaled(&product_f(&f(a), &s_map.of(b)), c);
            }
            antipode.record(acc.is_zero());
        }
        for q in perms.iter().filter(|q| q.size() == p.size()) {
            symmetric.record(pair_f(&f(p), &f(q)) == pair_f(&f(q), &f(p)));
        }
    }

    let mut compat = Tally::new("bialgebra compatibility");
    let mut adjoint = Tally::new("product-coproduct adjointness");
    let mut anti = Tally::new("antipode anti-morphism");
    for (p, q) in pairs() {
        let (x, y) = (f(p), f(q));
        let xy = product_f(&x, &y);
        let lhs: FqTensor<Scalar> = coproduct_f(&xy);
        compat.record(lhs == tensor_product(&coproduct_f(&x), &coproduct_f(&y)));
        if p.size() + q.size() <= 4 {
            for z in permutations(p.size() + q.size()) {
                adjoint.record(pair_f(&xy, &f(&z)) == pair_tensor(&x, &y, &coproduct_f(&f(&z))));
            }
            let mut s_xy = Elem::zero();
            for (s, c) in xy.iter() {
                s_xy.add_scaled(&s_map.of(s), c);
            }
            anti.record(s_xy == product_f(&s_map.of(q), &s_map.of(p)));
        }
    }

    let mut unit = Tally::new("unit");
    let e = Permutation::identity(0);
    for p in &perms {
        unit.record(product_f(&f(&e), &f(p)) == f(p) && product_f(&f(p), &f(&e)) == f(p));
        unit.record(pair_f(&f(p), &f(&p.inverse())) == Scalar::one());
    }

    Ok(AxiomReport {
        max_degree,
        checks: vec![
            assoc.done(),
            unit.done(),
            coassoc.done(),
            counit.done(),
            compat.done(),
            antipode.done(),
            anti.done(),
            symmetric.done(),
            adjoint.done(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_degree_four() {
        let r = fqsym_axioms(4).unwrap();
        for c in &r.checks {
            assert!(c.passed(), "{c:?}");
        }
        assert!(fqsym_axioms(6).is_err());
    }
}
