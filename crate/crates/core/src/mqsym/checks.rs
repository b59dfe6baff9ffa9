use super::{embed_fqsym, ev, pair_tensor, t_ev, tensor_mul, MQElem, MqTensor, PackedMat};
use crate::combinatorics::{permutations, Composition, Permutation};
use crate::error::{bound, Result};
use crate::exactalg::{LinComb, Scalar};
use crate::fqsym::FQElem;
use crate::suite::{AxiomReport, Tally};
use crate::symfam::{commutative_image, NSymElem, QsBasis};
use num_traits::{One, Zero};

/// Largest degree accepted by [`mqsym_axioms`].
pub const MAX_AXIOM_DEGREE: usize = 4;

fn nonempty_upto(d: usize) -> Vec<Vec<PackedMat>> {
    (0..=d).map(|k| if k == 0 { Vec::new() } else { PackedMat::all(k) }).collect()
}

type Triple = LinComb<(PackedMat, PackedMat, PackedMat), Scalar>;

fn coassoc_sides(x: &MQElem) -> (Triple, Triple) {
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in x.coproduct().iter() {
        for ((a1, a2), c1) in MQElem::ms(a).coproduct().iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c.clone() * c1);
        }
        for ((b1, b2), c2) in MQElem::ms(b).coproduct().iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c.clone() * c2);
        }
    }
    (left, right)
}

fn tensor_of(x: &MQElem, y: &MQElem) -> MqTensor {
    x.to_ms().terms().bilinear(y.to_ms().terms(), |a, b| LinComb::basis((a.clone(), b.clone())))
}

/// Bialgebra axioms, self-duality and the morphisms to QSym, from NSym and
/// from FQSym, checked on basis elements up to `max_degree`.
pub fn mqsym_axioms(max_degree: usize) -> Result<AxiomReport> {
    if max_degree > MAX_AXIOM_DEGREE {
        return Err(bound("MQSym axiom degree", MAX_AXIOM_DEGREE));
    }
    let d = max_degree;
    let mats = nonempty_upto(d);
    let all: Vec<&PackedMat> = mats.iter().flatten().collect();
    let pairs = || all.iter().flat_map(|&p| all.iter().filter(move |q| p.degree() + q.degree() <= d).map(move |&q| (p, q)));

    let mut assoc = Tally::new("associativity");
    for (p, q) in pairs() {
        let pq = MQElem::ms(p).mul(&MQElem::ms(q));
        for r in all.iter().filter(|r| p.degree() + q.degree() + r.degree() <= d) {
            let r = MQElem::ms(r);
            assoc.record(pq.mul(&r) == MQElem::ms(p).mul(&MQElem::ms(q).mul(&r)));
        }
    }

    let mut coassoc = Tally::new("coassociativity");
    let mut counit = Tally::new("counit");
    let mut dual = Tally::new("self-duality");
    for p in &all {
        let x = MQElem::ms(p);
        let (l, r) = coassoc_sides(&x);
        coassoc.record(l == r);
        // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
        let delta = x.coproduct();
        let left: LinComb<PackedMat, Scalar> =
            delta.iter().filter(|((a, _), _)| a.height() == 0).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: LinComb<PackedMat, Scalar> =
            delta.iter().filter(|((_, b), _)| b.height() == 0).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        counit.record(&left == x.terms() && &right == x.terms());
        if p.degree() <= 3 {
            dual.record(x.pair(&MQElem::ms(&p.transpose())) == Scalar::one());
        }
    }

    let mut compat = Tally::new("bialgebra compatibility");
    let mut adjoint = Tally::new("product-coproduct adjointness");
    let mut ev_alg = Tally::new("Ev algebra morphism");
    for (p, q) in pairs() {
        let (x, y) = (MQElem::ms(p), MQElem::ms(q));
        let xy = x.mul(&y);
        compat.record(xy.coproduct() == tensor_mul(&x.coproduct(), &y.coproduct()));
        ev_alg.record(ev(&xy).to_basis(QsBasis::M) == ev(&x).product(&ev(&y)).to_basis(QsBasis::M));
        if p.degree() + q.degree() <= 3 {
            for z in &mats[p.degree() + q.degree()] {
                let z = MQElem::ms(z);
                adjoint.record(pair_tensor(&x, &y, &z.coproduct()) == xy.pair(&z));
            }
        }
    }

    let comps: Vec<Composition> = (1..=d).flat_map(Composition::all).collect();
    let mut tev_alg = Tally::new("tEv algebra morphism");
    for i in &comps {
        for j in comps.iter().filter(|j| i.weight() + j.weight() <= d) {
            let lhs = t_ev(&NSymElem::s(i).product(&NSymElem::s(j)))?;
            let rhs = t_ev(&NSymElem::s(i))?.mul(&t_ev(&NSymElem::s(j))?);
            tev_alg.record(lhs == rhs);
        }
    }
    let mut ev_adj = Tally::new("Ev and tEv adjoint");
    for i in comps.iter().filter(|i| i.weight() <= 3) {
        let image = t_ev(&NSymElem::s(i))?;
        for p in &mats[i.weight()] {
            let x = MQElem::ms(p);
            // ⟨S^I, M_J⟩ = δ(I = J)
            let rhs = ev(&x).terms().coeff(i);
            adjoint_record(&mut ev_adj, image.pair(&x), rhs);
        }
    }

    let perms: Vec<Permutation> = (1..=d).flat_map(permutations).collect();
    let mut emb_alg = Tally::new("FQSym embedding algebra morphism");
    let mut emb_coalg = Tally::new("FQSym embedding coalgebra morphism");
    let mut ev_emb = Tally::new("Ev of FQSym embedding is the commutative image");
    for s in &perms {
        let fs = FQElem::f(s);
        let es = embed_fqsym(&fs)?;
        let mut mapped = LinComb::zero();
        for ((a, b), c) in fs.coproduct()?.iter() {
            let t = tensor_of(&embed_fqsym(&FQElem::f(a))?, &embed_fqsym(&FQElem::f(b))?);
            mapped.add_scaled(&t, c);
        }
        emb_coalg.record(es.coproduct() == mapped);
        ev_emb.record(ev(&es).to_basis(QsBasis::M) == commutative_image(&fs)?.to_basis(QsBasis::M));
        for t in perms.iter().filter(|t| s.size() + t.size() <= d) {
            let ft = FQElem::f(t);
            emb_alg.record(embed_fqsym(&fs.mul(&ft)?)? == es.mul(&embed_fqsym(&ft)?));
        }
    }

    Ok(AxiomReport {
        max_degree,
        checks: vec![
            assoc.done(),
            coassoc.done(),
            counit.done(),
            compat.done(),
            dual.done(),
            adjoint.done(),
            ev_alg.done(),
            tev_alg.done(),
            ev_adj.done(),
            emb_alg.done(),
            emb_coalg.done(),
            ev_emb.done(),
        ],
    })
}

fn adjoint_record(t: &mut Tally, a: Scalar, b: Scalar) {
    t.record((a - b).is_zero());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_degree_three() {
        let r = mqsym_axioms(3).unwrap();
        for c in &r.checks {
            assert!(c.cases > 0 && c.failures == 0, "{c:?}");
        }
    }
}
