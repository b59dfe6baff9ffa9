//! Which weighting of T_n(q) reproduces the printed factorization of its
//! characteristic polynomial for n = 3.

use combhopf::exactalg::{int, Poly, QPoly, Ring};
use combhopf::fqsym::{left_multiplication_matrix, pseudo_convolution_t_q, TnWeighting};
use num_traits::One;

fn linear(root: QPoly) -> Poly<QPoly> {
    Poly::new(vec![-root, QPoly::one()])
}

fn printed_t3q() -> Poly<QPoly> {
    [(vec![2], 2), (vec![4, 4, 2], 2), (vec![8, 6, 6], 1), (vec![4, -2, 2], 1)]
        .into_iter()
        .fold(Poly::one(), |acc, (r, m)| acc * linear(QPoly::from_ints(&r)).pow(m))
}

fn charpoly(w: TnWeighting) -> Poly<QPoly> {
    left_multiplication_matrix(&pseudo_convolution_t_q(3, w).unwrap(), 3).charpoly().unwrap()
}

fn at_q_zero(p: &Poly<QPoly>) -> QPoly {
    p.map(|c| c.eval(&int(0)))
}

fn roots_with_multiplicity(roots: &[(i64, usize)]) -> QPoly {
    roots.iter().fold(QPoly::one(), |acc, &(r, m)| acc * QPoly::from_ints(&[-r, 1]).pow(m))
}

#[test]
fn plain_weighting_matches_the_printed_product() {
    let got = charpoly(TnWeighting::Plain);
    assert_eq!(got, printed_t3q());
    assert_eq!(at_q_zero(&got), roots_with_multiplicity(&[(2, 2), (4, 3), (8, 1)]));
}

#[test]
fn power_of_k_weighting_does_not_match() {
    let got = charpoly(TnWeighting::PowerOfK);
    assert_ne!(got, printed_t3q());
    assert_eq!(at_q_zero(&got), roots_with_multiplicity(&[(1, 6)]));
}

#[test]
fn both_weightings_agree_at_q_one() {
    let one = |p: &Poly<QPoly>| p.map(|c| c.eval(&int(1)));
    assert_eq!(one(&charpoly(TnWeighting::Plain)), one(&charpoly(TnWeighting::PowerOfK)));
}
