//! Products, coproducts, duality and primitive elements in FQSym.

use combhopf::combinatorics::connected_counts;
use combhopf::combinatorics::perm;
use combhopf::exactalg::Scalar;
use combhopf::fqsym::{primitive_basis_v, render_tensor, FQElem, FqBasis};

fn main() -> combhopf::Result<()> {
    let f = |s: &str| FQElem::<Scalar>::basis_element(FqBasis::F, perm(s));
    let g = |s: &str| FQElem::<Scalar>::basis_element(FqBasis::G, perm(s));

    println!("F12 * F1 = {}", f("12").mul(&f("1"))?);
    println!("coproduct F2413 = {}", render_tensor(&f("2413").coproduct()?, "F"));
    println!("<F312, G312> = {}", f("312").pair(&g("312"))?);
    println!("F312 in the multiplicative basis: {}", f("312").to_basis(FqBasis::FUpper)?);

    for alpha in ["312", "231", "321", "4231"] {
        println!("V{alpha} = {}", primitive_basis_v(&perm(alpha))?);
    }
    let c: Vec<String> = connected_counts(9).iter().map(ToString::to_string).collect();
    println!("connected permutations c1..c9: {}", c.join(","));
    Ok(())
}
