//! Linear extensions, free quasi-symmetric generating functions and trees.

use combhopf::combinatorics::BinTree;
use combhopf::posets::{gamma_free, loday_ronco_f, poset_module, tree_product, Poset};

fn main() -> combhopf::Result<()> {
    let p: Poset = "n=4; 1<3, 2<3, 2<4".parse()?;
    println!("linear extensions: {:?}", p.linear_extensions()?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("Gamma(P) = {}", gamma_free(&p)?);
    let m = poset_module(&p)?;
    println!("module of P: dim {}, characteristic {}", m.dim(), m.characteristic()?);

    let wedge = Poset::chain(1).wedge(&Poset::antichain(2));
    println!("wedge: {wedge}, {} extensions", wedge.linear_extensions()?.len());

    let t: BinTree = "((.,.),.)".parse()?;
    let u: BinTree = "(.,.)".parse()?;
    println!("F_t = {}", loday_ronco_f(&t)?);
    for (tree, c) in tree_product(&t, &u) {
        println!("  {c} x {tree}");
    }
    Ok(())
}
