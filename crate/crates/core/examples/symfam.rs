//! Free Schur functions, the LR rule and commutative images.

use combhopf::combinatorics::tableau;
use combhopf::exactalg::Scalar;
use combhopf::symfam::{commutative_image, free_schur, lr_product_fqsym, qs_distribution};

fn main() -> combhopf::Result<()> {
    let t = tableau(&[&[1, 2], &[3]]);
    let st = free_schur(&t)?;
    println!("S_t = {st}");
    println!("image of S_t in QSym: {}", commutative_image(&st)?);

    println!("S_t * S_t:");
    for (u, c) in lr_product_fqsym(&t, &t)?.iter() {
        println!("  {c} x {u}");
    }

    let x = [Scalar::new(1.into(), 2.into()), Scalar::new(1.into(), 3.into()), Scalar::new(1.into(), 6.into())];
    let qs = qs_distribution(&x, 3)?;
    for (s, p) in &qs.probabilities {
        println!("Prob({s}) = {p}");
    }
    println!("eigenvalues as predicted: {}", qs.charpoly == qs.predicted);
    Ok(())
}
