//! Characteristic polynomials of the pseudo-convolution elements T_n.

use combhopf::exactalg::{factor_rational, render_factored, QPoly};
use combhopf::fqsym::{left_multiplication_matrix, pseudo_convolution_t, pseudo_convolution_t_q, TnWeighting};

fn main() -> combhopf::Result<()> {
    for n in 1..=4 {
        let p: QPoly = left_multiplication_matrix(&pseudo_convolution_t(n)?, n).charpoly()?;
        println!("T{n}: {}", render_factored(&factor_rational(&p), "x"));
    }
    let t3q = pseudo_convolution_t_q(3, TnWeighting::Plain)?;
    println!("T3(q): {}", left_multiplication_matrix(&t3q, 3).charpoly()?.render_desc("x"));
    Ok(())
}
