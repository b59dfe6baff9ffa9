//! Matrix quasi-symmetric functions: product, coproduct, evaluation, dimensions.

use combhopf::mqsym::{ev, hilbert_series, packed, HilbertMethod, MQElem};

fn main() -> combhopf::Result<()> {
    let a = MQElem::ms(&packed(&[&[2, 1], &[1, 0]]));
    let b = MQElem::ms(&packed(&[&[3, 1]]));
    println!("MS_A * MS_B = {}", a.mul(&b));
    println!("coproduct MS_A:");
    for ((l, r), c) in a.coproduct().iter() {
        println!("  {c} x MS{l} (x) MS{r}");
    }
    println!("Ev(MS_A) = {}", ev(&a));

    let dims = hilbert_series(6, HilbertMethod::DoubleCoset)?;
    println!("dimensions through degree 6: {dims:?}");
    Ok(())
}
