//! Operators f_A on multiwords and the homomorphism identity.

use combhopf::mqsym::{convolution_fa, convolution_homomorphism_check, MultiWord, PackedMat, MAX_VARIABLES};

fn main() -> combhopf::Result<()> {
    let a: PackedMat = "[[2,0,1],[0,2,3]]".parse()?;
    let m: MultiWord = "abc . a^4b".parse()?;
    for (w, c) in convolution_fa(&a, &m, MAX_VARIABLES)?.iter() {
        println!("{c} x {w}");
    }
    let report = convolution_homomorphism_check(3)?;
    println!("{} pairs checked, homomorphism holds: {}", report.pairs, report.passed());
    Ok(())
}
