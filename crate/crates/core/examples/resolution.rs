//! Minimal projective resolution of a simple module and the Ext check.

use combhopf::combinatorics::comp;
use combhopf::hecke0::{build_module, ext_poincare_check, syzygy_resolution, ModuleKind};

fn main() -> combhopf::Result<()> {
    let s31 = build_module(&ModuleKind::Simple(comp(&[3, 1])))?;
    let res = syzygy_resolution(&s31, 5)?;
    println!("P_q(S31) = {}", res.render_pq());
    for k in 1..=4 {
        println!("ch_q(Omega^{k} S31) = {}", res.render_syzygy(k));
    }
    println!("syzygy dimensions: {:?}", res.syzygy_dims);

    for n in [3, 4] {
        let ext = ext_poincare_check(n, 6)?;
        println!("n = {n}: {} pairs, {} mismatches", ext.pairs_checked, ext.failures.len());
    }
    Ok(())
}
