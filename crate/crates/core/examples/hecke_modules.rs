//! Modules over the 0-Hecke algebra and their characteristics.

use combhopf::combinatorics::{comp, perm};
use combhopf::hecke0::{build_module, exact_sequence, ModuleKind};

fn main() -> combhopf::Result<()> {
    let kinds = [
        ModuleKind::Projective(comp(&[2, 1, 1])),
        ModuleKind::Simple(comp(&[3, 1])),
        ModuleKind::N(perm("2413")),
        ModuleKind::M(perm("2413")),
        ModuleKind::Regular(3),
    ];
    for kind in &kinds {
        let m = build_module(kind)?;
        println!("{}: dim {}, characteristic {}", m.name(), m.dim(), m.characteristic()?);
    }

    let seq = exact_sequence(&perm("21"), &perm("1"))?;
    println!("0 -> N{} -> N21 (x) N1 -> N{} -> 0 holds: {}", seq.beta, seq.alpha, seq.submodule && seq.sub_is_n_beta);
    Ok(())
}
