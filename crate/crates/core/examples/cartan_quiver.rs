//! q-Cartan matrix, radical and quiver of H_n(0).

use combhopf::hecke0::{q_cartan, quiver, radical_report, QuiverMethod};

fn main() -> combhopf::Result<()> {
    print!("{}", q_cartan(4)?.to_tsv());

    let rad = radical_report(4)?;
    println!("radical of H4(0): three descriptions agree: {}", rad.equal);

    for n in 3..=5 {
        let by_rule = quiver(n, QuiverMethod::Theorem)?;
        let by_ext = quiver(n, QuiverMethod::Ext1)?;
        let arrows: usize = by_rule.arrows.values().sum();
        println!("n = {n}: {arrows} arrows, rule equals Ext^1: {}", by_rule.arrows == by_ext.arrows);
    }
    Ok(())
}
