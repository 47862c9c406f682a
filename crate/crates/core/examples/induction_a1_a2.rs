//! Induction from the rank-one algebras into A(V_A1), and from A(V_A1) into A(V_A2), with
//! restriction back down.

use zhuind::catalog;
use zhuind::induct::{induce, restrict};
use zhuind::repmod::decompose;

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    let irr1 = c.irreducibles("a_va1")?;
    let irr2 = c.irreducibles("a_va2")?;

    for (via, fam, params) in [
        ("heis_to_va1", "heis_mod", &["0", "1", "-1", "2", "5/2"][..]),
        ("vb_to_va1", "vb_mod", &["0", "1", "-1", "2"]),
        ("vir_to_va1", "vir_mod", &["0", "1/4", "1", "3/7"]),
    ] {
        let m = c.morphism(via)?;
        let ker = c.kernel(via)?;
        for p in params {
            let r = induce(m, &ker, &c.module(&format!("{fam}({p})"))?)?.decomposed(&irr1)?;
            let d = r.decomposition.as_ref().expect("decomposed");
            println!("{via:12} {fam}({p:>4}): dim {} = {:20} {}", r.module.dim, d.render(), r.voa_label.unwrap_or_default());
        }
    }

    let m = c.morphism("va1_to_va2")?;
    println!();
    for l in &irr1 {
        let r = induce(m, &[], l)?.decomposed(&irr2)?;
        println!("Ind {:8} dim {}: {}  ({})", l.label, r.module.dim, r.decomposition.unwrap().render(), r.voa_label.unwrap_or_default());
    }
    for l in &irr2 {
        let r = restrict(m, l)?;
        println!("Res {:8} dim {}: {}", l.label, r.dim, decompose(&r, &irr1)?.render());
    }
    Ok(())
}
