//! Normal forms in the catalog algebras, including the relations of A(V_A2) that are not part of
//! its presentation but follow from it.

use zhuind::catalog::{self, VA2_DERIVED};

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    let a1 = c.algebra("a_va1")?;
    for expr in ["h h h", "f e", "e f", "h e h", "e f e", "f e f e"] {
        println!("a_va1: {expr:10} -> {}", a1.render(&a1.parse(expr)?));
    }
    let basis: Vec<_> = a1.basis()?.iter().map(|w| a1.render_word(w)).collect();
    println!("a_va1 basis ({}): {}", basis.len(), basis.join(", "));

    let a2 = c.algebra("a_va2")?;
    println!("\na_va2 has dimension {}", a2.dimension());
    for rel in VA2_DERIVED {
        println!("  {rel:28} -> {}", a2.render(&a2.parse(rel)?));
    }

    let vb = c.algebra("vb")?;
    for expr in ["y y", "x y", "y x", "x x y x"] {
        println!("vb: {expr:8} -> {}", vb.render(&vb.parse(expr)?));
    }
    Ok(())
}
