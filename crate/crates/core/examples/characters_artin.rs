//! Characters of the A(V_A1) irreducibles and their expression through modules induced from the
//! polynomial algebra on the conformal vector, which acts as 1/4 h h.

use zhuind::catalog;
use zhuind::chars::{artin_solve, char_vector, symmetry_check, CharacterRing};
use zhuind::rat::{self, frac, int};

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    let a = c.algebra("a_va1")?;
    let irr = c.irreducibles("a_va1")?;
    let basis: Vec<_> = a.basis()?.iter().map(|w| a.render_word(w)).collect();
    println!("basis: {}", basis.join(", "));
    for l in &irr {
        let chi = char_vector(l)?;
        let vals: Vec<_> = chi.values.iter().map(rat::fmt).collect();
        println!("χ_{:8} = ({})  symmetric: {}", l.label, vals.join(", "), symmetry_check(&a, &chi)?.is_none());
    }
    println!("independent: {:?}", CharacterRing::new(&irr)?.independence_check());

    let sol = artin_solve(&a, &a.parse("1/4 h h")?, &[int(0), frac(1, 4)], &irr)?;
    for (w, rec) in sol.weights.iter().zip(&sol.induced) {
        println!("Ind_{} = {}", rat::fmt(w), rec.render());
    }
    for (label, row) in sol.labels.iter().zip(&sol.coefficients) {
        let terms: Vec<_> = row.iter().zip(&sol.weights).map(|(k, w)| format!("{}·Ind_{}", rat::fmt(k), rat::fmt(w))).collect();
        println!("χ_{label} = {}", terms.join(" + "));
    }
    Ok(())
}
