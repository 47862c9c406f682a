//! The parabolic-type algebra A(V_P): its normal-word profile, the square-zero ideal spanned by
//! the root words, and which of its one-parameter modules survive induction to A(V_A2).

use zhuind::catalog;
use zhuind::induct::{induce, kernel_action_radical};

const J: [&str; 6] = ["xb", "xb x", "xb x x", "xab", "xab x", "xab x x"];

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    let a = c.algebra("a_vp")?;
    println!("a_vp: {} rules, {}", a.system().rules().len(), a.dimension());
    let words: Vec<_> = a.normal_words(3)?.iter().map(|w| a.render_word(w)).collect();
    println!("normal words up to length 3: {}", words.join(", "));
    for w in ["xb x x", "xab x x"] {
        println!("  {w} -> {}", a.render(&a.parse(w)?));
    }
    let nonzero = J.iter().flat_map(|p| J.iter().map(move |q| format!("{p} {q}"))).filter(|e| !a.parse(e).map(|x| x.is_zero()).unwrap_or(false)).count();
    println!("nonzero products inside J: {nonzero} of {}", J.len() * J.len());

    let m = c.morphism("vp_to_va2")?;
    let ker = c.kernel("vp_to_va2")?;
    let irr = c.irreducibles("a_va2")?;
    println!();
    for fam in ["vp_mod_U0", "vp_mod_Uhalf"] {
        for t in ["0", "1", "-1", "1/2", "-1/2", "3"] {
            let md = c.module(&format!("{fam}({t})"))?;
            let rad = kernel_action_radical(m, &ker, &md)?;
            let r = induce(m, &ker, &md)?.decomposed(&irr)?;
            println!(
                "{fam}({t:>4}): radical dim {}, induced dim {} = {}  {}",
                rad.dim(),
                r.module.dim,
                r.decomposition.as_ref().unwrap().render(),
                r.voa_label.unwrap_or_default()
            );
        }
    }
    Ok(())
}
