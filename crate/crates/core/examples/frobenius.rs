//! Frobenius reciprocity dim Hom(Ind M, K) = dim Hom(M, Res K) on irreducible pairs, and
//! induction in stages heis -> a_va1 -> a_va2.

use zhuind::catalog;
use zhuind::induct::{composition_check, frobenius_check};

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    let m = c.morphism("va1_to_va2")?;
    for l in c.irreducibles("a_va1")? {
        for k in c.irreducibles("a_va2")? {
            let f = frobenius_check(m, &[], &l, &k)?;
            println!("Hom(Ind {}, {}) = {}  Hom({}, Res {}) = {}", l.label, k.label, f.induced_side, l.label, k.label, f.restricted_side);
            assert!(f.passed());
        }
    }

    let (m1, m2) = (c.morphism("heis_to_va1")?, c.morphism("va1_to_va2")?);
    let (k1, k2, k12) = (c.kernel("heis_to_va1")?, c.kernel("va1_to_va2")?, c.kernel("heis_to_va2")?);
    let irr = c.irreducibles("a_va2")?;
    for s in ["0", "1", "-1", "2"] {
        let r = composition_check(m1, m2, &k1, &k2, &k12, &c.module(&format!("heis_mod({s})"))?, &irr)?;
        println!("s = {s:>2}: one step {}, two steps {}", r.one_step.render(), r.two_step.render());
        assert!(r.passed());
    }
    Ok(())
}
