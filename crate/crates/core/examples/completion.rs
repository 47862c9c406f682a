//! Completing a presentation by hand: the rules that appear, the degree certificate, and the
//! normal-word profile. The braid relation keeps producing overlaps, so its system is only
//! certified up to the degree bound.

use zhuind::algebra::{AlgebraHandle, Presentation};
use zhuind::rewrite::{complete, CompletionFailure};

fn main() -> zhuind::Result<()> {
    // sl2 brackets plus e^2 = 0: a small finite algebra
    let pres = Presentation::new("demo", &["e", "f", "h"], &["f", "e", "h"], &["h e - e h - 2 e", "h f - f h + 2 f", "e f - f e - h", "e e"])?;
    let sys = complete(&pres.relations, &pres.order, 12).expect("completes");
    println!("{} rules, certificate: {}", sys.rules().len(), sys.certificate());
    for r in sys.rules() {
        println!("  {} -> {}", r.lhs.render(&pres.generators), r.rhs.render(&pres.generators, Some(&pres.order)));
    }
    let a = AlgebraHandle::from_system(pres, sys);
    println!("dimension {}, profile {:?}", a.dimension(), a.profile(6)?);

    // one rule, confluent outright, but infinite-dimensional
    let weyl = Presentation::new("weyl", &["x", "y"], &["x", "y"], &["x y - y x - 1"])?;
    let a = AlgebraHandle::build(weyl, 8)?;
    println!("\nweyl: certificate {}, dimension {}", a.certificate(), a.dimension());

    let grow = Presentation::new("grow", &["a", "b"], &["b", "a"], &["a b a - b a b"])?;
    match complete(&grow.relations, &grow.order, 6) {
        Ok(s) => println!("grow: {} rules, {}", s.rules().len(), s.certificate()),
        Err(e @ CompletionFailure::DegreeExceeded { .. }) => println!("grow: {e}"),
        Err(e) => println!("grow: {e}"),
    }
    Ok(())
}
