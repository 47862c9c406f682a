//! Prints the built-in catalog in the presentation-file language, reparses it and rebuilds every
//! algebra from the text, comparing dimensions with the built-in handles.
//!
//! `cargo run --example presentation_file > catalog.zh` writes a file usable with `zhuind check`.

use zhuind::{catalog, iolang};

fn main() -> zhuind::Result<()> {
    let text = iolang::pretty(&catalog::source_file());
    print!("{text}");

    let reparsed = iolang::parse_file(&text)?;
    assert_eq!(iolang::pretty(&reparsed), text, "pretty-printing is a fixed point");
    let ws = iolang::elaborate(&reparsed, zhuind::algebra::DEFAULT_PROBE, &|_| None)?;
    let cat = catalog::get();
    for (name, a) in &ws.algebras {
        let builtin = cat.algebra(name)?;
        eprintln!("{name:6} file: {:<40} catalog: {}", a.dimension().to_string(), builtin.dimension());
        assert_eq!(a.dimension(), builtin.dimension());
    }
    for (name, m) in &ws.modules {
        eprintln!("{name:12} over {} dim {}: {:?}", m.owner.name(), m.dim, m.check_module());
    }
    Ok(())
}
