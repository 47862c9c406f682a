use super::parser::{AlgebraDecl, Block, ModuleDecl, MorphismDecl, SourceFile};
use crate::algebra::order_from_names;
use crate::freealg::MonomialOrder;

fn order_of(a: &AlgebraDecl) -> MonomialOrder {
    let prec: Vec<&str> = a.order.iter().flatten().map(String::as_str).collect();
    order_from_names(&a.gens, &prec).unwrap_or_else(|_| MonomialOrder::natural(a.gens.len()))
}

fn algebra(a: &AlgebraDecl, out: &mut String) {
    out.push_str(&format!("algebra {}\n  gens {}\n", a.name, a.gens.join(" ")));
    if let Some(p) = &a.order {
        out.push_str(&format!("  order deglex {}\n", p.join(" > ")));
    }
    let o = order_of(a);
    for r in &a.relations {
        out.push_str(&format!("  rel {}\n", r.render(&a.gens, Some(&o))));
    }
    out.push_str("end\n");
}

fn morphism(m: &MorphismDecl, file: &SourceFile, external: &dyn Fn(&str) -> Option<Vec<String>>, out: &mut String) {
    out.push_str(&format!("morphism {} : {} -> {}\n", m.name, m.source, m.target));
    let (gens, order) = match file.algebra(&m.target) {
        Some(a) => (a.gens.clone(), Some(order_of(a))),
        None => (external(&m.target).unwrap_or_default(), None),
    };
    for (g, p) in &m.maps {
        out.push_str(&format!("  map {g} => {}\n", p.render(&gens, order.as_ref())));
    }
    out.push_str("end\n");
}

fn module(m: &ModuleDecl, out: &mut String) {
    out.push_str(&format!("module {} over {} dim {}\n", m.name, m.over, m.dim));
    for (g, a) in &m.acts {
        out.push_str(&format!("  act {g} = {}\n", a.render()));
    }
    out.push_str("end\n");
}

/// Canonical text of a parsed file; parsing it back yields an equal file.
pub fn pretty(file: &SourceFile) -> String {
    pretty_with(file, &|_| None)
}

pub fn pretty_with(file: &SourceFile, external: &dyn Fn(&str) -> Option<Vec<String>>) -> String {
    let mut out = String::new();
    for (i, b) in file.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match b {
            Block::Algebra(a) => algebra(a, &mut out),
            Block::Morphism(m) => morphism(m, file, external, &mut out),
            Block::Module(m) => module(m, &mut out),
        }
    }
    out
}
