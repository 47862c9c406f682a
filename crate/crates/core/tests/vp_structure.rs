//! Facts about A(V_P) beyond the acceptance table: the two length-3 words `xb x x` and
//! `xab x x` are not independent of shorter words, with explicit ideal-membership cofactors.

use zhuind::catalog::{self, vp_presentation};
use zhuind::rewrite::{complete_with, CompletionOptions};

#[test]
fn length_three_root_words_collapse() {
    let a = catalog::get().algebra("a_vp").unwrap();
    assert_eq!(a.render(&a.parse("xb x x").unwrap()), "xb x");
    assert_eq!(a.render(&a.parse("xab x x").unwrap()), "-xab x");
    let normal: Vec<String> = a.normal_words(3).unwrap().iter().map(|w| a.render_word(w)).collect();
    assert!(!normal.contains(&"xb x x".to_string()));
    assert!(!normal.contains(&"xab x x".to_string()));
}

#[test]
fn collapse_has_a_cofactor_certificate() {
    let p = vp_presentation();
    let sys = complete_with(&p.relations, &p.order, &CompletionOptions { max_degree: 12, trace: true }).unwrap();
    for expr in ["xb x x - xb x", "xab x x + xab x"] {
        let poly = zhuind::iolang::parse_poly(expr, &p.generators).unwrap();
        let (r, steps) = sys.reduce_traced(&poly);
        assert!(r.is_zero(), "{expr} reduces to 0");
        let cof = sys.trace_cofactor(&steps).expect("traced completion");
        assert_eq!(sys.expand(&cof), poly, "{expr} is an explicit combination of the defining relations");
    }
}
