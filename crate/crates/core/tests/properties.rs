use proptest::prelude::*;
use proptest::strategy::ValueTree;

use zhuind::catalog;
use zhuind::chars::char_vector;
use zhuind::iolang::parse_poly;
use zhuind::rat::frac;
use zhuind::repmod::{decompose, hom_space, FinModule, ModuleCheck};
use zhuind::rewrite::{complete_with, CompletionOptions};
use zhuind::{GenId, NcPoly, Word};

fn poly(ngens: u32) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=4, prop::collection::vec(0..ngens, 0..5)), 0..5).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (n, d, w) in terms {
            p.add_term(Word(w.into_iter().map(GenId).collect()), frac(n, d));
        }
        p
    })
}

fn rational() -> impl Strategy<Value = zhuind::Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_idempotent_and_linear((id, p, q) in with_algebra(), k in rational()) {
        let a = catalog::get().algebra(id).unwrap();
        let sys = a.system();
        let rp = sys.reduce(&p);
        prop_assert_eq!(sys.reduce(&rp), rp.clone());
        prop_assert_eq!(sys.reduce(&(&p + &q)), &rp + &sys.reduce(&q));
        prop_assert_eq!(sys.reduce(&p.scale(&k)), rp.scale(&k));
        for (w, _) in rp.terms() {
            prop_assert!(sys.is_normal(w));
        }
    }

    #[test]
    fn multiplication_is_associative(p in poly(8), q in poly(8), r in poly(8)) {
        let a = catalog::get().algebra("a_va2").unwrap();
        let (p, q, r) = (a.element(&p), a.element(&q), a.element(&r));
        let left = a.mul(&a.mul(&p, &q).unwrap(), &r).unwrap();
        let right = a.mul(&p, &a.mul(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn render_parse_round_trip(p in poly(3)) {
        let a = catalog::get().algebra("a_va1").unwrap();
        let gens = a.generators().to_vec();
        let text = p.render(&gens, Some(&a.presentation().order));
        prop_assert_eq!(parse_poly(&text, &gens).unwrap(), p);
    }

    #[test]
    fn families_are_modules(t in rational()) {
        let c = catalog::get();
        let ts = zhuind::rat::fmt(&t);
        for fam in ["heis_mod", "vb_mod", "vir_mod", "vp_mod_U0", "vp_mod_Uhalf"] {
            let m = c.module(&format!("{fam}({ts})")).unwrap();
            prop_assert_eq!(m.check_module(), ModuleCheck::Pass, "{}({})", fam, ts);
        }
    }

    #[test]
    fn decomposition_is_additive(m0 in 0usize..3, m1 in 0usize..3, m2 in 0usize..3) {
        let c = catalog::get();
        let irr = c.irreducibles("a_va2").unwrap();
        let mut sum = FinModule::zero(c.algebra("a_va2").unwrap());
        for (l, k) in irr.iter().zip([m0, m1, m2]) {
            for _ in 0..k {
                sum = sum.direct_sum(l).unwrap();
            }
        }
        let rec = decompose(&sum, &irr).unwrap();
        prop_assert_eq!(rec.residual, 0);
        for (l, k) in irr.iter().zip([m0, m1, m2]) {
            prop_assert_eq!(rec.multiplicity(&l.label), k);
        }
        let chi = char_vector(&sum).unwrap();
        let ring = zhuind::chars::CharacterRing::new(&irr).unwrap();
        prop_assert_eq!(ring.combination(&rec).unwrap(), chi);
    }
}

fn with_algebra() -> impl Strategy<Value = (&'static str, NcPoly, NcPoly)> {
    prop::sample::select(catalog::ALGEBRA_IDS).prop_flat_map(|id| {
        let n = catalog::get().algebra(id).unwrap().num_gens() as u32;
        (Just(id), poly(n), poly(n))
    })
}

#[test]
fn hom_dimensions_are_symmetric_between_semisimple_modules() {
    let c = catalog::get();
    for id in ["a_va1", "a_va2"] {
        let irr = c.irreducibles(id).unwrap();
        let mut mods = irr.clone();
        for l in &irr {
            for k in &irr {
                mods.push(l.direct_sum(k).unwrap());
            }
        }
        for m in &mods {
            for n in &mods {
                assert_eq!(hom_space(m, n).unwrap().len(), hom_space(n, m).unwrap().len());
            }
        }
    }
}

#[test]
fn cofactors_are_sound() {
    let c = catalog::get();
    for id in ["a_va1", "vb", "a_vp"] {
        let p = c.algebra(id).unwrap().presentation().clone();
        let sys = complete_with(&p.relations, &p.order, &CompletionOptions { max_degree: 12, trace: true }).unwrap();
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        for _ in 0..50 {
            let f = poly(p.generators.len() as u32).new_tree(&mut runner).unwrap().current();
            let (r, steps) = sys.reduce_traced(&f);
            let cof = sys.trace_cofactor(&steps).unwrap();
            assert_eq!(sys.expand(&cof), &f - &r, "{id}");
        }
    }
}

#[test]
fn normal_words_are_closed_under_subwords() {
    let c = catalog::get();
    for id in catalog::ALGEBRA_IDS {
        let a = c.algebra(id).unwrap();
        let sys = a.system();
        for w in a.normal_words(5).unwrap() {
            for i in 0..w.len() {
                for j in i..=w.len() {
                    assert!(sys.is_normal(&w.slice(i, j)), "{id}: {}", a.render_word(&w));
                }
            }
        }
    }
}

#[test]
fn characters_are_symmetric() {
    let c = catalog::get();
    for id in ["a_va1", "a_va2"] {
        let a = c.algebra(id).unwrap();
        for l in c.irreducibles(id).unwrap() {
            assert_eq!(zhuind::chars::symmetry_check(&a, &char_vector(&l).unwrap()).unwrap(), None);
        }
    }
}
