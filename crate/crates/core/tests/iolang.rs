use zhuind::iolang::{elaborate, parse_file, parse_poly, pretty, Block};
use zhuind::{catalog, Error};

const A1: &str = "
# the rank-one quotient, five relations
algebra a1
  gens e f h
  order deglex f > e > h
  rel e h + e
  rel h h - h - 2 f e
  rel f h - f
  rel e e
  rel f f
end
";

#[test]
fn a1_block() {
    let f = parse_file(A1).unwrap();
    let Block::Algebra(a) = &f.blocks[0] else { panic!() };
    assert_eq!(a.gens.len(), 3);
    assert_eq!(a.relations.len(), 5);
}

#[test]
fn rational_coefficients() {
    let g = vec!["x".to_string(), "y".to_string()];
    let p = parse_poly("1/2 x y - y x", &g).unwrap();
    assert_eq!(p.num_terms(), 2);
    assert_eq!(p, parse_poly("-y x + 2/4 x y", &g).unwrap());
}

#[test]
fn diagnostics_are_positioned() {
    match parse_file("algebra t gens e\n  rel e q\nend") {
        Err(Error::Parse { line, col, message }) => {
            assert_eq!((line, col), (2, 9));
            assert!(message.contains('q'), "{message}");
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_file("algebra t gens e rel 1/0 e end"), Err(Error::Parse { .. })));
    assert!(matches!(parse_file("algebra t gens e end module m over t dim 2 act e = [1 0; 0] end"), Err(Error::Parse { .. })));
}

#[test]
fn round_trip_catalog() {
    let text = pretty(&catalog::source_file());
    let again = pretty(&parse_file(&text).unwrap());
    assert_eq!(again, text);
    let shipped = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.zh")).unwrap();
    assert_eq!(shipped, text, "data/catalog.zh is out of date; regenerate with the presentation_file example");
}

/// The five relations alone leave a 10-dimensional algebra; the brackets cut it to the catalog's 5.
#[test]
fn elaborated_file_matches_catalog() {
    let ws = elaborate(&parse_file(A1).unwrap(), 12, &|_| None).unwrap();
    assert_eq!(ws.algebras["a1"].dimension(), &zhuind::Dimension::Finite(10));
    let with_brackets = A1.replace("end", "  rel h e - e h - 2 e\n  rel h f - f h + 2 f\n  rel e f - f e - h\nend");
    let ws = elaborate(&parse_file(&with_brackets).unwrap(), 12, &|_| None).unwrap();
    assert_eq!(ws.algebras["a1"].dimension(), catalog::get().algebra("a_va1").unwrap().dimension());
}

#[test]
fn morphisms_into_catalog_algebras() {
    let src = "algebra p gens t end\nmorphism m : p -> a_va1 map t => 1/4 h h end\nmodule one over a_va1 dim 1 end\n";
    let cat = catalog::get();
    let gens = |n: &str| cat.algebra(n).ok().map(|a| a.generators().to_vec());
    let f = zhuind::iolang::parse_file_with(src, &gens).unwrap();
    let ws = elaborate(&f, 12, &|n| cat.algebra(n).ok()).unwrap();
    let m = &ws.morphisms["m"];
    assert_eq!(m.target.render(&m.images()[0]), "1/4 h h");
    assert_eq!(zhuind::iolang::pretty_with(&f, &gens), src.replace("algebra p gens t end", "algebra p\n  gens t\nend\n").replace("morphism m : p -> a_va1 map t => 1/4 h h end", "morphism m : p -> a_va1\n  map t => 1/4 h h\nend\n").replace("module one over a_va1 dim 1 end\n", "module one over a_va1 dim 1\nend\n"));
}
