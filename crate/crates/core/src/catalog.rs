//! The built-in algebras, morphisms, kernels and module families.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::algebra::{order_from_names, AlgebraHandle, Element, Presentation};
use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::iolang::{parse_poly, AlgebraDecl, Block, ModuleDecl, MorphismDecl, SourceFile};
use crate::linalg::Matrix;
use crate::morphism::AlgebraMorphism;
use crate::rat::{self, frac, int, Rational};
use crate::repmod::{DecompositionRecord, FinModule};
use num_traits::Zero;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn polys(gens: &[String], src: &[&str]) -> Vec<NcPoly> {
    src.iter().map(|s| parse_poly(s, gens).expect("catalog relation parses")).collect()
}

fn pow(p: &NcPoly, k: u32) -> NcPoly {
    (0..k).fold(NcPoly::one(), |acc, _| &acc * p)
}

fn pres(name: &str, gens: &[&str], precedence: &[&str], relations: Vec<NcPoly>) -> Presentation {
    let generators = names(gens);
    let order = order_from_names(&generators, precedence).expect("catalog order is valid");
    Presentation { name: name.into(), generators, order, relations }
}

pub fn heis_presentation() -> Presentation {
    pres("heis", &["x"], &[], Vec::new())
}

pub fn vir_presentation() -> Presentation {
    pres("vir", &["y"], &[], Vec::new())
}

pub fn vb_presentation() -> Presentation {
    let g = names(&["x", "y"]);
    pres("vb", &["x", "y"], &["y", "x"], polys(&g, &["y y", "x y - y", "y x + y"]))
}

/// The five relations of the rank-one quotient of the enveloping algebra.
pub const VA1_RELATIONS: &[&str] = &["e h + e", "h h - h - 2 f e", "f h - f", "e e", "f f"];
/// Bracket relations; without them the five relations above also admit `h = 1, e = f = 0`.
pub const VA1_BRACKETS: &[&str] = &["h e - e h - 2 e", "h f - f h + 2 f", "e f - f e - h"];

pub fn va1_presentation() -> Presentation {
    let g = names(&["e", "f", "h"]);
    let mut rels = polys(&g, VA1_RELATIONS);
    rels.extend(polys(&g, VA1_BRACKETS));
    pres("a_va1", &["e", "f", "h"], &["f", "e", "h"], rels)
}

pub const VA2_GENS: &[&str] = &["x", "y", "xa", "xma", "xb", "xmb", "xab", "xmab"];

/// Root coordinates in the basis of simple roots, indexed like the root generators of `VA2_GENS`.
const VA2_ROOTS: &[(&str, (i32, i32))] =
    &[("xa", (1, 0)), ("xma", (-1, 0)), ("xb", (0, 1)), ("xmb", (0, -1)), ("xab", (1, 1)), ("xmab", (-1, -1))];

/// Relations that follow from the defining ones; each must reduce to zero.
pub const VA2_DERIVED: &[&str] = &[
    "xa xb + xab y",
    "xb xa + xab y + xab",
    "xma xmb + xmab x - xmab",
    "xmb xma + xmab x",
    "xb xmab + xma y + xma",
    "xmab xb + xma y",
    "xmb xab - xa y + xa",
    "xab xmb - xa y",
    "xa xmab - xmb x - xmb",
    "xmab xa - xmb x",
    "xma xab + xb x - xb",
    "xab xma + xb x",
];

/// The natural three-dimensional representation: `x_a = E12`, `x_b = E23`, `x_{a+b} = E13`,
/// `x_{-a} = E21`, `x_{-b} = E32`, `x_{-(a+b)} = -E31`, `x = E11 - E22`, `y = E22 - E33`.
pub fn va2_natural(gen: &str) -> Matrix {
    let e = |i, j| Matrix::unit(3, i, j);
    match gen {
        "x" => &e(0, 0) - &e(1, 1),
        "y" => &e(1, 1) - &e(2, 2),
        "xa" => e(0, 1),
        "xma" => e(1, 0),
        "xb" => e(1, 2),
        "xmb" => e(2, 1),
        "xab" => e(0, 2),
        "xmab" => e(2, 0).scale(&int(-1)),
        _ => panic!("unknown generator {gen}"),
    }
}

/// `[x_g, x_t] = c x_{g+t}` for roots whose sum is a root, with `c` read off the natural representation.
fn va2_brackets(g: &[String]) -> Vec<NcPoly> {
    let mut out = Vec::new();
    for (a, ra) in VA2_ROOTS {
        for (b, rb) in VA2_ROOTS {
            let sum = (ra.0 + rb.0, ra.1 + rb.1);
            let Some((c, _)) = VA2_ROOTS.iter().find(|(_, r)| *r == sum) else { continue };
            let (ma, mb, mc) = (va2_natural(a), va2_natural(b), va2_natural(c));
            let br = &(&ma * &mb) - &(&mb * &ma);
            let (i, j) = (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !mc[(i, j)].is_zero()).unwrap();
            let coeff = &br[(i, j)] / &mc[(i, j)];
            let lhs = parse_poly(&format!("{a} {b} - {b} {a}"), g).unwrap();
            out.push(&lhs - &parse_poly(c, g).unwrap().scale(&coeff));
        }
    }
    out
}

pub fn va2_presentation() -> Presentation {
    let g = names(VA2_GENS);
    let mut rels = polys(
        &g,
        &[
            // Cartan elements against root vectors
            "x xa - xa",
            "x xma + xma",
            "xa x + xa",
            "xma x - xma",
            "y xb - xb",
            "y xmb + xmb",
            "xb y + xb",
            "xmb y - xmb",
            "x xab + y xab - xab",
            "x xmab + y xmab + xmab",
            "xab x + xab y + xab",
            "xmab x + xmab y - xmab",
            "y xa - xa y + xa",
            "y xma - xma y - xma",
            "x xb - xb x + xb",
            "x xmb - xmb x - xmb",
            "x xab - xab x - xab",
            "x xmab - xmab x + xmab",
            "y xab - xab y - xab",
            "y xmab - xmab y + xmab",
            // products of opposite root vectors
            "xa xma - 1/2 x x - 1/2 x",
            "xma xa - 1/2 x x + 1/2 x",
            "xb xmb - 1/2 y y - 1/2 y",
            "xmb xb - 1/2 y y + 1/2 y",
            "xab xmab + 1/2 x x + 1/2 x y + 1/2 y x + 1/2 y y + 1/2 x + 1/2 y",
            "xmab xab + 1/2 x x + 1/2 x y + 1/2 y x + 1/2 y y - 1/2 x - 1/2 y",
            "x x x - x",
            "y y y - y",
            "x y - y x",
        ],
    );
    let s = &NcPoly::gen(crate::GenId(0)) + &NcPoly::gen(crate::GenId(1));
    rels.push(&pow(&s, 3) - &s);
    // x_g x_t = 0 when g + t is neither zero nor a root
    let is_root = |v: (i32, i32)| VA2_ROOTS.iter().any(|(_, r)| *r == v);
    for (a, ra) in VA2_ROOTS {
        for (b, rb) in VA2_ROOTS {
            let sum = (ra.0 + rb.0, ra.1 + rb.1);
            if sum != (0, 0) && !is_root(sum) {
                rels.extend(polys(&g, &[&format!("{a} {b}")]));
            }
        }
    }
    rels.extend(va2_brackets(&g));
    pres("a_va2", VA2_GENS, &["x", "xa", "xma", "y", "xb", "xmb", "xab", "xmab"], rels)
}

pub const VP_GENS: &[&str] = &["x", "y", "xa", "xma", "xb", "xab"];

pub fn vp_presentation() -> Presentation {
    let g = names(VP_GENS);
    let rels = polys(
        &g,
        &[
            "x xa - xa",
            "x xma + xma",
            "xa x + xa",
            "xma x - xma",
            "xa xma - 1/2 x x - 1/2 x",
            "xma xa - 1/2 x x + 1/2 x",
            "x y - y x",
            "x x x - x",
            "y xa - xa y + xa",
            "y xma - xma y - xma",
            "xb y + xb",
            "y xb - xb",
            "xab x + xab y + xab",
            "x xab + y xab - xab",
            "x xb - xb x + xb",
            "x xab - xab x - xab",
            "xa xb + xab y",
            "xb xa + xab y + xab",
            "xma xab + xb x - xb",
            "xab xma + xb x",
            "xa xa",
            "xma xma",
            "xb xb",
            "xab xab",
            "xa xab",
            "xab xa",
            "xb xab",
            "xab xb",
            "xb xma",
            "xma xb",
        ],
    );
    // x_{+-a} weigh 2 so that both x_b x and x_{a+b} x stay normal
    pres("a_vp", VP_GENS, &["y", "x", "xa:2", "xma:2", "xab", "xb"], rels)
}

pub const ALGEBRA_IDS: &[&str] = &["heis", "vir", "vb", "a_va1", "a_va2", "a_vp"];

/// Morphism id, source, target, generator images.
const MORPHISMS: &[(&str, &str, &str, &[(&str, &str)])] = &[
    ("heis_to_va1", "heis", "a_va1", &[("x", "h")]),
    ("vb_to_va1", "vb", "a_va1", &[("x", "h"), ("y", "e")]),
    ("vir_to_va1", "vir", "a_va1", &[("y", "1/4 h h")]),
    ("va1_to_va2", "a_va1", "a_va2", &[("e", "xa"), ("f", "xma"), ("h", "x")]),
    ("vp_to_va2", "a_vp", "a_va2", &[("x", "x"), ("y", "y"), ("xa", "xa"), ("xma", "xma"), ("xb", "xb"), ("xab", "xab")]),
    ("heis_to_va2", "heis", "a_va2", &[("x", "x")]),
];

/// Morphisms with a finite-dimensional target that are not composites.
pub const FINITE_TARGET_MORPHISMS: &[&str] = &["heis_to_va1", "vb_to_va1", "vir_to_va1", "va1_to_va2", "vp_to_va2"];

/// Generators of the kernel of each morphism, as expressions in the source.
const KERNELS: &[(&str, &[&str])] = &[
    ("heis_to_va1", &["x x x - x"]),
    ("vb_to_va1", &["x x x - x"]),
    ("vir_to_va1", &["y y - 1/4 y"]),
    ("va1_to_va2", &[]),
    (
        "vp_to_va2",
        &[
            "xa x x + xa x y + xa y x + xa y y + xa x + xa y",
            "xma x x + xma x y + xma y x + xma y y - xma x - xma y",
            "xa y y - xa y",
            "xma y y + xma y",
            "y y y - y",
            "x x x + x x y + x y x + x y y + y x x + y x y + y y x + y y y - x - y",
        ],
    ),
    ("heis_to_va2", &["x x x - x"]),
];

/// Degree to which each kernel is certified.
pub fn kernel_probe(morphism: &str) -> usize {
    match morphism {
        "vb_to_va1" => 10,
        "vp_to_va2" => 8,
        _ => 12,
    }
}

pub const IRREDUCIBLE_IDS: &[&str] = &["va1_trivial", "va1_L_half", "va2_L0", "va2_L_alpha", "va2_L_beta"];

/// Module families: id, owner, parameter name (empty for fixed modules).
pub const MODULE_FAMILIES: &[(&str, &str, &str)] = &[
    ("heis_mod", "heis", "s"),
    ("vb_mod", "vb", "s"),
    ("vir_mod", "vir", "k"),
    ("va1_trivial", "a_va1", ""),
    ("va1_L_half", "a_va1", ""),
    ("va2_L0", "a_va2", ""),
    ("va2_L_alpha", "a_va2", ""),
    ("va2_L_beta", "a_va2", ""),
    ("vp_mod_U0", "a_vp", "t"),
    ("vp_mod_Uhalf", "a_vp", "t"),
];

/// Module names attached to the irreducible labels.
const VOA_LABELS: &[(&str, &str)] = &[
    ("trivial", "V_{A1}"),
    ("L_half", "V_{A1+½α}"),
    ("L(0)", "V_{A2}"),
    ("L(λ_α)", "V_{A2+λα}"),
    ("L(λ_β)", "V_{A2+λβ}"),
];

/// The module name of a decomposition, summands repeated by multiplicity; `0` for the zero module.
/// `None` if a summand has no name or part of the module is unaccounted for.
pub fn voa_label(rec: &DecompositionRecord) -> Option<String> {
    if rec.residual != 0 {
        return None;
    }
    if rec.entries.is_empty() {
        return Some("0".into());
    }
    let mut parts = Vec::new();
    for (l, m) in &rec.entries {
        let name = VOA_LABELS.iter().find(|(k, _)| k == l)?.1;
        parts.extend(std::iter::repeat_n(name, *m));
    }
    Some(parts.join(" ⊕ "))
}

/// Gram matrix of the simple roots α, β.
pub fn gram() -> Matrix {
    Matrix::from_ints(&[&[2, -1], &[-1, 2]])
}

/// `((λ|α), (λ|β))` for `λ = a α + b β`.
pub fn pairings(a: &Rational, b: &Rational) -> (Rational, Rational) {
    let v = gram().mul_vec(&[a.clone(), b.clone()]);
    (v[0].clone(), v[1].clone())
}

/// Fundamental weights with their root coordinates and pairings against α, β.
pub fn weight_dict() -> Vec<(&'static str, (Rational, Rational), (Rational, Rational))> {
    [("λ_α", (frac(2, 3), frac(1, 3))), ("λ_β", (frac(1, 3), frac(2, 3)))]
        .into_iter()
        .map(|(n, (a, b))| {
            let p = pairings(&a, &b);
            (n, (a, b), p)
        })
        .collect()
}

pub struct Catalog {
    algebras: BTreeMap<String, Arc<AlgebraHandle>>,
    morphisms: BTreeMap<String, AlgebraMorphism>,
}

/// The shared catalog, built on first use.
pub fn get() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::build().expect("catalog builds"))
}

fn presentation(id: &str) -> Option<Presentation> {
    Some(match id {
        "heis" => heis_presentation(),
        "vir" => vir_presentation(),
        "vb" => vb_presentation(),
        "a_va1" => va1_presentation(),
        "a_va2" => va2_presentation(),
        "a_vp" => vp_presentation(),
        _ => return None,
    })
}

/// Splits `name(arg)` into its parts; a bare name has no argument.
pub fn split_call(spec: &str) -> Result<(&str, Option<&str>)> {
    let spec = spec.trim();
    match spec.find('(') {
        None => Ok((spec, None)),
        Some(i) if spec.ends_with(')') => {
            let arg = spec[i + 1..spec.len() - 1].trim();
            let arg = arg.split_once('=').map_or(arg, |(_, v)| v.trim());
            Ok((spec[..i].trim(), Some(arg)))
        }
        Some(_) => Err(Error::Invalid(format!("malformed module `{spec}`"))),
    }
}

impl Catalog {
    fn build() -> Result<Catalog> {
        let mut algebras = BTreeMap::new();
        for id in ALGEBRA_IDS {
            let pres = presentation(id).expect("listed id");
            algebras.insert(id.to_string(), Arc::new(AlgebraHandle::build(pres, crate::algebra::DEFAULT_PROBE)?));
        }
        let mut morphisms = BTreeMap::new();
        for (id, src, tgt, maps) in MORPHISMS {
            let m = AlgebraMorphism::from_exprs(id, algebras[*src].clone(), algebras[*tgt].clone(), maps)?;
            morphisms.insert(id.to_string(), m);
        }
        Ok(Catalog { algebras, morphisms })
    }

    pub fn algebra(&self, id: &str) -> Result<Arc<AlgebraHandle>> {
        self.algebras.get(id).cloned().ok_or_else(|| Error::UnknownId(id.into()))
    }

    pub fn morphism(&self, id: &str) -> Result<&AlgebraMorphism> {
        self.morphisms.get(id).ok_or_else(|| Error::UnknownId(id.into()))
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = &str> {
        self.morphisms.keys().map(String::as_str)
    }

    pub fn kernel(&self, morphism: &str) -> Result<Vec<Element>> {
        let m = self.morphism(morphism)?;
        let (_, gens) = KERNELS.iter().find(|(id, _)| *id == morphism).ok_or_else(|| Error::UnknownId(morphism.into()))?;
        gens.iter().map(|g| m.source.parse(g)).collect()
    }

    /// A module given as `family(param)` or as the id of a fixed module.
    pub fn module(&self, spec: &str) -> Result<FinModule> {
        let (name, arg) = split_call(spec)?;
        let (_, owner, param) = MODULE_FAMILIES.iter().find(|(id, _, _)| *id == name).ok_or_else(|| Error::UnknownId(name.into()))?;
        let p = match (param.is_empty(), arg) {
            (true, None) => rat::zero(),
            (false, Some(a)) => rat::parse(a).ok_or_else(|| Error::Invalid(format!("malformed rational `{a}`")))?,
            (true, Some(_)) => return Err(Error::Invalid(format!("`{name}` takes no parameter"))),
            (false, None) => return Err(Error::Invalid(format!("`{name}` needs a parameter {param}"))),
        };
        self.family(name, &self.algebra(owner)?, &p)
    }

    fn family(&self, name: &str, owner: &Arc<AlgebraHandle>, p: &Rational) -> Result<FinModule> {
        let one = |c: &Rational| Matrix::scalar(1, c);
        let ints = |rows: &[&[i64]]| Matrix::from_ints(rows);
        let half = frac(1, 2);
        let label = |s: &str| format!("{name}({s})");
        let o = owner.clone();
        match name {
            "heis_mod" => FinModule::from_named(o, 1, &[("x", one(p))], &label(&rat::fmt(p))),
            "vb_mod" => FinModule::from_named(o, 1, &[("x", one(p))], &label(&rat::fmt(p))),
            "vir_mod" => FinModule::from_named(o, 1, &[("y", one(p))], &label(&rat::fmt(p))),
            "va1_trivial" => FinModule::from_named(o, 1, &[], "trivial"),
            "va1_L_half" => FinModule::from_named(
                o,
                2,
                &[("e", ints(&[&[0, 1], &[0, 0]])), ("f", ints(&[&[0, 0], &[1, 0]])), ("h", ints(&[&[1, 0], &[0, -1]]))],
                "L_half",
            ),
            "va2_L0" => FinModule::from_named(o, 1, &[], "L(0)"),
            "va2_L_alpha" => {
                let acts: Vec<_> = VA2_GENS.iter().map(|g| (*g, va2_natural(g))).collect();
                FinModule::from_named(o, 3, &acts, "L(λ_α)")
            }
            "va2_L_beta" => {
                let acts: Vec<_> = VA2_GENS.iter().map(|g| (*g, va2_natural(g).transpose().scale(&int(-1)))).collect();
                FinModule::from_named(o, 3, &acts, "L(λ_β)")
            }
            "vp_mod_U0" => FinModule::from_named(o, 1, &[("y", one(p))], &label(&rat::fmt(p))),
            "vp_mod_Uhalf" => FinModule::from_named(
                o,
                2,
                &[
                    ("x", ints(&[&[1, 0], &[0, -1]])),
                    ("xa", ints(&[&[0, 1], &[0, 0]])),
                    ("xma", ints(&[&[0, 0], &[1, 0]])),
                    ("y", Matrix::diag(&[p - &half, p + &half])),
                ],
                &label(&rat::fmt(p)),
            ),
            _ => Err(Error::UnknownId(name.into())),
        }
    }

    /// The listed irreducible modules of a semisimple catalog algebra.
    pub fn irreducibles(&self, algebra: &str) -> Result<Vec<FinModule>> {
        let ids: &[&str] = match algebra {
            "a_va1" => &["va1_trivial", "va1_L_half"],
            "a_va2" => &["va2_L0", "va2_L_alpha", "va2_L_beta"],
            _ => return Err(Error::Invalid(format!("`{algebra}` has no listed irreducibles (not semisimple)"))),
        };
        ids.iter().map(|id| self.module(id)).collect()
    }
}

/// The catalog in the presentation-file language: algebras, morphisms and the irreducible modules.
pub fn source_file() -> SourceFile {
    let mut blocks = Vec::new();
    for id in ALGEBRA_IDS {
        let p = presentation(id).expect("listed id");
        let order = (!p.generators.is_empty()).then(|| {
            let w = p.order.weights();
            p.order
                .precedence()
                .iter()
                .map(|g| {
                    let i = g.0 as usize;
                    if w[i] == 1 { p.generators[i].clone() } else { format!("{}:{}", p.generators[i], w[i]) }
                })
                .collect()
        });
        blocks.push(Block::Algebra(AlgebraDecl { name: p.name, gens: p.generators, order, relations: p.relations, line: 0 }));
    }
    for (id, src, tgt, maps) in MORPHISMS {
        let tg = presentation(tgt).expect("listed id").generators;
        let maps = maps.iter().map(|(g, e)| (g.to_string(), parse_poly(e, &tg).expect("catalog image parses"))).collect();
        blocks.push(Block::Morphism(MorphismDecl { name: id.to_string(), source: src.to_string(), target: tgt.to_string(), maps, line: 0 }));
    }
    let c = get();
    for id in IRREDUCIBLE_IDS {
        let m = c.module(id).expect("listed module");
        let acts = m.owner.generators().iter().cloned().zip(m.actions.iter().cloned()).filter(|(_, a)| !a.is_zero()).collect();
        blocks.push(Block::Module(ModuleDecl { name: id.to_string(), over: m.owner.name().to_string(), dim: m.dim, acts, line: 0 }));
    }
    SourceFile { blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{KernelStatus, WellDefined};
    use crate::repmod::ModuleCheck;

    #[test]
    fn dimensions() {
        let c = get();
        assert_eq!(c.algebra("a_va1").unwrap().dim(), Some(5));
        assert_eq!(c.algebra("a_va2").unwrap().dim(), Some(19));
        for id in ["heis", "vir", "vb", "a_vp"] {
            assert!(!c.algebra(id).unwrap().is_finite(), "{id}");
        }
        assert!(matches!(c.algebra("nope"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn morphisms_well_defined() {
        let c = get();
        for id in c.morphism_ids() {
            assert_eq!(c.morphism(id).unwrap().check_well_defined(), WellDefined::Pass, "{id}");
        }
    }

    #[test]
    fn fixed_modules_check() {
        let c = get();
        for (id, _, p) in MODULE_FAMILIES {
            let spec = if p.is_empty() { id.to_string() } else { format!("{id}(3/7)") };
            let m = c.module(&spec).unwrap();
            assert_eq!(m.check_module(), ModuleCheck::Pass, "{spec}");
        }
        assert!(c.module("heis_mod").is_err());
        assert!(c.module("va1_trivial(1)").is_err());
        assert_eq!(c.module("heis_mod(s=1/2)").unwrap().actions[0], Matrix::scalar(1, &frac(1, 2)));
    }

    #[test]
    fn kernels_certify() {
        let c = get();
        for id in ["heis_to_va1", "vir_to_va1"] {
            let m = c.morphism(id).unwrap();
            let cert = m.certify_kernel(&c.kernel(id).unwrap(), 8).unwrap();
            assert_eq!(cert.status, KernelStatus::Exact, "{id}");
        }
    }

    #[test]
    fn weights() {
        let w = weight_dict();
        assert_eq!(w[0].2, (int(1), int(0)));
        assert_eq!(w[1].2, (int(0), int(1)));
        assert_eq!(pairings(&int(1), &int(0)).1, int(-1));
    }

    #[test]
    fn labels() {
        let rec = DecompositionRecord { entries: vec![("L_half".into(), 2)], residual: 0 };
        assert_eq!(voa_label(&rec).unwrap(), "V_{A1+½α} ⊕ V_{A1+½α}");
        assert_eq!(voa_label(&DecompositionRecord::default()).unwrap(), "0");
    }
}
