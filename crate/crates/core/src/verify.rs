//! The verification suite: one deterministic case per acceptance criterion.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::AlgebraHandle;
use crate::catalog::{self, Catalog, VA2_DERIVED};
use crate::chars::{artin_solve, char_vector, symmetry_check};
use crate::error::Result;
use crate::induct::{composition_check, frobenius_check, induce, kernel_action_radical, restrict};
use crate::morphism::KernelStatus;
use crate::rat::{self, frac, Rational};
use crate::repmod::{decompose, hom_space, FinModule};
use crate::rewrite::{confluence_fuzz, random_poly, FuzzOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub status: String,
    pub expected: Value,
    pub actual: Value,
    /// `claim` for results stated with the algebras, `derived` for consequences computed here,
    /// `property` for invariant suites.
    pub provenance: String,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

type CaseFn = fn(&Catalog) -> Result<(Value, Value)>;

pub struct Case {
    pub id: &'static str,
    pub description: &'static str,
    pub provenance: &'static str,
    run: CaseFn,
}

pub const CASES: &[Case] = &[
    Case { id: "ac01", description: "A(V_A1) has dimension 5 with basis 1, e, f, h, h^2", provenance: "claim", run: ac01 },
    Case { id: "ac02", description: "A(V_A2) has dimension 19; derived relations reduce to 0", provenance: "claim", run: ac02 },
    Case { id: "ac03", description: "kernel certificates for the catalog morphisms", provenance: "claim", run: ac03 },
    Case { id: "ac04", description: "Heisenberg inductions into A(V_A1)", provenance: "claim", run: ac04 },
    Case { id: "ac05", description: "Borel-type inductions into A(V_A1)", provenance: "claim", run: ac05 },
    Case { id: "ac06", description: "Virasoro inductions into A(V_A1)", provenance: "claim", run: ac06 },
    Case { id: "ac07", description: "induction and restriction between A(V_A1) and A(V_A2)", provenance: "claim", run: ac07 },
    Case { id: "ac08", description: "sums of squares of irreducible dimensions", provenance: "derived", run: ac08 },
    Case { id: "ac09", description: "Frobenius reciprocity over the catalog grid", provenance: "claim", run: ac09 },
    Case { id: "ac10", description: "composition of inductions heis -> a_va1 -> a_va2", provenance: "claim", run: ac10 },
    Case { id: "ac11", description: "A(V_P): basis slice, J^2 = 0, skew derivation", provenance: "claim", run: ac11 },
    Case { id: "ac12", description: "kernel radical table for A(V_P) modules", provenance: "claim", run: ac12 },
    Case { id: "ac13", description: "inductions along A(V_P) -> A(V_A2)", provenance: "claim", run: ac13 },
    Case { id: "ac14", description: "Artin induction for A(V_A1)", provenance: "claim", run: ac14 },
    Case { id: "ac15", description: "property suites: rewriting, associativity, fuzzing, characters", provenance: "property", run: ac15 },
];

pub fn case(id: &str) -> Option<&'static Case> {
    CASES.iter().find(|c| c.id == id)
}

pub fn run_case(c: &Case) -> CaseResult {
    let (status, expected, actual) = match (c.run)(catalog::get()) {
        Ok((e, a)) => (if e == a { "PASS" } else { "FAIL" }, e, a),
        Err(err) => ("FAIL", Value::Null, json!({ "error": err.to_string() })),
    };
    CaseResult { case: c.id.into(), status: status.into(), expected, actual, provenance: c.provenance.into() }
}

pub fn run_all() -> Vec<CaseResult> {
    CASES.iter().map(run_case).collect()
}

fn words(h: &AlgebraHandle, ws: &[crate::Word]) -> BTreeSet<String> {
    ws.iter().map(|w| h.render_word(w)).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Induces `family(p)` along `morphism` for each parameter and reports dimension, decomposition and label.
fn induction_table(c: &Catalog, morphism: &str, family: &str, params: &[&str]) -> Result<Value> {
    let m = c.morphism(morphism)?;
    let irr = c.irreducibles(m.target.name())?;
    let ker = c.kernel(morphism)?;
    let mut out = serde_json::Map::new();
    for p in params {
        let md = c.module(&format!("{family}({p})"))?;
        let r = induce(m, &ker, &md)?.decomposed(&irr)?;
        out.insert(p.to_string(), json!({ "dim": r.module.dim, "decomposition": r.decomposition.unwrap().render(), "label": r.voa_label }));
    }
    Ok(Value::Object(out))
}

fn row(dim: usize, decomposition: &str, label: &str) -> Value {
    json!({ "dim": dim, "decomposition": decomposition, "label": label })
}

const HALF: &str = "V_{A1+½α}";

fn ac01(c: &Catalog) -> Result<(Value, Value)> {
    let a = c.algebra("a_va1")?;
    let expected = json!({ "dim": 5, "basis": set(&["1", "e", "f", "h", "h h"]) });
    let actual = json!({ "dim": a.dim(), "basis": words(&a, a.basis()?) });
    Ok((expected, actual))
}

fn ac02(c: &Catalog) -> Result<(Value, Value)> {
    let a = c.algebra("a_va2")?;
    let derived: Vec<String> = VA2_DERIVED.iter().map(|r| Ok(a.render(&a.parse(r)?))).collect::<Result<_>>()?;
    let expected = json!({ "dim": 19, "independent": true, "derived": vec!["0"; VA2_DERIVED.len()] });
    // normal words are independent when the system is confluent in every degree
    let independent = a.certificate() == crate::rewrite::Certificate::Complete;
    Ok((expected, json!({ "dim": a.dim(), "independent": independent, "derived": derived })))
}

fn ac03(c: &Catalog) -> Result<(Value, Value)> {
    let mut actual = serde_json::Map::new();
    for id in ["heis_to_va1", "vir_to_va1", "vb_to_va1", "vp_to_va2"] {
        let m = c.morphism(id)?;
        let ker = c.kernel(id)?;
        let zero = ker.iter().map(|k| m.apply(k).map(|x| x.is_zero())).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
        let cert = m.certify_kernel(&ker, catalog::kernel_probe(id))?;
        actual.insert(id.into(), json!({ "maps_to_zero": zero, "status": cert.status, "degree": cert.probe_degree }));
    }
    let k = c.morphism("va1_to_va2")?.kernel_basis_finite()?;
    actual.insert("va1_to_va2".into(), json!({ "kernel_dim": k.len() }));
    let ok = |d: usize| json!({ "maps_to_zero": true, "status": KernelStatus::Exact, "degree": d });
    let expected = json!({
        "heis_to_va1": ok(12), "vir_to_va1": ok(12), "vb_to_va1": ok(10), "vp_to_va2": ok(8),
        "va1_to_va2": { "kernel_dim": 0 },
    });
    Ok((expected, Value::Object(actual)))
}

fn ac04(c: &Catalog) -> Result<(Value, Value)> {
    let params = ["0", "1", "-1", "2", "-3", "5/2", "7"];
    let expected = json!({
        "0": row(1, "trivial:1", "V_{A1}"), "1": row(2, "L_half:1", HALF), "-1": row(2, "L_half:1", HALF),
        "2": row(0, "0", "0"), "-3": row(0, "0", "0"), "5/2": row(0, "0", "0"), "7": row(0, "0", "0"),
    });
    Ok((expected, induction_table(c, "heis_to_va1", "heis_mod", &params)?))
}

fn ac05(c: &Catalog) -> Result<(Value, Value)> {
    let params = ["0", "1", "-1", "2", "-2"];
    let expected = json!({
        "0": row(1, "trivial:1", "V_{A1}"), "1": row(2, "L_half:1", HALF),
        "-1": row(0, "0", "0"), "2": row(0, "0", "0"), "-2": row(0, "0", "0"),
    });
    Ok((expected, induction_table(c, "vb_to_va1", "vb_mod", &params)?))
}

fn ac06(c: &Catalog) -> Result<(Value, Value)> {
    let params = ["0", "1/4", "1", "-1/4", "3/7"];
    let expected = json!({
        "0": row(1, "trivial:1", "V_{A1}"), "1/4": row(4, "L_half:2", &format!("{HALF} ⊕ {HALF}")),
        "1": row(0, "0", "0"), "-1/4": row(0, "0", "0"), "3/7": row(0, "0", "0"),
    });
    Ok((expected, induction_table(c, "vir_to_va1", "vir_mod", &params)?))
}

fn ac07(c: &Catalog) -> Result<(Value, Value)> {
    let m = c.morphism("va1_to_va2")?;
    let irr1 = c.irreducibles("a_va1")?;
    let irr2 = c.irreducibles("a_va2")?;
    let mut ind = serde_json::Map::new();
    for md in &irr1 {
        let r = induce(m, &[], md)?.decomposed(&irr2)?;
        ind.insert(md.label.clone(), json!({ "dim": r.module.dim, "decomposition": r.decomposition.unwrap().render() }));
    }
    let mut res = serde_json::Map::new();
    for k in &irr2 {
        res.insert(k.label.clone(), json!(decompose(&restrict(m, k)?, &irr1)?.render()));
    }
    let expected = json!({
        "induce": {
            "trivial": { "dim": 7, "decomposition": "L(0):1 + L(λ_α):1 + L(λ_β):1" },
            "L_half": { "dim": 6, "decomposition": "L(λ_α):1 + L(λ_β):1" },
        },
        "restrict": { "L(0)": "trivial:1", "L(λ_α)": "trivial:1 + L_half:1", "L(λ_β)": "trivial:1 + L_half:1" },
    });
    Ok((expected, json!({ "induce": ind, "restrict": res })))
}

fn ac08(c: &Catalog) -> Result<(Value, Value)> {
    let mut actual = serde_json::Map::new();
    for id in ["a_va1", "a_va2"] {
        let irr = c.irreducibles(id)?;
        let squares: usize = irr.iter().map(|l| l.dim * l.dim).sum();
        // Schur: End is one-dimensional and distinct irreducibles have no maps between them
        let mut schur = true;
        for (i, l) in irr.iter().enumerate() {
            for (j, k) in irr.iter().enumerate() {
                schur &= hom_space(l, k)?.len() == usize::from(i == j);
            }
        }
        actual.insert(id.into(), json!({ "sum_of_squares": squares, "dim": c.algebra(id)?.dim(), "schur": schur }));
    }
    let expected = json!({
        "a_va1": { "sum_of_squares": 5, "dim": 5, "schur": true },
        "a_va2": { "sum_of_squares": 19, "dim": 19, "schur": true },
    });
    Ok((expected, Value::Object(actual)))
}

/// Source modules probed for each finite-target morphism.
fn frobenius_sources(c: &Catalog, morphism: &str) -> Result<Vec<FinModule>> {
    let specs: Vec<String> = match morphism {
        "heis_to_va1" => ["0", "1", "-1", "2", "1/2"].iter().map(|p| format!("heis_mod({p})")).collect(),
        "vb_to_va1" => ["0", "1", "-1", "2", "1/2"].iter().map(|p| format!("vb_mod({p})")).collect(),
        "vir_to_va1" => ["0", "1/4", "1", "-1/4"].iter().map(|p| format!("vir_mod({p})")).collect(),
        "va1_to_va2" => vec!["va1_trivial".into(), "va1_L_half".into()],
        "vp_to_va2" => ["vp_mod_U0(0)", "vp_mod_U0(1)", "vp_mod_U0(-1)", "vp_mod_U0(3)", "vp_mod_Uhalf(1/2)", "vp_mod_Uhalf(-1/2)", "vp_mod_Uhalf(3)"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        _ => Vec::new(),
    };
    specs.iter().map(|s| c.module(s)).collect()
}

fn ac09(c: &Catalog) -> Result<(Value, Value)> {
    let mut pairs = 0;
    let mut failures = Vec::new();
    for id in catalog::FINITE_TARGET_MORPHISMS {
        let m = c.morphism(id)?;
        let ker = c.kernel(id)?;
        for src in frobenius_sources(c, id)? {
            for k in c.irreducibles(m.target.name())? {
                let f = frobenius_check(m, &ker, &src, &k)?;
                pairs += 1;
                if !f.passed() {
                    failures.push(format!("{id}: {} vs {}: {} != {}", src.label, k.label, f.induced_side, f.restricted_side));
                }
            }
        }
    }
    Ok((json!({ "pairs": 55, "failures": Vec::<String>::new() }), json!({ "pairs": pairs, "failures": failures })))
}

fn ac10(c: &Catalog) -> Result<(Value, Value)> {
    let m1 = c.morphism("heis_to_va1")?;
    let m2 = c.morphism("va1_to_va2")?;
    let irr = c.irreducibles("a_va2")?;
    let (k1, k2, k12) = (c.kernel("heis_to_va1")?, c.kernel("va1_to_va2")?, c.kernel("heis_to_va2")?);
    let mut actual = serde_json::Map::new();
    for s in ["0", "1", "-1", "2"] {
        let chk = composition_check(m1, m2, &k1, &k2, &k12, &c.module(&format!("heis_mod({s})"))?, &irr)?;
        actual.insert(s.into(), json!({ "one_step": chk.one_step.render(), "two_step": chk.two_step.render() }));
    }
    let both = |d: &str| json!({ "one_step": d, "two_step": d });
    let expected = json!({
        "0": both("L(0):1 + L(λ_α):1 + L(λ_β):1"),
        "1": both("L(λ_α):1 + L(λ_β):1"),
        "-1": both("L(λ_α):1 + L(λ_β):1"),
        "2": both("0"),
    });
    Ok((expected, Value::Object(actual)))
}

/// The words of length at most 5 in the listed basis families of A(V_P).
pub fn vp_listed_slice() -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let pw = |g: &str, k: usize| vec![g; k].join(" ");
    let join = |parts: &[String]| {
        let s: Vec<&str> = parts.iter().map(String::as_str).filter(|p| !p.is_empty()).collect();
        if s.is_empty() { "1".to_string() } else { s.join(" ") }
    };
    for i in 0..=2 {
        for j in 0..=5 - i {
            out.insert(join(&[pw("x", i), pw("y", j)]));
        }
    }
    for g in ["xa", "xma"] {
        for n in 0..=4 {
            out.insert(join(&[g.to_string(), pw("y", n)]));
        }
    }
    for g in ["xb", "xab"] {
        for i in 0..=2 {
            out.insert(join(&[g.to_string(), pw("x", i)]));
        }
    }
    out
}

const VP_J: &[&str] = &["xb", "xb x", "xb x x", "xab", "xab x", "xab x x"];

fn ac11(c: &Catalog) -> Result<(Value, Value)> {
    let a = c.algebra("a_vp")?;
    let slice = words(&a, &a.normal_words(5)?);
    let mut nonzero = Vec::new();
    for p in VP_J {
        for q in VP_J {
            let prod = a.parse(&format!("{p} {q}"))?;
            if !prod.is_zero() {
                nonzero.push(format!("({p})({q})"));
            }
        }
    }
    let mut delta = serde_json::Map::new();
    for (el, d) in [("1", "0"), ("x", "0"), ("x x", "0"), ("xa", "-xa"), ("xma", "xma")] {
        let (y, e) = (a.gen("y")?, a.parse(el)?);
        let lhs = a.sub(&a.mul(&y, &e)?, &a.mul(&e, &y)?)?;
        let rhs = a.parse(d)?;
        delta.insert(el.into(), json!(lhs == rhs));
    }
    let expected = json!({
        "slice": vp_listed_slice(),
        "nonzero_j_products": Vec::<String>::new(),
        "j_products": 36,
        "delta": { "1": true, "x": true, "x x": true, "xa": true, "xma": true },
    });
    let actual = json!({ "slice": slice, "nonzero_j_products": nonzero, "j_products": VP_J.len() * VP_J.len(), "delta": delta });
    Ok((expected, actual))
}

fn ac12(c: &Catalog) -> Result<(Value, Value)> {
    let m = c.morphism("vp_to_va2")?;
    let ker = c.kernel("vp_to_va2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let special_u0 = [rat::int(0), rat::int(1), rat::int(-1)];
    let special_uh = [frac(1, 2), frac(-1, 2)];
    let mut points: Vec<Rational> = special_u0.iter().chain(&special_uh).cloned().collect();
    while points.len() < 15 {
        let t = frac(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        if !points.contains(&t) {
            points.push(t);
        }
    }
    let (mut expected, mut actual) = (serde_json::Map::new(), serde_json::Map::new());
    for t in &points {
        let ts = rat::fmt(t);
        for (fam, special) in [("vp_mod_U0", &special_u0[..]), ("vp_mod_Uhalf", &special_uh[..])] {
            let md = c.module(&format!("{fam}({ts})"))?;
            let rad = kernel_action_radical(m, &ker, &md)?;
            let key = format!("{fam}({ts})");
            expected.insert(key.clone(), json!(special.contains(t)));
            actual.insert(key, json!(rad.dim() == 0));
        }
    }
    Ok((Value::Object(expected), Value::Object(actual)))
}

fn ac13(c: &Catalog) -> Result<(Value, Value)> {
    let mut actual = induction_table(c, "vp_to_va2", "vp_mod_U0", &["0", "1", "-1", "3"])?;
    let uh = induction_table(c, "vp_to_va2", "vp_mod_Uhalf", &["1/2", "-1/2", "3"])?;
    let obj = actual.as_object_mut().unwrap();
    let mut renamed = serde_json::Map::new();
    for (k, v) in std::mem::take(obj) {
        renamed.insert(format!("U0({k})"), v);
    }
    for (k, v) in uh.as_object().unwrap() {
        renamed.insert(format!("Uhalf({k})"), v.clone());
    }
    let zero = row(0, "0", "0");
    let expected = json!({
        "U0(0)": row(1, "L(0):1", "V_{A2}"), "U0(1)": row(3, "L(λ_β):1", "V_{A2+λβ}"), "U0(-1)": zero, "U0(3)": zero,
        "Uhalf(1/2)": row(3, "L(λ_α):1", "V_{A2+λα}"), "Uhalf(-1/2)": zero, "Uhalf(3)": zero,
    });
    Ok((expected, Value::Object(renamed)))
}

fn ac14(c: &Catalog) -> Result<(Value, Value)> {
    let a = c.algebra("a_va1")?;
    let irr = c.irreducibles("a_va1")?;
    let sol = artin_solve(&a, &a.parse("1/4 h h")?, &[rat::int(0), frac(1, 4)], &irr)?;
    let coeffs: Vec<Vec<String>> = sol.coefficients.iter().map(|r| r.iter().map(rat::fmt).collect()).collect();
    let induced: Vec<String> = sol.induced.iter().map(|r| r.render()).collect();
    let collide = artin_solve(&a, &a.parse("1/4 h h")?, &[rat::int(0), rat::int(0)], &irr).is_err();
    let expected = json!({
        "labels": ["trivial", "L_half"],
        "induced": ["trivial:1", "L_half:2"],
        "coefficients": [["1", "0"], ["0", "1/2"]],
        "equal_weights_rejected": true,
    });
    let actual = json!({ "labels": sol.labels, "induced": induced, "coefficients": coeffs, "equal_weights_rejected": collide });
    Ok((expected, actual))
}

/// Rewriting, associativity, fuzzing and character-symmetry checks over the catalog.
pub fn property_report(c: &Catalog, inputs: usize, fuzz_trials: usize) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut report = serde_json::Map::new();
    for id in catalog::ALGEBRA_IDS {
        let a = c.algebra(id)?;
        let sys = a.system();
        let n = a.num_gens();
        let (mut idem, mut lin) = (true, true);
        for _ in 0..inputs {
            let p = random_poly(&mut rng, n, 6, 4);
            let q = random_poly(&mut rng, n, 6, 4);
            let k = frac(rng.gen_range(-5..=5), rng.gen_range(1..=5));
            let rp = sys.reduce(&p);
            idem &= sys.reduce(&rp) == rp;
            lin &= sys.reduce(&(&p + &q)) == &rp + &sys.reduce(&q);
            lin &= sys.reduce(&p.scale(&k)) == rp.scale(&k);
        }
        let fuzz = matches!(confluence_fuzz(sys, fuzz_trials, 500), FuzzOutcome::Pass { .. });
        report.insert(id.to_string(), json!({ "idempotent": idem, "linear": lin, "fuzz": fuzz }));
    }
    for id in ["a_va1", "a_va2"] {
        let a = c.algebra(id)?;
        let assoc = associativity_holds(&a)?;
        let mut symmetric = true;
        for l in c.irreducibles(id)? {
            symmetric &= symmetry_check(&a, &char_vector(&l)?)?.is_none();
        }
        let entry = report.get_mut(id).unwrap().as_object_mut().unwrap();
        entry.insert("associative".into(), json!(assoc));
        entry.insert("characters_symmetric".into(), json!(symmetric));
    }
    Ok(Value::Object(report))
}

/// `(b_i b_j) b_k = b_i (b_j b_k)` for every triple of basis elements, via structure constants.
pub fn associativity_holds(a: &AlgebraHandle) -> Result<bool> {
    let s = a.structure_constants()?;
    let n = s.len();
    let unit = |i: usize| {
        let mut v = vec![rat::zero(); n];
        v[i] = rat::one();
        v
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = a.mul_coords(&s[i][j], &unit(k))?;
                let right = a.mul_coords(&unit(i), &s[j][k])?;
                if left != right {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn ac15(c: &Catalog) -> Result<(Value, Value)> {
    let actual = property_report(c, 1000, 500)?;
    let mut expected = serde_json::Map::new();
    for id in catalog::ALGEBRA_IDS {
        let mut e = json!({ "idempotent": true, "linear": true, "fuzz": true });
        if ["a_va1", "a_va2"].contains(id) {
            e["associative"] = json!(true);
            e["characters_symmetric"] = json!(true);
        }
        expected.insert(id.to_string(), e);
    }
    Ok((Value::Object(expected), actual))
}

