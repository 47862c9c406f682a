//! Command-line front end. `run_cli` returns the exit code and the report instead of printing,
//! so the binary stays a one-liner and tests can drive it directly.

use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{AlgebraHandle, Dimension, DEFAULT_PROBE};
use crate::catalog::{self, Catalog};
use crate::chars::{artin_solve, char_vector};
use crate::error::Error;
use crate::induct::{induce, restrict};
use crate::iolang::{self, Workspace};
use crate::morphism::{AlgebraMorphism, KernelStatus, WellDefined};
use crate::rat;
use crate::repmod::{decompose, FinModule, ModuleCheck};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "zhuind", version, about = "Exact computations with presented algebras, their modules, induction and restriction")]
struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Degree bound for completing algebras read from files.
    #[arg(long = "max-deg", global = true, default_value_t = DEFAULT_PROBE)]
    max_deg: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a presentation file, complete its algebras and check its morphisms and modules.
    Check { file: String },
    /// Dimension of a catalog algebra or of `FILE#NAME`.
    Dim { target: String },
    /// Normal form of an expression.
    Nf { algebra: String, expr: String },
    /// Certify the catalog kernel of a morphism.
    Kernel {
        #[arg(long)]
        via: String,
        /// Degree to certify to; defaults to the catalog's bound for the morphism.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Induce a module along a morphism and decompose the result.
    Induce {
        #[arg(long)]
        via: String,
        #[arg(long)]
        module: String,
    },
    /// Restrict a module along a morphism.
    Restrict {
        #[arg(long)]
        via: String,
        #[arg(long)]
        module: String,
    },
    /// Character of a module on the normal-word basis.
    Char {
        #[arg(long)]
        module: String,
    },
    /// Express irreducible characters through induced ones.
    Artin {
        #[arg(long)]
        target: String,
    },
    /// Run verification cases.
    Verify {
        #[arg(default_value = "all")]
        case: String,
    },
}

/// Failure of a command: exit code 1 for failed checks, 2 for bad input.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Completion { .. } | Error::CertificateInsufficient { .. } => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

/// Text and JSON forms of a report plus whether every check in it passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

pub fn run_cli<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let out = if cli.json { serde_json::to_string_pretty(&r.json).expect("serializable") + "\n" } else { r.text };
            (if r.ok { 0 } else { 1 }, out)
        }
        Err(f) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&json!({ "error": f.message, "exit": f.code })).expect("serializable") + "\n"
            } else {
                format!("error: {}\n", f.message)
            };
            (f.code, out)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Check { file } => check(file, cli.max_deg),
        Command::Dim { target } => dim(target, cli.max_deg),
        Command::Nf { algebra, expr } => nf(algebra, expr, cli.max_deg),
        Command::Kernel { via, degree } => kernel(via, *degree, cli.max_deg),
        Command::Induce { via, module } => induce_cmd(via, module, cli.max_deg),
        Command::Restrict { via, module } => restrict_cmd(via, module, cli.max_deg),
        Command::Char { module } => char_cmd(module, cli.max_deg),
        Command::Artin { target } => artin(target),
        Command::Verify { case } => verify_cmd(case),
    }
}

fn load(path: &str, max_deg: usize) -> Result<Workspace, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
    let cat = catalog::get();
    let gens = |n: &str| cat.algebra(n).ok().map(|a| a.generators().to_vec());
    let file = iolang::parse_file_with(&src, &gens).map_err(|e| usage(format!("{path}: {e}")))?;
    let ext = |n: &str| cat.algebra(n).ok();
    Ok(iolang::elaborate(&file, max_deg, &ext)?)
}

/// `FILE#NAME` refers into a presentation file, anything else into the catalog.
fn split_ref(s: &str) -> Option<(&str, &str)> {
    s.rsplit_once('#')
}

fn algebra(r: &str, max_deg: usize) -> Result<Arc<AlgebraHandle>, Failure> {
    match split_ref(r) {
        Some((file, name)) => load(file, max_deg)?.algebras.get(name).cloned().ok_or_else(|| usage(format!("unknown algebra `{name}` in {file}"))),
        None => Ok(catalog::get().algebra(r)?),
    }
}

/// A morphism and its kernel generators; file morphisms carry none.
fn morphism(r: &str, max_deg: usize) -> Result<(AlgebraMorphism, Vec<crate::Element>), Failure> {
    match split_ref(r) {
        Some((file, name)) => {
            let m = load(file, max_deg)?.morphisms.remove(name).ok_or_else(|| usage(format!("unknown morphism `{name}` in {file}")))?;
            Ok((m, Vec::new()))
        }
        None => {
            let c = catalog::get();
            Ok((c.morphism(r)?.clone(), c.kernel(r)?))
        }
    }
}

fn module(r: &str, max_deg: usize) -> Result<FinModule, Failure> {
    match split_ref(r) {
        Some((file, name)) => load(file, max_deg)?.modules.remove(name).ok_or_else(|| usage(format!("unknown module `{name}` in {file}"))),
        None => Ok(catalog::get().module(r)?),
    }
}

/// Irreducibles of a semisimple catalog algebra, or none. File algebras that merely share a
/// catalog name get none.
fn irreducibles(c: &Catalog, a: &Arc<AlgebraHandle>) -> Option<Vec<FinModule>> {
    let builtin = c.algebra(a.name()).ok()?;
    if !Arc::ptr_eq(&builtin, a) {
        return None;
    }
    c.irreducibles(a.name()).ok()
}

fn dimension_json(d: &Dimension) -> Value {
    match d {
        Dimension::Finite(n) => json!({ "finite": n }),
        Dimension::UnboundedAt { probe, profile } => json!({ "unbounded_at": probe, "profile": profile }),
    }
}

fn check(path: &str, max_deg: usize) -> Result<Report, Failure> {
    let ws = load(path, max_deg)?;
    let mut text = String::new();
    let mut ok = true;
    let mut algebras = serde_json::Map::new();
    for (name, a) in &ws.algebras {
        let probe = match a.certificate() {
            crate::rewrite::Certificate::Complete => DEFAULT_PROBE,
            crate::rewrite::Certificate::Degree(d) => d.min(DEFAULT_PROBE),
        };
        let profile = a.profile(probe)?;
        text.push_str(&format!("algebra {name}: {} rules, certificate {}, dimension {}\n", a.system().rules().len(), a.certificate(), a.dimension()));
        text.push_str(&format!("  normal words per length: {}\n", profile.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")));
        algebras.insert(
            name.clone(),
            json!({
                "rules": a.system().rules().len(),
                "certificate": a.certificate().to_string(),
                "dimension": dimension_json(a.dimension()),
                "profile": profile,
            }),
        );
    }
    let mut morphisms = serde_json::Map::new();
    for (name, m) in &ws.morphisms {
        let status = match m.check_well_defined() {
            WellDefined::Pass => "pass".to_string(),
            WellDefined::Violation { relation, residue } => {
                ok = false;
                format!("violation: relation {relation} maps to {}", m.target.render(&residue))
            }
        };
        text.push_str(&format!("morphism {name}: {status}\n"));
        morphisms.insert(name.clone(), json!(status));
    }
    let mut modules = serde_json::Map::new();
    for (name, md) in &ws.modules {
        let status = match md.check_module() {
            ModuleCheck::Pass => "pass".to_string(),
            ModuleCheck::Violation { relation } => {
                ok = false;
                let r = &md.owner.presentation().relations[relation];
                format!("violation: relation {}", r.render(md.owner.generators(), Some(&md.owner.presentation().order)))
            }
        };
        text.push_str(&format!("module {name}: {status}\n"));
        modules.insert(name.clone(), json!(status));
    }
    Ok(Report { text, json: json!({ "algebras": algebras, "morphisms": morphisms, "modules": modules, "ok": ok }), ok })
}

fn dim(target: &str, max_deg: usize) -> Result<Report, Failure> {
    let a = algebra(target, max_deg)?;
    let basis: Option<Vec<String>> = a.basis().ok().map(|b| b.iter().map(|w| a.render_word(w)).collect());
    let mut text = format!("{}: {}\n", a.name(), a.dimension());
    if let Some(b) = &basis {
        text.push_str(&format!("  basis: {}\n", b.join(", ")));
    }
    let json = json!({ "algebra": a.name(), "dimension": dimension_json(a.dimension()), "basis": basis, "certificate": a.certificate().to_string() });
    Ok(Report { text, json, ok: true })
}

fn nf(alg: &str, expr: &str, max_deg: usize) -> Result<Report, Failure> {
    let a = algebra(alg, max_deg)?;
    let e = a.parse(expr)?;
    let out = a.render(&e);
    Ok(Report { text: format!("{out}\n"), json: json!({ "algebra": a.name(), "input": expr, "normal_form": out }), ok: true })
}

fn kernel(via: &str, degree: Option<usize>, max_deg: usize) -> Result<Report, Failure> {
    let (m, ker) = morphism(via, max_deg)?;
    let mut text = format!("morphism {}: {} -> {}\n", m.name, m.source.name(), m.target.name());
    if m.source.is_finite() && ker.is_empty() {
        let k = m.kernel_basis_finite()?;
        let rendered: Vec<String> = k.iter().map(|e| m.source.render(e)).collect();
        text.push_str(&format!("kernel dimension {}\n", k.len()));
        for r in &rendered {
            text.push_str(&format!("  {r}\n"));
        }
        return Ok(Report { text, json: json!({ "morphism": m.name, "kernel_dim": k.len(), "kernel_basis": rendered }), ok: true });
    }
    let degree = degree.unwrap_or_else(|| catalog::kernel_probe(via));
    let cert = m.certify_kernel(&ker, degree)?;
    let gens: Vec<String> = ker.iter().map(|e| m.source.render(e)).collect();
    text.push_str(&format!("candidates: {}\n", gens.join("; ")));
    text.push_str(&format!("status: {:?} to degree {}\n", cert.status, cert.probe_degree));
    for c in &cert.checks {
        text.push_str(&format!("  degree {:>2}: source {:>3} = ideal {:>3} + image {:>3}{}\n", c.degree, c.source_dim, c.ideal_dim, c.image_dim, if c.exact() { "" } else { "  (gap)" }));
    }
    if let Some(i) = cert.offender {
        text.push_str(&format!("candidate {} does not map to zero\n", gens[i]));
    }
    let ok = cert.status == KernelStatus::Exact;
    Ok(Report { text, json: json!({ "morphism": m.name, "candidates": gens, "status": cert.status, "degree": degree, "checks": cert.checks }), ok })
}

fn actions_json(m: &FinModule) -> Value {
    let acts: serde_json::Map<String, Value> = m.owner.generators().iter().zip(&m.actions).map(|(g, a)| (g.clone(), json!(a.render()))).collect();
    Value::Object(acts)
}

fn induce_cmd(via: &str, spec: &str, max_deg: usize) -> Result<Report, Failure> {
    let (m, ker) = morphism(via, max_deg)?;
    let md = module(spec, max_deg)?;
    let mut r = induce(&m, &ker, &md)?;
    if let Some(irr) = irreducibles(catalog::get(), &m.target) {
        r = r.decomposed(&irr)?;
    }
    let mut text = format!("Ind along {} of {}: dim {}\n", m.name, md.label, r.module.dim);
    text.push_str(&format!("  reduced source module dim {}, tensor dim {}\n", r.reduced_dim, r.tensor_dim));
    if let Some(d) = &r.decomposition {
        text.push_str(&format!("  decomposition: {}\n", d.render()));
    }
    if let Some(l) = &r.voa_label {
        text.push_str(&format!("  label: {l}\n"));
    }
    let json = json!({
        "morphism": m.name,
        "module": md.label,
        "dim": r.module.dim,
        "reduced_dim": r.reduced_dim,
        "tensor_dim": r.tensor_dim,
        "decomposition": r.decomposition,
        "voa_label": r.voa_label,
        "actions": actions_json(&r.module),
    });
    Ok(Report { text, json, ok: true })
}

fn restrict_cmd(via: &str, spec: &str, max_deg: usize) -> Result<Report, Failure> {
    let (m, _) = morphism(via, max_deg)?;
    let md = module(spec, max_deg)?;
    let r = restrict(&m, &md)?;
    let dec = match irreducibles(catalog::get(), &m.source) {
        Some(irr) => Some(decompose(&r, &irr)?),
        None => None,
    };
    let mut text = format!("Res along {} of {}: dim {}\n", m.name, md.label, r.dim);
    for (g, a) in m.source.generators().iter().zip(&r.actions) {
        text.push_str(&format!("  {g} = {}\n", a.render()));
    }
    if let Some(d) = &dec {
        text.push_str(&format!("  decomposition: {}\n", d.render()));
    }
    let ok = r.check_module() == ModuleCheck::Pass;
    Ok(Report { text, json: json!({ "morphism": m.name, "module": md.label, "dim": r.dim, "actions": actions_json(&r), "decomposition": dec }), ok })
}

fn char_cmd(spec: &str, max_deg: usize) -> Result<Report, Failure> {
    let md = module(spec, max_deg)?;
    let chi = char_vector(&md)?;
    let basis = md.owner.basis()?;
    let mut text = format!("character of {} over {}\n", md.label, md.owner.name());
    let mut values = serde_json::Map::new();
    for (w, v) in basis.iter().zip(&chi.values) {
        let name = md.owner.render_word(w);
        text.push_str(&format!("  χ({name}) = {}\n", rat::fmt(v)));
        values.insert(name, json!(rat::fmt(v)));
    }
    Ok(Report { text, json: json!({ "module": md.label, "owner": md.owner.name(), "values": values }), ok: true })
}

fn artin(target: &str) -> Result<Report, Failure> {
    let c = catalog::get();
    let a = c.algebra(target)?;
    if target != "a_va1" {
        return Err(usage(format!("no conformal-vector data for `{target}`; Artin data is available for a_va1")));
    }
    let irr = c.irreducibles(target)?;
    let weights = [rat::int(0), rat::frac(1, 4)];
    let sol = artin_solve(&a, &a.parse("1/4 h h")?, &weights, &irr)?;
    let names: Vec<String> = weights.iter().map(|w| format!("Ind_{}", rat::fmt(w))).collect();
    let mut text = format!("Artin induction on {target}, ω ↦ 1/4 h h\n");
    for (w, rec) in weights.iter().zip(&sol.induced) {
        text.push_str(&format!("  Ind_{} = {}\n", rat::fmt(w), rec.render()));
    }
    let mut rows = serde_json::Map::new();
    for (label, row) in sol.labels.iter().zip(&sol.coefficients) {
        let terms: Vec<String> = row.iter().zip(&names).filter(|(c, _)| !num_traits::Zero::is_zero(*c)).map(|(c, n)| format!("{}·{n}", rat::fmt(c))).collect();
        text.push_str(&format!("  χ_{label} = {}\n", terms.join(" + ")));
        rows.insert(label.clone(), json!(row.iter().map(rat::fmt).collect::<Vec<_>>()));
    }
    let induced: Vec<String> = sol.induced.iter().map(|r| r.render()).collect();
    let json = json!({ "target": target, "weights": weights.iter().map(rat::fmt).collect::<Vec<_>>(), "induced": induced, "coefficients": rows });
    Ok(Report { text, json, ok: true })
}

fn verify_cmd(which: &str) -> Result<Report, Failure> {
    let cases: Vec<&verify::Case> = if which == "all" {
        verify::CASES.iter().collect()
    } else {
        vec![verify::case(which).ok_or_else(|| usage(format!("unknown case `{which}`")))?]
    };
    let results: Vec<_> = cases.iter().map(|c| (c, verify::run_case(c))).collect();
    let ok = results.iter().all(|(_, r)| r.passed());
    let mut text = String::new();
    for (c, r) in &results {
        text.push_str(&format!("{} {}  {}\n", r.status, r.case, c.description));
    }
    let passed = results.iter().filter(|(_, r)| r.passed()).count();
    text.push_str(&format!("{passed}/{} passed\n", results.len()));
    let json = Value::Array(results.into_iter().map(|(_, r)| serde_json::to_value(r).expect("serializable")).collect());
    Ok(Report { text, json, ok })
}
