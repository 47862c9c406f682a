//! Finitely presented algebras: normal words, dimension detection, structure constants.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{GenId, MonomialOrder, NcPoly, Word};
use crate::linalg::{Matrix, Subspace};
use crate::rat::{self, Rational};
use crate::rewrite::{self, Certificate, CompletionOptions, RewriteSystem};

/// Generators, a monomial order and defining relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<String>,
    pub order: MonomialOrder,
    pub relations: Vec<NcPoly>,
}

impl Presentation {
    /// Parses each relation with the generator names. `precedence` lists names, largest first.
    pub fn new(name: &str, generators: &[&str], precedence: &[&str], relations: &[&str]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let order = order_from_names(&generators, precedence)?;
        let relations = relations.iter().map(|r| crate::iolang::parse_poly(r, &generators)).collect::<Result<Vec<_>>>()?;
        Ok(Presentation { name: name.to_string(), generators, order, relations })
    }

    pub fn gen_id(&self, name: &str) -> Result<GenId> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| GenId(i as u32))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

/// Deglex order from a precedence list of names, largest first; an entry `name:w` gives the
/// generator weight `w`. An empty list keeps declaration order.
pub fn order_from_names(generators: &[String], precedence: &[&str]) -> Result<MonomialOrder> {
    if precedence.is_empty() {
        return Ok(MonomialOrder::natural(generators.len()));
    }
    let mut ids = Vec::new();
    let mut weights = vec![1u32; generators.len()];
    for p in precedence {
        let (name, w) = match p.split_once(':') {
            Some((n, w)) => (n, w.parse::<u32>().ok().filter(|&w| w > 0).ok_or_else(|| Error::Invalid(format!("bad weight in `{p}`")))?),
            None => (*p, 1),
        };
        let i = generators.iter().position(|g| g == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        if ids.contains(&GenId(i as u32)) {
            return Err(Error::Invalid(format!("generator `{name}` repeated in order")));
        }
        ids.push(GenId(i as u32));
        weights[i] = w;
    }
    if ids.len() != generators.len() {
        return Err(Error::Invalid("order must list every generator".into()));
    }
    Ok(MonomialOrder::weighted(&ids, &weights))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Dimension {
    Finite(usize),
    /// No empty length level up to `probe`; `profile[k]` counts normal words of length `k`.
    UnboundedAt { probe: usize, profile: Vec<usize> },
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::UnboundedAt { probe, profile } => {
                let p: Vec<String> = profile.iter().map(|x| x.to_string()).collect();
                write!(f, "unbounded at probe {probe} (profile {})", p.join(","))
            }
        }
    }
}

/// An element of a specific algebra, always kept in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub owner: String,
    pub value: NcPoly,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

#[derive(Debug)]
pub struct AlgebraHandle {
    pres: Presentation,
    system: RewriteSystem,
    dimension: Dimension,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    structure: Vec<Vec<Vec<Rational>>>,
}

/// Levels probed when looking for an empty length level.
pub const DEFAULT_PROBE: usize = 12;

impl AlgebraHandle {
    pub fn build(pres: Presentation, max_degree: usize) -> Result<Self> {
        let system = rewrite::complete_with(&pres.relations, &pres.order, &CompletionOptions { max_degree, trace: false })
            .map_err(|failure| Error::Completion { algebra: pres.name.clone(), failure })?;
        Ok(Self::from_system(pres, system))
    }

    /// The zero algebra on the given generators.
    pub fn zero_algebra(name: &str, generators: &[&str]) -> Self {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let order = MonomialOrder::natural(generators.len());
        let pres = Presentation { name: name.to_string(), generators, order: order.clone(), relations: vec![NcPoly::one()] };
        Self::from_system(pres, RewriteSystem::trivializing(order))
    }

    pub fn from_system(pres: Presentation, system: RewriteSystem) -> Self {
        let probe = match system.certificate() {
            Certificate::Complete => DEFAULT_PROBE,
            Certificate::Degree(d) => d.min(DEFAULT_PROBE),
        };
        let levels = enumerate_levels(&system, pres.generators.len(), probe);
        let profile: Vec<usize> = levels.iter().map(Vec::len).collect();
        let mut h = AlgebraHandle {
            pres,
            system,
            dimension: Dimension::UnboundedAt { probe, profile: profile.clone() },
            basis: Vec::new(),
            index: HashMap::new(),
            structure: Vec::new(),
        };
        if let Some(empty) = profile.iter().position(|&c| c == 0) {
            // every word of length >= empty is reducible; independence needs confluence below it
            if h.system.certificate().covers(empty.saturating_sub(1) * h.pres.order.max_weight()) {
                h.basis = levels.into_iter().take(empty).flatten().collect();
                h.index = h.basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
                h.dimension = Dimension::Finite(h.basis.len());
                h.structure = h.compute_structure();
            }
        }
        h
    }

    fn compute_structure(&self) -> Vec<Vec<Vec<Rational>>> {
        let n = self.basis.len();
        let mut s = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = self.system.reduce(&NcPoly::word(self.basis[i].concat(&self.basis[j])));
                s[i][j] = self.coords_of_poly(&p).expect("normal form lies in basis span");
            }
        }
        s
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn generators(&self) -> &[String] {
        &self.pres.generators
    }

    pub fn num_gens(&self) -> usize {
        self.pres.generators.len()
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn certificate(&self) -> Certificate {
        self.system.certificate()
    }

    pub fn dimension(&self) -> &Dimension {
        &self.dimension
    }

    pub fn dim(&self) -> Option<usize> {
        match self.dimension {
            Dimension::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.dim().is_some()
    }

    /// Counts of normal words of each length `0..=probe`, independent of the cached probe.
    pub fn profile(&self, probe: usize) -> Result<Vec<usize>> {
        self.require_cert(probe)?;
        Ok(enumerate_levels(&self.system, self.num_gens(), probe).iter().map(Vec::len).collect())
    }

    pub fn require_cert(&self, need: usize) -> Result<()> {
        match self.system.certificate() {
            Certificate::Complete => Ok(()),
            Certificate::Degree(d) if d >= need => Ok(()),
            Certificate::Degree(d) => Err(Error::CertificateInsufficient { algebra: self.name().into(), need, have: d }),
        }
    }

    /// Normal words of length at most `max_len`, sorted by the monomial order.
    pub fn normal_words(&self, max_len: usize) -> Result<Vec<Word>> {
        self.require_cert(max_len * self.pres.order.max_weight() + self.system.max_lhs_degree())?;
        Ok(enumerate_levels(&self.system, self.num_gens(), max_len).into_iter().flatten().collect())
    }

    /// Normal words of weighted degree at most `degree`, sorted by the monomial order.
    pub fn words_up_to_degree(&self, degree: usize) -> Result<Vec<Word>> {
        self.require_cert(degree + self.system.max_lhs_degree())?;
        let order = &self.pres.order;
        let mut out = Vec::new();
        let mut frontier = if self.system.is_normal(&Word::empty()) { vec![Word::empty()] } else { Vec::new() };
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..self.num_gens() {
                    let nw = w.concat(&Word::letter(GenId(g as u32)));
                    if order.degree(&nw) <= degree && self.system.is_normal(&nw) {
                        next.push(nw);
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out.sort_by(|a, b| order.cmp(a, b));
        Ok(out)
    }

    /// Basis of normal words; fails for infinite-dimensional algebras.
    pub fn basis(&self) -> Result<&[Word]> {
        if self.is_finite() {
            Ok(&self.basis)
        } else {
            Err(Error::InfiniteDimensional(self.name().into()))
        }
    }

    pub fn basis_elements(&self) -> Result<Vec<Element>> {
        Ok(self.basis()?.iter().map(|w| self.wrap(NcPoly::word(w.clone()))).collect())
    }

    pub fn structure_constants(&self) -> Result<&[Vec<Vec<Rational>>]> {
        self.basis()?;
        Ok(&self.structure)
    }

    fn wrap(&self, value: NcPoly) -> Element {
        Element { owner: self.pres.name.clone(), value }
    }

    fn check(&self, a: &Element) -> Result<()> {
        if a.owner == self.pres.name {
            Ok(())
        } else {
            Err(Error::OwnerMismatch { expected: self.pres.name.clone(), found: a.owner.clone() })
        }
    }

    pub fn element(&self, p: &NcPoly) -> Element {
        self.wrap(self.system.reduce(p))
    }

    pub fn zero(&self) -> Element {
        self.wrap(NcPoly::zero())
    }

    pub fn one(&self) -> Element {
        self.element(&NcPoly::one())
    }

    pub fn gen(&self, name: &str) -> Result<Element> {
        Ok(self.element(&NcPoly::gen(self.pres.gen_id(name)?)))
    }

    pub fn parse(&self, expr: &str) -> Result<Element> {
        Ok(self.element(&crate::iolang::parse_poly(expr, &self.pres.generators)?))
    }

    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        self.system.reduce(p)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.element(&(&a.value * &b.value)))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(&a.value + &b.value))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(&a.value - &b.value))
    }

    pub fn scale(&self, a: &Element, c: &Rational) -> Result<Element> {
        self.check(a)?;
        Ok(self.wrap(a.value.scale(c)))
    }

    pub fn render(&self, a: &Element) -> String {
        a.value.render(&self.pres.generators, Some(&self.pres.order))
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.pres.generators)
    }

    fn coords_of_poly(&self, p: &NcPoly) -> Result<Vec<Rational>> {
        let mut v = vec![rat::zero(); self.basis.len()];
        for (w, c) in p.terms() {
            let i = self.index.get(w).ok_or_else(|| Error::Invalid(format!("word {} is not normal", w.render(&self.pres.generators))))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    pub fn coords(&self, a: &Element) -> Result<Vec<Rational>> {
        self.check(a)?;
        self.basis()?;
        self.coords_of_poly(&a.value)
    }

    pub fn from_coords(&self, v: &[Rational]) -> Result<Element> {
        let basis = self.basis()?;
        if v.len() != basis.len() {
            return Err(Error::Dimension(format!("expected {} coordinates, got {}", basis.len(), v.len())));
        }
        let mut p = NcPoly::zero();
        for (w, c) in basis.iter().zip(v) {
            p.add_term(w.clone(), c.clone());
        }
        Ok(self.wrap(p))
    }

    /// Product computed through the structure constants instead of rewriting.
    pub fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        let s = self.structure_constants()?;
        let n = s.len();
        let mut out = vec![rat::zero(); n];
        for i in 0..n {
            if num_traits::Zero::is_zero(&a[i]) {
                continue;
            }
            for j in 0..n {
                if num_traits::Zero::is_zero(&b[j]) {
                    continue;
                }
                let f = &a[i] * &b[j];
                for (o, c) in out.iter_mut().zip(&s[i][j]) {
                    if !num_traits::Zero::is_zero(c) {
                        *o += &f * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `b -> x b` in the normal-word basis.
    pub fn left_mult_matrix(&self, x: &Element) -> Result<Matrix> {
        let xs = self.coords(x)?;
        let n = self.basis.len();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![rat::zero(); n];
            e[j] = rat::one();
            let col = self.mul_coords(&xs, &e)?;
            for i in 0..n {
                m[(i, j)] = col[i].clone();
            }
        }
        Ok(m)
    }

    /// Basis (in reduced echelon form over the normal-word basis) of the unital subalgebra generated by `gens`.
    pub fn subalgebra_basis(&self, gens: &[Element]) -> Result<Vec<Element>> {
        let n = self.basis()?.len();
        let gs: Vec<Vec<Rational>> = gens.iter().map(|g| self.coords(g)).collect::<Result<_>>()?;
        let mut space = Subspace::span(n, &[self.coords(&self.one())?]);
        loop {
            let mut vs = space.basis().to_vec();
            for v in space.basis() {
                for g in &gs {
                    vs.push(self.mul_coords(v, g)?);
                }
            }
            let next = Subspace::span(n, &vs);
            if next.dim() == space.dim() {
                break;
            }
            space = next;
        }
        space.basis().iter().map(|v| self.from_coords(v)).collect()
    }
}

/// Normal words grouped by length `0..=probe`, each level sorted by the monomial order.
fn enumerate_levels(system: &RewriteSystem, ngens: usize, probe: usize) -> Vec<Vec<Word>> {
    let mut levels = Vec::with_capacity(probe + 1);
    let start = if system.is_normal(&Word::empty()) { vec![Word::empty()] } else { Vec::new() };
    levels.push(start);
    for _ in 0..probe {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for w in prev {
            for g in 0..ngens {
                let nw = w.concat(&Word::letter(GenId(g as u32)));
                if system.is_normal(&nw) {
                    next.push(nw);
                }
            }
        }
        next.sort_by(|a, b| system.order().cmp(a, b));
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn polynomial_ring_is_unbounded() {
        let p = Presentation::new("heis", &["x"], &[], &[]).unwrap();
        let h = AlgebraHandle::build(p, 12).unwrap();
        assert!(!h.is_finite());
        match h.dimension() {
            Dimension::UnboundedAt { profile, .. } => assert!(profile.iter().all(|&c| c == 1)),
            _ => panic!(),
        }
        assert!(matches!(h.basis(), Err(Error::InfiniteDimensional(_))));
    }

    #[test]
    fn truncated_polynomial_ring() {
        let p = Presentation::new("t", &["x"], &[], &["x x x - x"]).unwrap();
        let h = AlgebraHandle::build(p, 12).unwrap();
        assert_eq!(h.dim(), Some(3));
        let x = h.gen("x").unwrap();
        let x2 = h.mul(&x, &x).unwrap();
        let x3 = h.mul(&x2, &x).unwrap();
        assert_eq!(x3, x);
        let m = h.left_mult_matrix(&x).unwrap();
        assert_eq!(&(&m * &m) * &m, m);
        assert_eq!(h.subalgebra_basis(&[x2]).unwrap().len(), 2);
    }

    #[test]
    fn owner_mismatch_rejected() {
        let a = AlgebraHandle::build(Presentation::new("a", &["x"], &[], &["x x"]).unwrap(), 4).unwrap();
        let b = AlgebraHandle::build(Presentation::new("b", &["x"], &[], &["x x"]).unwrap(), 4).unwrap();
        let x = a.gen("x").unwrap();
        let y = b.gen("x").unwrap();
        assert!(matches!(a.mul(&x, &y), Err(Error::OwnerMismatch { .. })));
        assert_eq!(a.scale(&x, &int(0)).unwrap(), a.zero());
    }

    #[test]
    fn zero_algebra_has_no_basis() {
        let z = AlgebraHandle::zero_algebra("z", &["e", "f", "h"]);
        assert_eq!(z.dim(), Some(0));
        assert!(z.one().is_zero());
    }
}
