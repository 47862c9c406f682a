//! Algebra morphisms given on generators: well-definedness, images, kernels.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraHandle, Element};
use crate::error::{Error, Result};
use crate::freealg::{NcPoly, PolySpan, Word};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub name: String,
    pub source: Arc<AlgebraHandle>,
    pub target: Arc<AlgebraHandle>,
    images: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellDefined {
    Pass,
    /// Relation `relation` of the source maps to the nonzero `residue`.
    Violation { relation: usize, residue: Element },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KernelStatus {
    /// The candidates generate the kernel in every checked degree.
    Exact,
    /// The candidates lie in the kernel but generate less than it in some degree.
    Contained,
    /// Some candidate does not map to zero.
    NotInKernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    /// Dimension of the span of normal words of degree at most `degree`.
    pub source_dim: usize,
    /// Dimension of the part of the ideal generated by the candidates inside that span.
    pub ideal_dim: usize,
    /// Dimension of the image of that span.
    pub image_dim: usize,
}

impl DegreeCheck {
    pub fn exact(&self) -> bool {
        self.source_dim == self.ideal_dim + self.image_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    pub status: KernelStatus,
    pub probe_degree: usize,
    pub checks: Vec<DegreeCheck>,
    /// Index of the first candidate that is not in the kernel.
    pub offender: Option<usize>,
}

impl AlgebraMorphism {
    pub fn new(name: &str, source: Arc<AlgebraHandle>, target: Arc<AlgebraHandle>, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.num_gens() {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), source.num_gens())));
        }
        let images = images
            .into_iter()
            .map(|e| {
                if e.owner != target.name() {
                    return Err(Error::OwnerMismatch { expected: target.name().into(), found: e.owner });
                }
                Ok(target.element(&e.value))
            })
            .collect::<Result<_>>()?;
        Ok(AlgebraMorphism { name: name.into(), source, target, images })
    }

    /// Images written as expressions in the target's generators, one per source generator.
    pub fn from_exprs(name: &str, source: Arc<AlgebraHandle>, target: Arc<AlgebraHandle>, maps: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![target.zero(); source.num_gens()];
        let mut seen = vec![false; source.num_gens()];
        for (g, expr) in maps {
            let i = source.presentation().gen_id(g)?.0 as usize;
            images[i] = target.parse(expr)?;
            seen[i] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Invalid(format!("no image given for generator `{}`", source.generators()[i])));
        }
        Self::new(name, source, target, images)
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// Image of a polynomial in the source generators.
    pub fn apply_poly(&self, p: &NcPoly) -> Element {
        let mut cache: HashMap<Word, NcPoly> = HashMap::new();
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let img = self.word_image(w, &mut cache);
            out = &out + &img.scale(c);
        }
        self.target.element(&out)
    }

    fn word_image(&self, w: &Word, cache: &mut HashMap<Word, NcPoly>) -> NcPoly {
        if let Some(p) = cache.get(w) {
            return p.clone();
        }
        let p = match w.len() {
            0 => self.target.reduce(&NcPoly::one()),
            _ => {
                let head = self.word_image(&w.slice(0, w.len() - 1), cache);
                let last = &self.images[w.letters()[w.len() - 1].0 as usize].value;
                self.target.reduce(&(&head * last))
            }
        };
        cache.insert(w.clone(), p.clone());
        p
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.owner != self.source.name() {
            return Err(Error::OwnerMismatch { expected: self.source.name().into(), found: a.owner.clone() });
        }
        Ok(self.apply_poly(&a.value))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AlgebraMorphism, name: &str) -> Result<AlgebraMorphism> {
        if self.target.name() != next.source.name() {
            return Err(Error::OwnerMismatch { expected: next.source.name().into(), found: self.target.name().into() });
        }
        let images = self.images.iter().map(|e| next.apply(e)).collect::<Result<_>>()?;
        Self::new(name, self.source.clone(), next.target.clone(), images)
    }

    pub fn check_well_defined(&self) -> WellDefined {
        for (i, r) in self.source.presentation().relations.iter().enumerate() {
            let img = self.apply_poly(r);
            if !img.is_zero() {
                return WellDefined::Violation { relation: i, residue: img };
            }
        }
        WellDefined::Pass
    }

    pub fn image_basis(&self) -> Result<Vec<Element>> {
        self.target.subalgebra_basis(&self.images)
    }

    /// Kernel of a morphism out of a finite-dimensional algebra, in reduced echelon form.
    pub fn kernel_basis_finite(&self) -> Result<Vec<Element>> {
        let basis = self.source.basis()?;
        let imgs: Vec<NcPoly> = basis.iter().map(|w| self.apply_poly(&NcPoly::word(w.clone())).value).collect();
        let mut words: Vec<Word> = imgs.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        let mut m = Matrix::zeros(words.len(), basis.len());
        for (j, p) in imgs.iter().enumerate() {
            for (w, c) in p.terms() {
                let i = words.binary_search(w).unwrap();
                m[(i, j)] = c.clone();
            }
        }
        let ns = m.nullspace();
        let space = Subspace::span(basis.len(), &ns);
        space.basis().iter().map(|v| self.source.from_coords(v)).collect()
    }

    /// Compares, degree by degree up to `degree`, the ideal generated by `candidates` with the
    /// kernel restricted to the span of normal words of bounded degree.
    pub fn certify_kernel(&self, candidates: &[Element], degree: usize) -> Result<KernelCertificate> {
        for (i, c) in candidates.iter().enumerate() {
            if !self.apply(c)?.is_zero() {
                return Ok(KernelCertificate { status: KernelStatus::NotInKernel, probe_degree: degree, checks: Vec::new(), offender: Some(i) });
            }
        }
        let order = self.source.presentation().order.clone();
        let need = degree + self.source.system().max_lhs_degree();
        self.source.require_cert(need)?;
        let weights: Vec<usize> = order.weights().iter().map(|&w| w as usize).collect();
        let gens: Vec<NcPoly> = (0..self.source.num_gens()).map(|g| NcPoly::gen(crate::GenId(g as u32))).collect();
        let cdeg: Vec<usize> =
            candidates.iter().map(|c| c.value.terms().map(|(w, _)| order.degree(w)).max().unwrap_or(0)).collect();
        let words = self.source.words_up_to_degree(degree)?;

        // levels[d] holds the new basis elements of the ideal slice at degree d
        let mut ideal = PolySpan::new(&order);
        let mut levels: Vec<Vec<NcPoly>> = Vec::new();
        let mut image = PolySpan::new(&self.target.presentation().order);
        let mut checks = Vec::new();
        for d in 0..=degree {
            let mut fresh = Vec::new();
            for (c, &cd) in candidates.iter().zip(&cdeg) {
                if cd == d && ideal.insert(&c.value) {
                    fresh.push(c.value.clone());
                }
            }
            for (g, &w) in gens.iter().zip(&weights) {
                if w > d {
                    continue;
                }
                for b in levels[..=d - w].iter().flatten() {
                    for p in [self.source.reduce(&(g * b)), self.source.reduce(&(b * g))] {
                        if ideal.insert(&p) {
                            fresh.push(p);
                        }
                    }
                }
            }
            levels.push(fresh);
            for w in words.iter().filter(|w| order.degree(w) == d) {
                image.insert(&self.apply_poly(&NcPoly::word(w.clone())).value);
            }
            let source_dim = words.iter().filter(|w| order.degree(w) <= d).count();
            checks.push(DegreeCheck { degree: d, source_dim, ideal_dim: ideal.dim(), image_dim: image.dim() });
        }
        let status = if checks.iter().all(DegreeCheck::exact) { KernelStatus::Exact } else { KernelStatus::Contained };
        Ok(KernelCertificate { status, probe_degree: degree, checks, offender: None })
    }
}

/// Renders a linear combination of elements; used for reporting kernels.
pub fn render_all(h: &AlgebraHandle, xs: &[Element]) -> Vec<String> {
    xs.iter().map(|x| h.render(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;

    fn alg(name: &str, gens: &[&str], rels: &[&str]) -> Arc<AlgebraHandle> {
        Arc::new(AlgebraHandle::build(Presentation::new(name, gens, &[], rels).unwrap(), 12).unwrap())
    }

    #[test]
    fn polynomial_ring_onto_truncation() {
        let src = alg("p", &["x"], &[]);
        let tgt = alg("t", &["h"], &["h h h - h"]);
        let m = AlgebraMorphism::from_exprs("m", src.clone(), tgt, &[("x", "h")]).unwrap();
        assert_eq!(m.check_well_defined(), WellDefined::Pass);
        let k = src.parse("x x x - x").unwrap();
        let cert = m.certify_kernel(&[k.clone()], 6).unwrap();
        assert_eq!(cert.status, KernelStatus::Exact);
        let cert = m.certify_kernel(&[src.parse("x x x x x - x").unwrap()], 6).unwrap();
        assert_eq!(cert.status, KernelStatus::Contained);
        let cert = m.certify_kernel(&[src.parse("x x - x").unwrap()], 6).unwrap();
        assert_eq!(cert.status, KernelStatus::NotInKernel);
        assert_eq!(m.target.dim(), Some(3));
    }

    #[test]
    fn violation_reported() {
        let src = alg("s", &["x"], &["x x"]);
        let tgt = alg("t", &["h"], &["h h h - h"]);
        let m = AlgebraMorphism::from_exprs("m", src, tgt, &[("x", "h")]).unwrap();
        assert!(matches!(m.check_well_defined(), WellDefined::Violation { relation: 0, .. }));
    }

    #[test]
    fn finite_kernel() {
        let src = alg("s", &["x"], &["x x x - x"]);
        let tgt = alg("t", &["h"], &["h h - h"]);
        let m = AlgebraMorphism::from_exprs("m", src.clone(), tgt, &[("x", "h")]).unwrap();
        let k = m.kernel_basis_finite().unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], src.parse("x - x x").unwrap());
    }
}
