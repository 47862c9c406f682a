//! Finite induction `A ⊗_{π(B)} (M / ker(π)·M)` and restriction along an algebra morphism.

use serde::Serialize;

use crate::algebra::Element;
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::AlgebraMorphism;
use crate::rat;
use crate::repmod::{decompose, hom_space, DecompositionRecord, FinModule};

#[derive(Clone, Debug)]
pub struct InductionResult {
    pub module: FinModule,
    /// Columns are the images of `1 ⊗ v` for the basis vectors `v` of `M / ker(π)·M`.
    pub unit_map: Matrix,
    /// Dimension of `M / ker(π)·M`.
    pub reduced_dim: usize,
    /// Dimension of `A ⊗ M̄` before imposing the balancing relations.
    pub tensor_dim: usize,
    pub decomposition: Option<DecompositionRecord>,
    pub voa_label: Option<String>,
}

impl InductionResult {
    /// Attaches the multiplicities of `irreducibles` and the matching module label.
    pub fn decomposed(mut self, irreducibles: &[FinModule]) -> Result<Self> {
        let rec = decompose(&self.module, irreducibles)?;
        self.voa_label = catalog::voa_label(&rec);
        self.decomposition = Some(rec);
        Ok(self)
    }

    /// True if the target action applied to the image of the unit map fills the module.
    pub fn unit_generates(&self) -> bool {
        let seeds: Vec<_> = (0..self.unit_map.ncols()).map(|j| self.unit_map.column(j)).collect();
        self.module.submodule_closure(&seeds).dim() == self.module.dim
    }
}

/// Pulls a target module back along `m`: source generator `g` acts as `m(g)`.
pub fn restrict(m: &AlgebraMorphism, n: &FinModule) -> Result<FinModule> {
    if n.owner.name() != m.target.name() {
        return Err(Error::OwnerMismatch { expected: m.target.name().into(), found: n.owner.name().into() });
    }
    let actions = m.images().iter().map(|img| n.eval(&img.value)).collect();
    let mut r = FinModule::new(m.source.clone(), actions, &format!("Res({})", n.label))?;
    r.dim = n.dim;
    Ok(r)
}

/// The submodule `ker(π)·M`, generated by the images of the kernel generators.
pub fn kernel_action_radical(m: &AlgebraMorphism, kernel_gens: &[Element], module: &FinModule) -> Result<Subspace> {
    let mut seeds = Vec::new();
    for k in kernel_gens {
        if k.owner != m.source.name() {
            return Err(Error::OwnerMismatch { expected: m.source.name().into(), found: k.owner.clone() });
        }
        let a = module.act(k)?;
        seeds.extend((0..a.ncols()).map(|j| a.column(j)));
    }
    Ok(module.submodule_closure(&seeds))
}

pub fn induce(m: &AlgebraMorphism, kernel_gens: &[Element], module: &FinModule) -> Result<InductionResult> {
    if module.owner.name() != m.source.name() {
        return Err(Error::OwnerMismatch { expected: m.source.name().into(), found: module.owner.name().into() });
    }
    let target = &m.target;
    let n = target.basis()?.len();
    let radical = kernel_action_radical(m, kernel_gens, module)?;
    let reduced = module.quotient_module(&radical)?;
    let d = reduced.dim;
    let idx = |a: usize, v: usize| a * d + v;

    // (a·π(g)) ⊗ v − a ⊗ (g·v) for basis a of the target, source generator g, basis v of M̄
    let img_coords: Vec<Vec<_>> = m.images().iter().map(|e| target.coords(e)).collect::<Result<_>>()?;
    let mut rels = Vec::new();
    for a in 0..n {
        let mut ea = vec![rat::zero(); n];
        ea[a] = rat::one();
        for (g, ic) in img_coords.iter().enumerate() {
            let api = target.mul_coords(&ea, ic)?;
            let act = &reduced.actions[g];
            for v in 0..d {
                let mut r = vec![rat::zero(); n * d];
                for (b, c) in api.iter().enumerate() {
                    r[idx(b, v)] += c;
                }
                for u in 0..d {
                    r[idx(a, u)] -= &act[(u, v)];
                }
                rels.push(r);
            }
        }
    }
    let rel_space = Subspace::span(n * d, &rels);

    let actions: Vec<Matrix> = target
        .generators()
        .iter()
        .map(|g| Ok(Matrix::kron(&target.left_mult_matrix(&target.gen(g)?)?, &Matrix::identity(d))))
        .collect::<Result<_>>()?;
    let mut tensor = FinModule::new(target.clone(), actions, &format!("Ind({})", module.label))?;
    tensor.dim = n * d;
    let quotient = tensor.quotient_module(&rel_space)?;
    let proj = tensor.quotient_map(&rel_space);

    let one = target.coords(&target.one())?;
    let unit = one.iter().position(|c| !num_traits::Zero::is_zero(c)).expect("unit is a basis word");
    let mut unit_map = Matrix::zeros(quotient.dim, d);
    for v in 0..d {
        let col = proj.column(idx(unit, v));
        for (i, c) in col.into_iter().enumerate() {
            unit_map[(i, v)] = c;
        }
    }
    Ok(InductionResult {
        module: quotient,
        unit_map,
        reduced_dim: d,
        tensor_dim: n * d,
        decomposition: None,
        voa_label: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusCheck {
    /// `dim Hom(Ind M, K)` over the target.
    pub induced_side: usize,
    /// `dim Hom(M, Res K)` over the source.
    pub restricted_side: usize,
}

impl FrobeniusCheck {
    pub fn passed(&self) -> bool {
        self.induced_side == self.restricted_side
    }
}

/// Compares `Hom(Ind M, K)` with `Hom(M̄, Res K)`. Modules killed by the kernel (the catalog
/// irreducibles) have `M̄ = M`.
pub fn frobenius_check(m: &AlgebraMorphism, kernel_gens: &[Element], module: &FinModule, k: &FinModule) -> Result<FrobeniusCheck> {
    let ind = induce(m, kernel_gens, module)?;
    let res = restrict(m, k)?;
    Ok(FrobeniusCheck { induced_side: hom_space(&ind.module, k)?.len(), restricted_side: hom_space(module, &res)?.len() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionCheck {
    pub one_step: DecompositionRecord,
    pub two_step: DecompositionRecord,
}

impl CompositionCheck {
    pub fn passed(&self) -> bool {
        self.one_step == self.two_step
    }
}

/// `Ind_{m2∘m1} M` against `Ind_{m2} Ind_{m1} M`, compared by multiplicities of `irreducibles`.
pub fn composition_check(
    m1: &AlgebraMorphism,
    m2: &AlgebraMorphism,
    kernel1: &[Element],
    kernel2: &[Element],
    kernel_composite: &[Element],
    module: &FinModule,
    irreducibles: &[FinModule],
) -> Result<CompositionCheck> {
    let composite = m1.then(m2, &format!("{}*{}", m2.name, m1.name))?;
    let one = induce(&composite, kernel_composite, module)?;
    let mid = induce(m1, kernel1, module)?;
    let two = induce(m2, kernel2, &mid.module)?;
    Ok(CompositionCheck { one_step: decompose(&one.module, irreducibles)?, two_step: decompose(&two.module, irreducibles)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraHandle, Presentation};
    use std::sync::Arc;

    fn alg(name: &str, gens: &[&str], rels: &[&str]) -> Arc<AlgebraHandle> {
        Arc::new(AlgebraHandle::build(Presentation::new(name, gens, &[], rels).unwrap(), 12).unwrap())
    }

    /// Q[x] onto Q[h]/(h^3 - h) = Q^3 with idempotents at h = 0, 1, -1.
    #[test]
    fn induce_into_truncation() {
        let src = alg("p", &["x"], &[]);
        let tgt = alg("t", &["h"], &["h h h - h"]);
        let m = AlgebraMorphism::from_exprs("m", src.clone(), tgt.clone(), &[("x", "h")]).unwrap();
        let ker = [src.parse("x x x - x").unwrap()];
        for (s, expect) in [(0, 1), (1, 1), (-1, 1), (2, 0), (5, 0)] {
            let mm = FinModule::new(src.clone(), vec![Matrix::from_ints(&[&[s]])], "c").unwrap();
            let r = induce(&m, &ker, &mm).unwrap();
            assert_eq!(r.module.dim, expect, "s = {s}");
            assert!(r.unit_generates());
            let h = tgt.gen("h").unwrap();
            if expect == 1 {
                assert_eq!(r.module.act(&h).unwrap(), Matrix::from_ints(&[&[s]]));
            }
        }
        // without kernel generators nothing is killed before tensoring; the relations still are
        let mm = FinModule::new(src.clone(), vec![Matrix::from_ints(&[&[2]])], "c").unwrap();
        assert_eq!(induce(&m, &[], &mm).unwrap().module.dim, 0);
        let k = FinModule::new(tgt.clone(), vec![Matrix::from_ints(&[&[1]])], "k").unwrap();
        let one = FinModule::new(src.clone(), vec![Matrix::from_ints(&[&[1]])], "one").unwrap();
        let f = frobenius_check(&m, &ker, &one, &k).unwrap();
        assert!(f.passed());
        assert_eq!(f.induced_side, 1);
        assert_eq!(restrict(&m, &k).unwrap().actions[0], Matrix::from_ints(&[&[1]]));
        assert_eq!(kernel_action_radical(&m, &ker, &mm).unwrap().dim(), 1);
    }
}
