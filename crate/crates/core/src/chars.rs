//! Trace characters of modules over finite-dimensional algebras, and the Artin-induction solver.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraHandle, Element, Presentation};
use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::induct::induce;
use crate::linalg::{rank_of, Matrix};
use crate::morphism::AlgebraMorphism;
use crate::rat::{self, Rational};
use crate::repmod::{decompose, DecompositionRecord, FinModule};

/// Traces of the action of each normal-word basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    pub owner: String,
    pub values: Vec<Rational>,
}

impl CharacterVector {
    /// Value on an element given by basis coordinates.
    pub fn eval(&self, coords: &[Rational]) -> Rational {
        crate::linalg::dot(&self.values, coords)
    }

    pub fn add(&self, other: &CharacterVector) -> CharacterVector {
        CharacterVector { owner: self.owner.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> CharacterVector {
        CharacterVector { owner: self.owner.clone(), values: self.values.iter().map(|a| a * c).collect() }
    }
}

pub fn char_vector(m: &FinModule) -> Result<CharacterVector> {
    let basis = m.owner.basis()?;
    let values = basis.iter().map(|w| m.eval(&NcPoly::word(w.clone())).trace()).collect();
    Ok(CharacterVector { owner: m.owner.name().into(), values })
}

/// Checks `χ(b_i b_j) = χ(b_j b_i)` over all basis pairs; returns the first failing pair.
pub fn symmetry_check(h: &AlgebraHandle, chi: &CharacterVector) -> Result<Option<(usize, usize)>> {
    let s = h.structure_constants()?;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if chi.eval(&s[i][j]) != chi.eval(&s[j][i]) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Independence {
    Pass,
    Dependency { rank: usize, count: usize },
}

#[derive(Clone, Debug)]
pub struct CharacterRing {
    pub owner: String,
    pub irreducibles: Vec<(String, CharacterVector)>,
}

impl CharacterRing {
    pub fn new(irreducibles: &[FinModule]) -> Result<Self> {
        let owner = irreducibles.first().map(|m| m.owner.name().to_string()).unwrap_or_default();
        let irreducibles = irreducibles.iter().map(|m| Ok((m.label.clone(), char_vector(m)?))).collect::<Result<_>>()?;
        Ok(CharacterRing { owner, irreducibles })
    }

    pub fn independence_check(&self) -> Independence {
        let vs: Vec<_> = self.irreducibles.iter().map(|(_, c)| c.values.clone()).collect();
        let rank = rank_of(&vs);
        if rank == vs.len() {
            Independence::Pass
        } else {
            Independence::Dependency { rank, count: vs.len() }
        }
    }

    /// `Σ m_i χ_i` for a decomposition record.
    pub fn combination(&self, rec: &DecompositionRecord) -> Option<CharacterVector> {
        let n = self.irreducibles.first()?.1.values.len();
        let mut out = CharacterVector { owner: self.owner.clone(), values: vec![rat::zero(); n] };
        for (label, m) in &rec.entries {
            let (_, chi) = self.irreducibles.iter().find(|(l, _)| l == label)?;
            out = out.add(&chi.scale(&rat::int(*m as i64)));
        }
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinSolution {
    pub weights: Vec<Rational>,
    /// Decomposition of the module induced from the one-dimensional module `y = weights[j]`.
    pub induced: Vec<DecompositionRecord>,
    /// Row `i` expresses the character of irreducible `i` in the induced characters.
    pub coefficients: Vec<Vec<Rational>>,
    pub labels: Vec<String>,
}

/// Expresses each irreducible character as a rational combination of characters induced from
/// `Q[y] -> target`, `y ↦ omega_image`, at the given conformal weights.
pub fn artin_solve(
    target: &Arc<AlgebraHandle>,
    omega_image: &Element,
    weights: &[Rational],
    irreducibles: &[FinModule],
) -> Result<ArtinSolution> {
    for i in 0..weights.len() {
        if weights[i + 1..].contains(&weights[i]) {
            return Err(Error::Invalid(format!("weights are not pairwise distinct: {} repeats", rat::fmt(&weights[i]))));
        }
    }
    if weights.len() != irreducibles.len() {
        return Err(Error::Dimension(format!("{} weights for {} irreducibles", weights.len(), irreducibles.len())));
    }
    for (l, w) in irreducibles.iter().zip(weights) {
        if l.act(omega_image)? != Matrix::scalar(l.dim, w) {
            return Err(Error::Invalid(format!("omega does not act on {} as {}", l.label, rat::fmt(w))));
        }
    }
    let pres = Presentation::new("artin_y", &["y"], &[], &[])?;
    let source = Arc::new(AlgebraHandle::build(pres, 12)?);
    let m = AlgebraMorphism::new("artin", source.clone(), target.clone(), vec![omega_image.clone()])?;
    let y = NcPoly::gen(crate::GenId(0));
    let kernel_poly = weights.iter().fold(NcPoly::one(), |acc, w| &acc * &(&y - &NcPoly::constant(w.clone())));
    let kernel = [source.element(&kernel_poly)];

    let ring = CharacterRing::new(irreducibles)?;
    let mut induced = Vec::new();
    let mut chars = Vec::new();
    for w in weights {
        let module = FinModule::new(source.clone(), vec![Matrix::scalar(1, w)], &format!("y={}", rat::fmt(w)))?;
        let ind = induce(&m, &kernel, &module)?;
        let rec = decompose(&ind.module, irreducibles)?;
        if rec.residual != 0 {
            return Err(Error::Invalid(format!("induced module at weight {} has residual {}", rat::fmt(w), rec.residual)));
        }
        chars.push(char_vector(&ind.module)?);
        induced.push(rec);
    }
    let a = Matrix::from_columns(chars[0].values.len(), &chars.iter().map(|c| c.values.clone()).collect::<Vec<_>>());
    let coefficients = ring
        .irreducibles
        .iter()
        .map(|(label, chi)| a.solve(&chi.values).ok_or_else(|| Error::Invalid(format!("{label} is not a combination of induced characters"))))
        .collect::<Result<_>>()?;
    Ok(ArtinSolution {
        weights: weights.to_vec(),
        induced,
        coefficients,
        labels: ring.irreducibles.iter().map(|(l, _)| l.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn t3() -> Arc<AlgebraHandle> {
        Arc::new(AlgebraHandle::build(Presentation::new("t", &["h"], &[], &["h h h - h"]).unwrap(), 12).unwrap())
    }

    fn irreps(a: &Arc<AlgebraHandle>) -> Vec<FinModule> {
        [0, 1, -1].iter().map(|&s| FinModule::new(a.clone(), vec![Matrix::from_ints(&[&[s]])], &format!("h={s}")).unwrap()).collect()
    }

    #[test]
    fn characters_of_a_commutative_algebra() {
        let a = t3();
        let ls = irreps(&a);
        let ring = CharacterRing::new(&ls).unwrap();
        assert_eq!(ring.independence_check(), Independence::Pass);
        let dup = CharacterRing::new(&[ls[0].clone(), ls[0].clone()]).unwrap();
        assert_eq!(dup.independence_check(), Independence::Dependency { rank: 1, count: 2 });
        let sum = ls[1].direct_sum(&ls[2]).unwrap();
        let chi = char_vector(&sum).unwrap();
        assert_eq!(chi, char_vector(&ls[1]).unwrap().add(&char_vector(&ls[2]).unwrap()));
        assert_eq!(symmetry_check(&a, &chi).unwrap(), None);
    }

    #[test]
    fn artin_on_squares() {
        // y ↦ h^2 takes value 0 on h=0 and 1 on h=±1; only two distinct weights for three irreducibles
        let a = t3();
        let ls = irreps(&a);
        let omega = a.parse("h h").unwrap();
        assert!(artin_solve(&a, &omega, &[int(0), int(1), int(1)], &ls).is_err());
        let omega = a.parse("1/2 h h + 1/2 h").unwrap();
        let sol = artin_solve(&a, &omega, &[int(0), int(1), int(0)], &ls);
        assert!(sol.is_err());
        let omega = a.parse("3/2 h h + 1/2 h").unwrap();
        let sol = artin_solve(&a, &omega, &[int(0), int(2), int(1)], &ls).unwrap();
        assert_eq!(sol.coefficients[1], vec![int(0), int(1), int(0)]);
    }
}
