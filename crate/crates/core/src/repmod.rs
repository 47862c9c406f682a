//! Finite-dimensional left modules given by one action matrix per generator.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraHandle, Element};
use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::linalg::{Matrix, Subspace};
use crate::rat::{self, Rational};

#[derive(Clone, Debug)]
pub struct FinModule {
    pub owner: Arc<AlgebraHandle>,
    pub dim: usize,
    pub actions: Vec<Matrix>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleCheck {
    Pass,
    /// Relation `relation` of the owner evaluates to a nonzero matrix.
    Violation { relation: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecompositionRecord {
    /// Irreducible labels with their multiplicities, in the order the irreducibles were listed.
    pub entries: Vec<(String, usize)>,
    /// `dim M` minus the dimension accounted for by the entries.
    pub residual: i64,
}

impl DecompositionRecord {
    pub fn multiplicity(&self, label: &str) -> usize {
        self.entries.iter().find(|(l, _)| l == label).map_or(0, |(_, m)| *m)
    }

    /// Entries written as `L:m` joined by `+`; `0` for the empty record.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "0".into();
        }
        self.entries.iter().map(|(l, m)| format!("{l}:{m}")).collect::<Vec<_>>().join(" + ")
    }
}

impl FinModule {
    pub fn new(owner: Arc<AlgebraHandle>, actions: Vec<Matrix>, label: &str) -> Result<Self> {
        if actions.len() != owner.num_gens() {
            return Err(Error::Dimension(format!("{} action matrices for {} generators", actions.len(), owner.num_gens())));
        }
        let dim = actions.first().map_or(0, Matrix::nrows);
        if let Some(m) = actions.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::Dimension(format!("action of size {}x{} in a module of dimension {dim}", m.nrows(), m.ncols())));
        }
        Ok(FinModule { owner, dim, actions, label: label.into() })
    }

    /// Actions given by generator name; unnamed generators act by zero.
    pub fn from_named(owner: Arc<AlgebraHandle>, dim: usize, acts: &[(&str, Matrix)], label: &str) -> Result<Self> {
        let mut actions = vec![Matrix::zeros(dim, dim); owner.num_gens()];
        for (g, m) in acts {
            actions[owner.presentation().gen_id(g)?.0 as usize] = m.clone();
        }
        let mut m = Self::new(owner, actions, label)?;
        m.dim = dim;
        Ok(m)
    }

    pub fn zero(owner: Arc<AlgebraHandle>) -> Self {
        let n = owner.num_gens();
        FinModule { owner, dim: 0, actions: vec![Matrix::zeros(0, 0); n], label: "0".into() }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.into();
        self
    }

    /// Matrix by which a polynomial in the owner's generators acts.
    pub fn eval(&self, p: &NcPoly) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            let mut m = Matrix::identity(self.dim);
            for g in w.letters() {
                m = &m * &self.actions[g.0 as usize];
            }
            out = &out + &m.scale(c);
        }
        out
    }

    pub fn act(&self, a: &Element) -> Result<Matrix> {
        if a.owner != self.owner.name() {
            return Err(Error::OwnerMismatch { expected: self.owner.name().into(), found: a.owner.clone() });
        }
        Ok(self.eval(&a.value))
    }

    pub fn check_module(&self) -> ModuleCheck {
        for (i, r) in self.owner.presentation().relations.iter().enumerate() {
            if !self.eval(r).is_zero() {
                return ModuleCheck::Violation { relation: i };
            }
        }
        ModuleCheck::Pass
    }

    fn same_owner(&self, other: &FinModule) -> Result<()> {
        if self.owner.name() == other.owner.name() {
            Ok(())
        } else {
            Err(Error::OwnerMismatch { expected: self.owner.name().into(), found: other.owner.name().into() })
        }
    }

    pub fn direct_sum(&self, other: &FinModule) -> Result<FinModule> {
        self.same_owner(other)?;
        let actions = self.actions.iter().zip(&other.actions).map(|(a, b)| Matrix::block_diag(a, b)).collect();
        let mut m = FinModule::new(self.owner.clone(), actions, &format!("{} + {}", self.label, other.label))?;
        m.dim = self.dim + other.dim;
        Ok(m)
    }

    /// Smallest subspace containing `seeds` and stable under every generator.
    pub fn submodule_closure(&self, seeds: &[Vec<Rational>]) -> Subspace {
        let mut space = Subspace::zero(self.dim);
        let mut queue: Vec<Vec<Rational>> = seeds.to_vec();
        while let Some(v) = queue.pop() {
            if space.contains(&v) {
                continue;
            }
            space = space.with(&v);
            for a in &self.actions {
                queue.push(a.mul_vec(&v));
            }
        }
        space
    }

    pub fn is_stable(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|v| self.actions.iter().all(|a| sub.contains(&a.mul_vec(v))))
    }

    /// Matrix of the projection onto the quotient by `sub`, in the coordinates not used as pivots.
    pub fn quotient_map(&self, sub: &Subspace) -> Matrix {
        let free = sub.free_coords();
        let mut p = Matrix::zeros(free.len(), self.dim);
        for j in 0..self.dim {
            let mut e = vec![rat::zero(); self.dim];
            e[j] = rat::one();
            let r = sub.residue(&e);
            for (i, &f) in free.iter().enumerate() {
                p[(i, j)] = r[f].clone();
            }
        }
        p
    }

    pub fn quotient_module(&self, sub: &Subspace) -> Result<FinModule> {
        if sub.ambient() != self.dim {
            return Err(Error::Dimension(format!("subspace of Q^{} in a module of dimension {}", sub.ambient(), self.dim)));
        }
        if !self.is_stable(sub) {
            return Err(Error::NotStable);
        }
        let free = sub.free_coords();
        let proj = self.quotient_map(sub);
        let n = free.len();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut q = Matrix::zeros(n, n);
                for (j, &f) in free.iter().enumerate() {
                    let col = proj.mul_vec(&a.column(f));
                    for i in 0..n {
                        q[(i, j)] = col[i].clone();
                    }
                }
                q
            })
            .collect();
        let mut m = FinModule::new(self.owner.clone(), actions, &self.label)?;
        m.dim = n;
        Ok(m)
    }
}

/// Basis of `{T : T ρ_M(g) = ρ_N(g) T for all g}`, each `T` a `dim N × dim M` matrix.
pub fn hom_space(m: &FinModule, n: &FinModule) -> Result<Vec<Matrix>> {
    m.same_owner(n)?;
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dn * dm;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |i: usize, j: usize| i * dm + j;
    let mut rows = Vec::new();
    for (am, an) in m.actions.iter().zip(&n.actions) {
        for i in 0..dn {
            for k in 0..dm {
                let mut row = vec![rat::zero(); unknowns];
                for j in 0..dm {
                    row[var(i, j)] += &am[(j, k)];
                }
                for l in 0..dn {
                    row[var(l, k)] -= &an[(i, l)];
                }
                if row.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let ns = if rows.is_empty() { Matrix::identity(unknowns).row_vecs() } else { Matrix::from_rows(rows).nullspace() };
    Ok(ns
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(dm).map(<[Rational]>::to_vec).collect()))
        .collect())
}

/// Multiplicity of each listed irreducible as `dim Hom(L, M)`. Valid for semisimple owners only.
pub fn decompose(m: &FinModule, irreducibles: &[FinModule]) -> Result<DecompositionRecord> {
    let mut rec = DecompositionRecord { entries: Vec::new(), residual: m.dim as i64 };
    for l in irreducibles {
        let k = hom_space(l, m)?.len();
        if k > 0 {
            rec.entries.push((l.label.clone(), k));
            rec.residual -= (k * l.dim) as i64;
        }
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::rat::int;

    fn va1() -> Arc<AlgebraHandle> {
        let p = Presentation::new(
            "a1",
            &["e", "f", "h"],
            &["f", "e", "h"],
            &["e h + e", "h h - h - 2 f e", "f h - f", "e e", "f f", "h e - e h - 2 e", "h f - f h + 2 f", "e f - f e - h"],
        )
        .unwrap();
        Arc::new(AlgebraHandle::build(p, 12).unwrap())
    }

    fn l_half(a: &Arc<AlgebraHandle>, h: &[&[i64]]) -> FinModule {
        FinModule::new(
            a.clone(),
            vec![Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::from_ints(&[&[0, 0], &[1, 0]]), Matrix::from_ints(h)],
            "L_half",
        )
        .unwrap()
    }

    #[test]
    fn module_check() {
        let a = va1();
        assert_eq!(l_half(&a, &[&[1, 0], &[0, -1]]).check_module(), ModuleCheck::Pass);
        // e h + e only sees the second diagonal entry of h
        assert_eq!(l_half(&a, &[&[2, 0], &[0, -1]]).check_module(), ModuleCheck::Violation { relation: 1 });
        assert_eq!(l_half(&a, &[&[1, 0], &[0, -2]]).check_module(), ModuleCheck::Violation { relation: 0 });
        assert_eq!(FinModule::zero(a).check_module(), ModuleCheck::Pass);
    }

    #[test]
    fn homs_and_decomposition() {
        let a = va1();
        let l = l_half(&a, &[&[1, 0], &[0, -1]]);
        let t = FinModule::from_named(a.clone(), 1, &[], "trivial").unwrap();
        assert_eq!(t.check_module(), ModuleCheck::Pass);
        assert_eq!(hom_space(&l, &l).unwrap().len(), 1);
        assert_eq!(hom_space(&t, &l).unwrap().len(), 0);
        let ll = l.direct_sum(&l).unwrap();
        assert_eq!(hom_space(&l, &ll).unwrap().len(), 2);
        let rec = decompose(&ll.direct_sum(&t).unwrap(), &[t.clone(), l.clone()]).unwrap();
        assert_eq!(rec.entries, vec![("trivial".to_string(), 1), ("L_half".to_string(), 2)]);
        assert_eq!(rec.residual, 0);
    }

    #[test]
    fn closure_and_quotient() {
        let a = va1();
        let l = l_half(&a, &[&[1, 0], &[0, -1]]);
        assert_eq!(l.submodule_closure(&[]).dim(), 0);
        assert_eq!(l.submodule_closure(&[vec![int(0), int(3)]]).dim(), 2);
        assert_eq!(l.quotient_module(&Subspace::zero(2)).unwrap().actions, l.actions);
        assert_eq!(l.quotient_module(&Subspace::full(2)).unwrap().dim, 0);
        assert!(matches!(l.quotient_module(&Subspace::span(2, &[vec![int(1), int(0)]])), Err(Error::NotStable)));
        // left regular module: the ideal generated by h h is 4-dimensional
        let basis = a.basis_elements().unwrap();
        let reg = FinModule::new(
            a.clone(),
            a.generators().iter().map(|g| a.left_mult_matrix(&a.gen(g).unwrap()).unwrap()).collect(),
            "regular",
        )
        .unwrap();
        assert_eq!(reg.check_module(), ModuleCheck::Pass);
        let hh = a.coords(&a.parse("h h").unwrap()).unwrap();
        let sub = reg.submodule_closure(&[hh]);
        assert_eq!(sub.dim(), 4);
        let q = reg.quotient_module(&sub).unwrap();
        assert_eq!((q.dim, basis.len()), (1, 5));
    }
}
