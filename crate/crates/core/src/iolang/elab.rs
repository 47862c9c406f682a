use std::collections::BTreeMap;
use std::sync::Arc;

use super::parser::{Block, SourceFile};
use crate::algebra::{order_from_names, AlgebraHandle, Presentation};
use crate::error::{Error, Result};
use crate::morphism::AlgebraMorphism;
use crate::repmod::FinModule;

/// The algebras, morphisms and modules declared in one file, built and ready to use.
#[derive(Debug, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Arc<AlgebraHandle>>,
    pub morphisms: BTreeMap<String, AlgebraMorphism>,
    pub modules: BTreeMap<String, FinModule>,
}

/// Algebras defined outside the file, looked up by name.
pub type ExternalAlgebras<'a> = &'a dyn Fn(&str) -> Option<Arc<AlgebraHandle>>;

impl Workspace {
    fn algebra(&self, name: &str, external: ExternalAlgebras<'_>) -> Result<Arc<AlgebraHandle>> {
        self.algebras.get(name).cloned().or_else(|| external(name)).ok_or_else(|| Error::UnknownId(name.into()))
    }
}

/// Completes every declared algebra (to `max_degree`) and builds the morphisms and modules.
pub fn elaborate(file: &SourceFile, max_degree: usize, external: ExternalAlgebras<'_>) -> Result<Workspace> {
    let mut ws = Workspace::default();
    for block in &file.blocks {
        match block {
            Block::Algebra(a) => {
                let prec: Vec<&str> = a.order.iter().flatten().map(String::as_str).collect();
                let order = order_from_names(&a.gens, &prec)?;
                let pres = Presentation { name: a.name.clone(), generators: a.gens.clone(), order, relations: a.relations.clone() };
                ws.algebras.insert(a.name.clone(), Arc::new(AlgebraHandle::build(pres, max_degree)?));
            }
            Block::Morphism(m) => {
                let source = ws.algebra(&m.source, external)?;
                let target = ws.algebra(&m.target, external)?;
                let mut images = vec![None; source.num_gens()];
                for (g, p) in &m.maps {
                    images[source.presentation().gen_id(g)?.0 as usize] = Some(target.element(p));
                }
                let images = images
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| e.ok_or_else(|| Error::Invalid(format!("morphism `{}` gives no image for `{}`", m.name, source.generators()[i]))))
                    .collect::<Result<_>>()?;
                ws.morphisms.insert(m.name.clone(), AlgebraMorphism::new(&m.name, source, target, images)?);
            }
            Block::Module(m) => {
                let owner = ws.algebra(&m.over, external)?;
                let acts: Vec<(&str, _)> = m.acts.iter().map(|(g, a)| (g.as_str(), a.clone())).collect();
                if let Some((g, a)) = acts.iter().find(|(_, a)| a.nrows() != m.dim || a.ncols() != m.dim) {
                    return Err(Error::Dimension(format!("action of `{g}` in module `{}` is {}x{}, expected {}x{}", m.name, a.nrows(), a.ncols(), m.dim, m.dim)));
                }
                ws.modules.insert(m.name.clone(), FinModule::from_named(owner, m.dim, &acts, &m.name)?);
            }
        }
    }
    Ok(ws)
}
