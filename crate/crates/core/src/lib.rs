//! Exact computation with finitely presented associative algebras over the rationals:
//! noncommutative rewriting, finite-dimensional quotients, algebra morphisms, modules given
//! by action matrices, induction and restriction along morphisms, and characters.

pub mod algebra;
pub mod catalog;
pub mod chars;
pub mod cli;
pub mod error;
pub mod freealg;
pub mod induct;
pub mod iolang;
pub mod linalg;
pub mod morphism;
pub mod rat;
pub mod repmod;
pub mod rewrite;
pub mod verify;

pub use algebra::{AlgebraHandle, Dimension, Element, Presentation};
pub use error::{Error, Result};
pub use freealg::{GenId, MonomialOrder, NcPoly, Word};
pub use linalg::{Matrix, Subspace};
pub use rat::Rational;
