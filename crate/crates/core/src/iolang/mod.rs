//! The presentation file language: lexer, parser, pretty-printer and elaboration.
//!
//! ```text
//! algebra a_va1
//!   gens e f h
//!   order deglex f > e > h
//!   rel h h - h - 2 f e      # juxtaposition is the product
//! end
//! morphism m : heis -> a_va1
//!   map x => h
//! end
//! module M over a_va1 dim 1
//!   act h = [0]
//! end
//! ```

mod elab;
mod lexer;
mod parser;
mod pretty;

pub use elab::{elaborate, ExternalAlgebras, Workspace};
pub use lexer::{is_keyword, tokenize, Tok, Token, KEYWORDS};
pub use parser::{parse_file, parse_file_with, parse_matrix, parse_poly, AlgebraDecl, Block, ModuleDecl, MorphismDecl, SourceFile};
pub use pretty::{pretty, pretty_with};
