use std::collections::HashMap;

use super::lexer::{is_keyword, tokenize, Tok, Token};
use crate::error::{Error, Result};
use crate::freealg::{GenId, NcPoly, Word};
use crate::linalg::Matrix;
use crate::rat::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: String,
    pub gens: Vec<String>,
    /// Precedence, largest first, entries `name` or `name:weight`; `None` keeps declaration order.
    pub order: Option<Vec<String>>,
    pub relations: Vec<NcPoly>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Source generator name and its image, written in the target's generators.
    pub maps: Vec<(String, NcPoly)>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub over: String,
    pub dim: usize,
    pub acts: Vec<(String, Matrix)>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Algebra(AlgebraDecl),
    Morphism(MorphismDecl),
    Module(ModuleDecl),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceFile {
    pub blocks: Vec<Block>,
}

impl SourceFile {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraDecl> {
        self.blocks.iter().find_map(|b| match b {
            Block::Algebra(a) if a.name == name => Some(a),
            _ => None,
        })
    }
}

/// Generator lists of algebras defined outside the file being parsed.
pub type ExternalGens<'a> = &'a dyn Fn(&str) -> Option<Vec<String>>;

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
    gens: HashMap<String, Vec<String>>,
    external: ExternalGens<'a>,
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, message: message.into() })
}

impl<'a> Parser<'a> {
    fn new(src: &str, external: ExternalGens<'a>) -> Result<Self> {
        let toks = tokenize(src)?;
        let lines = src.lines().count().max(1);
        let last_len = src.lines().last().map_or(0, |l| l.chars().count());
        Ok(Parser { toks, pos: 0, eof: (lines, last_len + 1), gens: HashMap::new(), external })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.eof, |t| (t.line, t.col))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        err(l, c, message)
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        match self.peek() {
            Some(t) => self.fail(format!("expected {wanted}, found {}", t.describe())),
            None => self.fail(format!("expected {wanted}, found end of input")),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Name(n)) if n == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.at_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&format!("`{kw}`"))
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Name(n)) if !is_keyword(n) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.unexpected("a name"),
        }
    }

    fn at_name(&self) -> bool {
        matches!(self.peek(), Some(Tok::Name(n)) if !is_keyword(n))
    }

    fn rational(&mut self) -> Result<Rational> {
        let (l, c) = self.here();
        let Some(Tok::Int(n)) = self.peek().cloned() else { return self.unexpected("a number") };
        self.pos += 1;
        let mut text = n;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(d)) => {
                    self.pos += 1;
                    text = format!("{text}/{d}");
                }
                _ => return err(l, c, "malformed rational: missing denominator"),
            }
        }
        rat::parse(&text).map_or_else(|| err(l, c, format!("malformed rational `{text}`")), Ok)
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Ok(-self.rational()?)
        } else {
            self.rational()
        }
    }

    fn lookup_gens(&self, alg: &str) -> Result<Vec<String>> {
        if let Some(g) = self.gens.get(alg) {
            return Ok(g.clone());
        }
        (self.external)(alg).map_or_else(|| self.fail(format!("unknown algebra `{alg}`")), Ok)
    }

    fn poly(&mut self, gens: &[String]) -> Result<NcPoly> {
        let mut p = NcPoly::zero();
        let mut sign = rat::one();
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = -sign;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, w) = self.term(gens)?;
            p.add_term(w, sign * c);
            match self.peek() {
                Some(Tok::Plus) => sign = rat::one(),
                Some(Tok::Minus) => sign = -rat::one(),
                _ => break,
            }
            self.pos += 1;
        }
        Ok(p)
    }

    fn term(&mut self, gens: &[String]) -> Result<(Rational, Word)> {
        let coeff = if matches!(self.peek(), Some(Tok::Int(_))) { Some(self.rational()?) } else { None };
        let mut letters = Vec::new();
        while self.at_name() {
            let (l, c) = self.here();
            let n = self.name()?;
            match gens.iter().position(|g| *g == n) {
                Some(i) => letters.push(GenId(i as u32)),
                None => return err(l, c, format!("unknown generator `{n}`")),
            }
        }
        if coeff.is_none() && letters.is_empty() {
            return self.unexpected("a term");
        }
        Ok((coeff.unwrap_or_else(rat::one), Word(letters)))
    }

    fn matrix(&mut self) -> Result<Matrix> {
        self.expect(Tok::LBracket)?;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        loop {
            let (l, c) = self.here();
            let mut row = Vec::new();
            while matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Minus)) {
                row.push(self.signed_rational()?);
            }
            if row.is_empty() {
                return self.unexpected("a matrix entry");
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return err(l, c, format!("dimension mismatch: row has {} entries, expected {}", row.len(), first.len()));
                }
            }
            rows.push(row);
            match self.peek() {
                Some(Tok::Semi) => self.pos += 1,
                Some(Tok::RBracket) => {
                    self.pos += 1;
                    break;
                }
                _ => return self.unexpected("`;` or `]`"),
            }
        }
        Ok(Matrix::from_rows(rows))
    }

    fn file(&mut self) -> Result<SourceFile> {
        let mut blocks = Vec::new();
        while self.peek().is_some() {
            blocks.push(self.block()?);
        }
        if blocks.is_empty() {
            return self.fail("empty file: expected at least one block");
        }
        Ok(SourceFile { blocks })
    }

    fn block(&mut self) -> Result<Block> {
        let line = self.here().0;
        if self.at_keyword("algebra") {
            self.pos += 1;
            let name = self.name()?;
            self.expect_keyword("gens")?;
            let mut gens = Vec::new();
            while self.at_name() {
                let (l, c) = self.here();
                let g = self.name()?;
                if gens.contains(&g) {
                    return err(l, c, format!("generator `{g}` declared twice"));
                }
                gens.push(g);
            }
            if gens.is_empty() {
                return self.unexpected("a generator name");
            }
            let mut order = None;
            if self.at_keyword("order") {
                self.pos += 1;
                self.expect_keyword("deglex")?;
                let mut prec = Vec::new();
                loop {
                    let (l, c) = self.here();
                    let g = self.name()?;
                    if !gens.contains(&g) {
                        return err(l, c, format!("unknown generator `{g}`"));
                    }
                    if prec.iter().any(|p: &String| p.split(':').next() == Some(g.as_str())) {
                        return err(l, c, format!("generator `{g}` repeated in order"));
                    }
                    // optional weight, kept as `name:w` when it differs from 1
                    let mut entry = g;
                    if self.peek() == Some(&Tok::Colon) {
                        self.pos += 1;
                        let (l, c) = self.here();
                        match self.bump() {
                            Some(Tok::Int(w)) if w.parse::<u32>().is_ok_and(|w| w > 0) => {
                                let w: u32 = w.parse().unwrap();
                                if w != 1 {
                                    entry = format!("{entry}:{w}");
                                }
                            }
                            _ => return err(l, c, "expected a positive weight"),
                        }
                    }
                    prec.push(entry);
                    if self.peek() == Some(&Tok::Gt) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                if prec.len() != gens.len() {
                    return self.fail("order must list every generator");
                }
                order = Some(prec);
            }
            let mut relations = Vec::new();
            while self.at_keyword("rel") {
                self.pos += 1;
                relations.push(self.poly(&gens)?);
            }
            self.expect_keyword("end")?;
            self.gens.insert(name.clone(), gens.clone());
            Ok(Block::Algebra(AlgebraDecl { name, gens, order, relations, line }))
        } else if self.at_keyword("morphism") {
            self.pos += 1;
            let name = self.name()?;
            self.expect(Tok::Colon)?;
            let source = self.name()?;
            let sgens = self.lookup_gens(&source).or_else(|_| err(line, 1, format!("unknown algebra `{source}`")))?;
            self.expect(Tok::Arrow)?;
            let target = self.name()?;
            let tgens = self.lookup_gens(&target).or_else(|_| err(line, 1, format!("unknown algebra `{target}`")))?;
            let mut maps: Vec<(String, NcPoly)> = Vec::new();
            while self.at_keyword("map") {
                self.pos += 1;
                let (l, c) = self.here();
                let g = self.name()?;
                if !sgens.contains(&g) {
                    return err(l, c, format!("unknown generator `{g}` of `{source}`"));
                }
                if maps.iter().any(|(h, _)| *h == g) {
                    return err(l, c, format!("generator `{g}` mapped twice"));
                }
                self.expect(Tok::FatArrow)?;
                maps.push((g, self.poly(&tgens)?));
            }
            self.expect_keyword("end")?;
            Ok(Block::Morphism(MorphismDecl { name, source, target, maps, line }))
        } else if self.at_keyword("module") {
            self.pos += 1;
            let name = self.name()?;
            self.expect_keyword("over")?;
            let over = self.name()?;
            let gens = self.lookup_gens(&over).or_else(|_| err(line, 1, format!("unknown algebra `{over}`")))?;
            self.expect_keyword("dim")?;
            let (l, c) = self.here();
            let Some(Tok::Int(d)) = self.bump() else { return err(l, c, "expected a dimension") };
            let dim: usize = d.parse().or_else(|_| err(l, c, "dimension out of range"))?;
            let mut acts: Vec<(String, Matrix)> = Vec::new();
            while self.at_keyword("act") {
                self.pos += 1;
                let (l, c) = self.here();
                let g = self.name()?;
                if !gens.contains(&g) {
                    return err(l, c, format!("unknown generator `{g}` of `{over}`"));
                }
                self.expect(Tok::Eq)?;
                let (ml, mc) = self.here();
                let m = self.matrix()?;
                if m.nrows() != dim || m.ncols() != dim {
                    return err(ml, mc, format!("dimension mismatch: {}x{} matrix in a module of dimension {dim}", m.nrows(), m.ncols()));
                }
                acts.push((g, m));
            }
            self.expect_keyword("end")?;
            Ok(Block::Module(ModuleDecl { name, over, dim, acts, line }))
        } else {
            self.unexpected("`algebra`, `morphism` or `module`")
        }
    }
}

pub fn parse_file(src: &str) -> Result<SourceFile> {
    parse_file_with(src, &|_| None)
}

/// Parses a file whose morphisms and modules may refer to algebras known elsewhere.
pub fn parse_file_with(src: &str, external: ExternalGens<'_>) -> Result<SourceFile> {
    Parser::new(src, external)?.file()
}

/// Parses a single polynomial written in the given generator names.
pub fn parse_poly(src: &str, gens: &[String]) -> Result<NcPoly> {
    let mut p = Parser::new(src, &|_| None)?;
    if p.peek().is_none() {
        return p.fail("empty expression");
    }
    let out = p.poly(gens)?;
    if p.peek().is_some() {
        return p.unexpected("end of expression");
    }
    Ok(out)
}

/// Parses a bracketed matrix.
pub fn parse_matrix(src: &str) -> Result<Matrix> {
    let mut p = Parser::new(src, &|_| None)?;
    let m = p.matrix()?;
    if p.peek().is_some() {
        return p.unexpected("end of matrix");
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn g(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn polynomial_syntax() {
        let gens = g(&["e", "f", "h"]);
        let p = parse_poly("h h - h - 2 f e", &gens).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&Word::from_ids(&[1, 0])), rat::int(-2));
        let q = parse_poly("-1/2 e + 3", &gens).unwrap();
        assert_eq!(q.coeff(&Word::from_ids(&[0])), frac(-1, 2));
        assert_eq!(q.coeff(&Word::empty()), rat::int(3));
    }

    #[test]
    fn diagnostics_carry_positions() {
        let gens = g(&["e", "f", "h"]);
        match parse_poly("e q", &gens) {
            Err(Error::Parse { line: 1, col: 3, message }) => assert!(message.contains("unknown generator")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("1/ e", &gens), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(parse_poly("1/0 e", &gens), Err(Error::Parse { .. })));
    }

    #[test]
    fn blocks() {
        let src = "algebra a gens x y order deglex y > x\n rel y x - x y\nend\n\
                   morphism m : a -> a map x => y end\n\
                   module M over a dim 2 act x = [0 1; 0 0] end\n";
        let f = parse_file(src).unwrap();
        assert_eq!(f.blocks.len(), 3);
        let bad = "module M over a dim 2 act x = [0 1; 0] end";
        assert!(matches!(parse_file(&format!("algebra a gens x end\n{bad}")), Err(Error::Parse { line: 2, .. })));
        assert!(parse_file("morphism m : nope -> a end").is_err());
        assert!(matches!(parse_file("algebra a gens x"), Err(Error::Parse { .. })));
        let w = parse_file("algebra a gens x y order deglex y > x:2 end").unwrap();
        assert_eq!(w.algebra("a").unwrap().order, Some(vec!["y".to_string(), "x:2".to_string()]));
        assert!(parse_file("algebra a gens x y order deglex y > x:0 end").is_err());
        assert!(parse_file("algebra a gens x y order deglex y:1 > y end").is_err());
    }
}
