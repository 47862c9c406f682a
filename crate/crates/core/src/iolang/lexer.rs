use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    Int(String),
    Slash,
    Plus,
    Minus,
    Colon,
    Arrow,
    FatArrow,
    LBracket,
    RBracket,
    Semi,
    Eq,
    Gt,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::FatArrow => "`=>`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Gt => "`>`".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub const KEYWORDS: &[&str] = &["algebra", "gens", "order", "deglex", "rel", "end", "morphism", "map", "module", "over", "dim", "act"];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: ln + 1, col });
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let s = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                push(&mut out, Tok::Name(chars[s..i].iter().collect()));
            } else if c.is_ascii_digit() {
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                    return Err(Error::Parse { line: ln + 1, col: i + 1, message: "malformed number".into() });
                }
                push(&mut out, Tok::Int(chars[s..i].iter().collect()));
            } else {
                let next = chars.get(i + 1).copied();
                let (tok, w) = match (c, next) {
                    ('-', Some('>')) => (Tok::Arrow, 2),
                    ('=', Some('>')) => (Tok::FatArrow, 2),
                    ('/', _) => (Tok::Slash, 1),
                    ('+', _) => (Tok::Plus, 1),
                    ('-', _) => (Tok::Minus, 1),
                    (':', _) => (Tok::Colon, 1),
                    ('[', _) => (Tok::LBracket, 1),
                    (']', _) => (Tok::RBracket, 1),
                    (';', _) => (Tok::Semi, 1),
                    ('=', _) => (Tok::Eq, 1),
                    ('>', _) => (Tok::Gt, 1),
                    _ => return Err(Error::Parse { line: ln + 1, col, message: format!("unexpected character `{c}`") }),
                };
                push(&mut out, tok);
                i += w;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let t = tokenize("rel 1/2 x -> y # note\n  map").unwrap();
        assert_eq!(t[0].tok, Tok::Name("rel".into()));
        assert_eq!(t[2].tok, Tok::Slash);
        assert_eq!(t[5].tok, Tok::Arrow);
        assert_eq!(t.last().unwrap().line, 2);
        assert_eq!(t.last().unwrap().col, 3);
        assert!(tokenize("a $ b").is_err());
        assert!(tokenize("3x").is_err());
    }
}
