//! Text and JSON forms of permutations, plus the small tokenizer shared by
//! every text format in the crate.
//!
//! Permutation grammar (whitespace between tokens is ignored):
//!
//! ```text
//! affine k=<K> w=[<w0>,<w1>,...]
//! fin chi=<C> lo=<L> v=[<v0>,...]
//! id@<k>   iota<n>@<k>   s<m>@<k>
//! ```
//!
//! Formatting prefers the shorthand forms whenever they apply, so
//! `format(parse(x))` is a fixed point after one step.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Ident(String),
    Int(i64),
    Sym(char),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "{s}"),
            Token::Int(n) => write!(f, "{n}"),
            Token::Sym(c) => write!(f, "{c}"),
        }
    }
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if c.is_ascii_digit()
            || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text
                .parse()
                .map_err(|_| Error::Parse(format!("integer out of range: {text}")))?;
            out.push(Token::Int(n));
        } else if "=[],@:_".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Cursor over a token stream.
pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(input: &str) -> Result<Parser> {
        Ok(Parser {
            tokens: tokenize(input)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    pub(crate) fn ident(&mut self) -> Result<String> {
        match self.next()? {
            Token::Ident(s) => Ok(s),
            t => Err(Error::Parse(format!("expected a keyword, found `{t}`"))),
        }
    }

    pub(crate) fn keyword(&mut self, word: &str) -> Result<()> {
        match self.next()? {
            Token::Ident(s) if s == word => Ok(()),
            t => Err(Error::Parse(format!("expected `{word}`, found `{t}`"))),
        }
    }

    pub(crate) fn sym(&mut self, c: char) -> Result<()> {
        match self.next()? {
            Token::Sym(s) if s == c => Ok(()),
            t => Err(Error::Parse(format!("expected `{c}`, found `{t}`"))),
        }
    }

    pub(crate) fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn int(&mut self) -> Result<i64> {
        match self.next()? {
            Token::Int(n) => Ok(n),
            t => Err(Error::Parse(format!("expected an integer, found `{t}`"))),
        }
    }

    /// `<word>=<int>`
    pub(crate) fn field(&mut self, word: &str) -> Result<i64> {
        self.keyword(word)?;
        self.sym('=')?;
        self.int()
    }

    /// `[<item>,<item>,...]`, possibly empty.
    pub(crate) fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Parser) -> Result<T>,
    ) -> Result<Vec<T>> {
        self.sym('[')?;
        let mut out = Vec::new();
        if self.eat_sym(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(']') {
                return Ok(out);
            }
            self.sym(',')?;
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("trailing input at `{t}`"))),
        }
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

fn parse_perm(p: &mut Parser) -> Result<Perm> {
    let head = p.ident()?;
    match head.as_str() {
        "affine" => {
            let k = p.field("k")?;
            p.keyword("w")?;
            p.sym('=')?;
            let w = p.list(Parser::int)?;
            Perm::make_affine(k, w)
        }
        "fin" => {
            let chi = p.field("chi")?;
            let lo = p.field("lo")?;
            p.keyword("v")?;
            p.sym('=')?;
            let v = p.list(Parser::int)?;
            Perm::make_finitary(chi, lo, v)
        }
        "id" => {
            p.sym('@')?;
            Perm::identity(p.int()?)
        }
        "iota" => {
            let n = p.int()?;
            p.sym('@')?;
            Perm::iota(n, p.int()?)
        }
        "s" => {
            let m = p.int()?;
            p.sym('@')?;
            Perm::sigma(m, p.int()?)
        }
        other => Err(Error::Parse(format!("unknown permutation form `{other}`"))),
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses any of the text forms. Malformed text yields [`Error::Parse`];
    /// well-formed text describing an invalid permutation yields the
    /// corresponding domain error.
    fn from_str(s: &str) -> Result<Perm> {
        let mut p = Parser::new(s)?;
        let perm = parse_perm(&mut p)?;
        p.finish()?;
        Ok(perm)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.period();
        if self.is_iota() {
            return match self.shift() {
                0 => write!(f, "id@{k}"),
                n => write!(f, "iota{n}@{k}"),
            };
        }
        if let Some(m) = self.sigma_index() {
            return write!(f, "s{m}@{k}");
        }
        match (self.finitary_parts(), self.affine_window()) {
            (Some((chi, lo, vals)), _) => {
                write!(f, "fin chi={chi} lo={lo} v=")?;
                write_list(f, vals)
            }
            (None, Some(w)) => {
                write!(f, "affine k={k} w=")?;
                write_list(f, w)
            }
            (None, None) => unreachable!("every Perm has one representation"),
        }
    }
}

/// JSON mirror of [`Perm`]:
/// `{"period":K,"window":[...]}` or `{"period":0,"chi":C,"lo":L,"vals":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermJson {
    pub period: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vals: Option<Vec<i64>>,
}

impl From<Perm> for PermJson {
    fn from(p: Perm) -> PermJson {
        match p.finitary_parts() {
            Some((chi, lo, vals)) => PermJson {
                period: 0,
                window: None,
                chi: Some(chi),
                lo: Some(lo),
                vals: Some(vals.to_vec()),
            },
            None => PermJson {
                period: p.period(),
                window: p.affine_window().map(<[i64]>::to_vec),
                chi: None,
                lo: None,
                vals: None,
            },
        }
    }
}

impl TryFrom<PermJson> for Perm {
    type Error = Error;

    fn try_from(j: PermJson) -> Result<Perm> {
        if j.period == 0 {
            let chi = j
                .chi
                .ok_or_else(|| Error::Parse("missing field `chi`".into()))?;
            Perm::make_finitary(chi, j.lo.unwrap_or(0), j.vals.unwrap_or_default())
        } else {
            let window = j
                .window
                .ok_or_else(|| Error::Parse("missing field `window`".into()))?;
            Perm::make_affine(j.period, window)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_forms() {
        assert_eq!("s0@0".parse::<Perm>().unwrap(), Perm::sigma(0, 0).unwrap());
        assert_eq!(
            "iota-2@3".parse::<Perm>().unwrap(),
            Perm::iota(-2, 3).unwrap()
        );
        assert_eq!("id@2".parse::<Perm>().unwrap(), Perm::identity(2).unwrap());
        assert_eq!(Perm::sigma(5, 2).unwrap().to_string(), "s1@2");
        assert_eq!(Perm::iota(3, 0).unwrap().to_string(), "iota3@0");
    }

    #[test]
    fn long_forms_tolerate_whitespace() {
        let a: Perm = " fin chi = 1 lo=-1 v = [ 1, -1 ,0,-2 ] ".parse().unwrap();
        assert_eq!(a.to_string(), "fin chi=1 lo=-1 v=[1,-1,0,-2]");
        let b: Perm = "affine k=2 w=[0,3]".parse().unwrap();
        assert_eq!(b.to_string(), "affine k=2 w=[0,3]");
        let c: Perm = "affine k=2 w=[1,0]".parse().unwrap();
        assert_eq!(c.to_string(), "s0@2");
        let d: Perm = "fin chi=0 lo=5 v=[5,6]".parse().unwrap();
        assert_eq!(d.to_string(), "id@0");
    }

    #[test]
    fn malformed_text_is_parse_error() {
        for bad in [
            "",
            "fin chi=1",
            "affine k=2 w=[1 0]",
            "s0@",
            "perm",
            "s0@0 x",
            "fin chi=a",
        ] {
            assert!(bad.parse::<Perm>().unwrap_err().is_parse(), "{bad}");
        }
        let e = "affine k=2 w=[0,2]".parse::<Perm>().unwrap_err();
        assert_eq!(e.kind(), "DuplicateResidue");
    }

    #[test]
    fn json_mirror() {
        let p: Perm = "fin chi=1 lo=-1 v=[1,-1,0,-2]".parse().unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"period":0,"chi":1,"lo":-1,"vals":[1,-1,0,-2]}"#);
        assert_eq!(serde_json::from_str::<Perm>(&j).unwrap(), p);
        let a = Perm::make_affine(2, vec![0, 3]).unwrap();
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"period":2,"window":[0,3]}"#);
        assert!(serde_json::from_str::<Perm>(r#"{"period":2,"window":[0,2]}"#).is_err());
    }
}
