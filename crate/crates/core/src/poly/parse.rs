//! Polynomial text syntax: `2*X^3*Y - Z + 1`. Multiplication must be written
//! explicitly; `^` takes a nonnegative integer exponent.

use std::fmt;

use super::{Monomial, Poly, RingRef};
use crate::error::{Error, Result};

/// A parsed but ring-independent polynomial: a signed sum of products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<TermExpr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermExpr {
    pub negative: bool,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Int(u64),
    Var(String, u32),
}

/// Lexical items of the polynomial sublanguage, shared with the script parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyToken {
    Int(u64),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
}

pub fn tokenize(text: &str) -> Result<Vec<(PolyToken, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((PolyToken::Plus, col));
                i += 1
            }
            '-' => {
                out.push((PolyToken::Minus, col));
                i += 1
            }
            '*' => {
                out.push((PolyToken::Star, col));
                i += 1
            }
            '^' => {
                out.push((PolyToken::Caret, col));
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s.parse::<u64>().map_err(|_| Error::PolySyntax {
                    column: col,
                    message: format!("integer `{s}` too large"),
                })?;
                out.push((PolyToken::Int(v), col));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((PolyToken::Name(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(Error::PolySyntax {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

pub fn parse_poly(text: &str) -> Result<PolyExpr> {
    let toks = tokenize(text)?;
    parse_tokens(&toks, text.chars().count() + 1)
}

/// Parses a complete token sequence; `end_col` is reported for premature ends.
pub fn parse_tokens(toks: &[(PolyToken, usize)], end_col: usize) -> Result<PolyExpr> {
    let err = |pos: usize, msg: &str| {
        let column = toks.get(pos).map(|t| t.1).unwrap_or(end_col);
        Error::PolySyntax {
            column,
            message: msg.to_string(),
        }
    };
    let mut pos = 0;
    let mut terms = Vec::new();
    if toks.is_empty() {
        return Err(err(0, "expected a polynomial"));
    }
    loop {
        let mut negative = false;
        match toks.get(pos).map(|t| &t.0) {
            Some(PolyToken::Minus) => {
                negative = true;
                pos += 1;
            }
            Some(PolyToken::Plus) if terms.is_empty() => pos += 1,
            _ => {}
        }
        let mut factors = Vec::new();
        loop {
            match toks.get(pos).map(|t| &t.0) {
                Some(PolyToken::Int(v)) => {
                    factors.push(Factor::Int(*v));
                    pos += 1;
                }
                Some(PolyToken::Name(n)) => {
                    let name = n.clone();
                    pos += 1;
                    let mut exp = 1u32;
                    if let Some(PolyToken::Caret) = toks.get(pos).map(|t| &t.0) {
                        pos += 1;
                        match toks.get(pos).map(|t| &t.0) {
                            Some(PolyToken::Int(v)) => {
                                exp = u32::try_from(*v).map_err(|_| err(pos, "exponent too large"))?;
                                pos += 1;
                            }
                            _ => return Err(err(pos, "expected integer exponent after `^`")),
                        }
                    }
                    factors.push(Factor::Var(name, exp));
                }
                _ => return Err(err(pos, "expected a number or variable")),
            }
            match toks.get(pos).map(|t| &t.0) {
                Some(PolyToken::Star) => pos += 1,
                Some(PolyToken::Int(_)) | Some(PolyToken::Name(_)) => {
                    return Err(err(pos, "implicit multiplication is not allowed; use `*`"))
                }
                Some(PolyToken::Caret) => return Err(err(pos, "unexpected `^`")),
                _ => break,
            }
        }
        terms.push(TermExpr { negative, factors });
        match toks.get(pos).map(|t| &t.0) {
            None => break,
            Some(PolyToken::Plus) => {
                pos += 1;
                if matches!(toks.get(pos).map(|t| &t.0), Some(PolyToken::Minus) | None) {
                    return Err(err(pos, "expected a term after `+`"));
                }
            }
            Some(PolyToken::Minus) => {}
            Some(_) => return Err(err(pos, "expected `+` or `-`")),
        }
    }
    Ok(PolyExpr { terms })
}

impl PolyExpr {
    pub fn to_poly(&self, ring: &RingRef) -> Result<Poly> {
        let field = ring.field();
        let p = field.characteristic() as u64;
        let n = ring.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut c: u64 = 1;
            let mut e = vec![0u32; n];
            for f in &t.factors {
                match f {
                    Factor::Int(v) => c = c * (v % p) % p,
                    Factor::Var(name, x) => {
                        let i = ring.var_index(name)?;
                        e[i] = e[i]
                            .checked_add(*x)
                            .ok_or_else(|| Error::Capacity(format!("exponent of {name}")))?;
                    }
                }
            }
            let c = c as i64;
            terms.push((if t.negative { -c } else { c }, Monomial::new(e)));
        }
        Poly::from_terms(ring, terms)
    }

    /// Variable names mentioned, in order of first appearance.
    pub fn variables(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for t in &self.terms {
            for f in &t.factors {
                if let Factor::Var(n, _) = f {
                    if !out.contains(&n.as_str()) {
                        out.push(n);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            match (k, t.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            for (j, fac) in t.factors.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                match fac {
                    Factor::Int(v) => write!(f, "{v}")?,
                    Factor::Var(n, 1) => write!(f, "{n}")?,
                    Factor::Var(n, e) => write!(f, "{n}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
