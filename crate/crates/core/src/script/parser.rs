use std::collections::HashSet;

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::ScriptError;
use crate::closure::ClosureMode;
use crate::error::Error;
use crate::poly::parse::{parse_tokens, PolyToken};
use crate::poly::PolyExpr;

const RESERVED: [&str; 16] = [
    "ring", "let", "check", "report", "poly", "with", "primes", "ideal", "meet", "colon",
    "bracket", "dc", "ker", "tight", "ne", "unmixed",
];

/// Parses a script, resolving names as it goes: every name is bound once and
/// before its first use.
pub fn parse_script(src: &str) -> Result<Script, ScriptError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        rings: HashSet::new(),
        ideals: HashSet::new(),
    };
    let mut statements = Vec::new();
    while p.peek() != &Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    rings: HashSet<String>,
    ideals: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> Pos {
        let t = &self.toks[self.pos];
        Pos {
            line: t.line,
            col: t.col,
        }
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ScriptError> {
        let t = &self.toks[self.pos];
        Err(ScriptError::Syntax {
            line: t.line,
            col: t.col,
            message: format!("expected {}, found {}", expected.join(" or "), t.tok.describe()),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ScriptError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ScriptError> {
        match self.peek() {
            Tok::Name(n) if n == word => {
                self.bump();
                Ok(())
            }
            _ => self.fail(&[&format!("`{word}`")]),
        }
    }

    fn name(&mut self) -> Result<String, ScriptError> {
        match self.peek().clone() {
            Tok::Name(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["a name"]),
        }
    }

    fn int(&mut self) -> Result<u64, ScriptError> {
        match *self.peek() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => self.fail(&["an integer"]),
        }
    }

    fn binder(&mut self) -> Result<String, ScriptError> {
        let pos = self.here();
        let name = self.name()?;
        if RESERVED.contains(&name.as_str()) {
            return Err(ScriptError::Syntax {
                line: pos.line,
                col: pos.col,
                message: format!("`{name}` is a reserved word"),
            });
        }
        if self.rings.contains(&name) || self.ideals.contains(&name) {
            return Err(ScriptError::DuplicateBinding {
                line: pos.line,
                col: pos.col,
                name,
            });
        }
        Ok(name)
    }

    fn statement(&mut self) -> Result<Statement, ScriptError> {
        let pos = self.here();
        let word = match self.peek() {
            Tok::Name(n) => n.clone(),
            _ => return self.fail(&["`ring`", "`let`", "`check`", "`report`"]),
        };
        let node = match word.as_str() {
            "ring" => {
                self.bump();
                self.ring()?
            }
            "let" => {
                self.bump();
                let name = self.binder()?;
                self.expect(Tok::Eq)?;
                let expr = self.expr()?;
                self.ideals.insert(name.clone());
                Stmt::Let { name, expr }
            }
            "check" => {
                self.bump();
                let kind = self.pick(&CheckKind::ALL, |k| k.name())?;
                let args = self.check_args(kind)?;
                Stmt::Check { kind, args }
            }
            "report" => {
                self.bump();
                let kind = self.pick(&ReportKind::ALL, |k| k.name())?;
                let args = self.report_args(kind)?;
                Stmt::Report { kind, args }
            }
            _ => return self.fail(&["`ring`", "`let`", "`check`", "`report`"]),
        };
        Ok(Statement { pos, node })
    }

    fn pick<K: Copy>(&mut self, all: &[K], name: impl Fn(&K) -> &'static str) -> Result<K, ScriptError> {
        if let Tok::Name(n) = self.peek() {
            if let Some(k) = all.iter().find(|k| name(k) == n) {
                let k = *k;
                self.bump();
                return Ok(k);
            }
        }
        let names: Vec<String> = all.iter().map(|k| format!("`{}`", name(k))).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        self.fail(&refs)
    }

    fn ring(&mut self) -> Result<Stmt, ScriptError> {
        let name = self.binder()?;
        self.expect(Tok::Eq)?;
        let base_pos = self.here();
        let base_name = self.name()?;
        let base = if base_name == "poly" {
            self.expect(Tok::LParen)?;
            self.keyword("p")?;
            self.expect(Tok::Eq)?;
            let p = self.int()?;
            self.expect(Tok::Semi)?;
            let mut vars = vec![self.name()?];
            while *self.peek() == Tok::Comma {
                self.bump();
                vars.push(self.name()?);
            }
            self.expect(Tok::RParen)?;
            RingBase::Poly { p, vars }
        } else {
            if !self.rings.contains(&base_name) {
                return Err(ScriptError::UnknownIdentifier {
                    line: base_pos.line,
                    col: base_pos.col,
                    name: base_name,
                });
            }
            RingBase::Named(base_name)
        };
        let mut quotient = None;
        let mut primes = Vec::new();
        if *self.peek() == Tok::Slash {
            self.bump();
            quotient = Some(self.expr()?);
            if matches!(self.peek(), Tok::Name(n) if n == "with") {
                self.bump();
                self.keyword("primes")?;
                self.expect(Tok::LBracket)?;
                primes.push(self.expr()?);
                while *self.peek() == Tok::Comma {
                    self.bump();
                    primes.push(self.expr()?);
                }
                self.expect(Tok::RBracket)?;
            }
        }
        self.rings.insert(name.clone());
        Ok(Stmt::Ring {
            name,
            base,
            quotient,
            primes,
        })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let mut left = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let right = self.term()?;
            left = Expr::Sum(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, ScriptError> {
        let mut left = self.atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let right = self.atom()?;
            left = Expr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Expr, ScriptError> {
        let pos = self.here();
        let word = match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::Name(n) => n,
            _ => return self.fail(&["an ideal expression"]),
        };
        self.bump();
        let two = |p: &mut Parser| -> Result<(Expr, Expr), ScriptError> {
            p.expect(Tok::LParen)?;
            let a = p.expr()?;
            p.expect(Tok::Comma)?;
            let b = p.expr()?;
            p.expect(Tok::RParen)?;
            Ok((a, b))
        };
        Ok(match word.as_str() {
            "ideal" => {
                self.expect(Tok::LParen)?;
                let mut polys = vec![self.poly()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    polys.push(self.poly()?);
                }
                self.expect(Tok::RParen)?;
                Expr::Ideal(polys)
            }
            "meet" => {
                let (a, b) = two(self)?;
                Expr::Meet(Box::new(a), Box::new(b))
            }
            "colon" => {
                let (a, b) = two(self)?;
                Expr::Colon(Box::new(a), Box::new(b))
            }
            "bracket" => {
                self.expect(Tok::LParen)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let epos = self.here();
                let e = self.int()?;
                let e = u32::try_from(e).map_err(|_| ScriptError::Syntax {
                    line: epos.line,
                    col: epos.col,
                    message: "exponent too large".into(),
                })?;
                self.expect(Tok::RParen)?;
                Expr::Bracket(Box::new(a), e)
            }
            "dc" => {
                self.expect(Tok::LParen)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let m = self.mode()?;
                self.expect(Tok::RParen)?;
                Expr::Dc(Box::new(a), m)
            }
            "ker" => {
                self.expect(Tok::LParen)?;
                let mut targets = vec![self.name()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    targets.push(self.name()?);
                }
                self.expect(Tok::Semi)?;
                let mut images = Vec::new();
                loop {
                    let v = self.name()?;
                    self.expect(Tok::Arrow)?;
                    images.push((v, self.poly()?));
                    if *self.peek() != Tok::Comma {
                        break;
                    }
                    self.bump();
                }
                self.expect(Tok::RParen)?;
                Expr::Ker { targets, images }
            }
            _ if self.ideals.contains(&word) => Expr::Name(word),
            _ => {
                return Err(ScriptError::UnknownIdentifier {
                    line: pos.line,
                    col: pos.col,
                    name: word,
                })
            }
        })
    }

    fn mode(&mut self) -> Result<ClosureMode, ScriptError> {
        match self.peek() {
            Tok::Name(n) if n == "tight" => {
                self.bump();
                Ok(ClosureMode::Tight)
            }
            Tok::Name(n) if n == "ne" => {
                self.bump();
                Ok(ClosureMode::Ne)
            }
            _ => self.fail(&["`tight`", "`ne`"]),
        }
    }

    /// A polynomial runs until a `,`, `)` or `]` at nesting depth zero.
    fn poly(&mut self) -> Result<PolyExpr, ScriptError> {
        let start = self.pos;
        let mut toks = Vec::new();
        loop {
            let t = &self.toks[self.pos];
            let pt = match &t.tok {
                Tok::Int(v) => PolyToken::Int(*v),
                Tok::Name(n) => PolyToken::Name(n.clone()),
                Tok::Plus => PolyToken::Plus,
                Tok::Minus => PolyToken::Minus,
                Tok::Star => PolyToken::Star,
                Tok::Caret => PolyToken::Caret,
                _ => break,
            };
            // the column slot carries the token index so errors map back to line/col
            toks.push((pt, self.pos));
            self.pos += 1;
        }
        if toks.is_empty() {
            self.pos = start;
            return self.fail(&["a polynomial"]);
        }
        parse_tokens(&toks, self.pos).map_err(|e| match e {
            Error::PolySyntax { column, message } => {
                let t = &self.toks[column];
                ScriptError::Syntax {
                    line: t.line,
                    col: t.col,
                    message,
                }
            }
            other => ScriptError::Syntax {
                line: self.toks[start].line,
                col: self.toks[start].col,
                message: other.to_string(),
            },
        })
    }

    fn polys(&mut self, min: usize) -> Result<Vec<Arg>, ScriptError> {
        let mut out = Vec::new();
        if *self.peek() == Tok::RParen && min == 0 {
            return Ok(out);
        }
        out.push(Arg::Poly(self.poly()?));
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(Arg::Poly(self.poly()?));
        }
        Ok(out)
    }

    fn comma(&mut self) -> Result<(), ScriptError> {
        self.expect(Tok::Comma)
    }

    fn check_args(&mut self, kind: CheckKind) -> Result<Vec<Arg>, ScriptError> {
        self.expect(Tok::LParen)?;
        let args = match kind {
            CheckKind::Equal => {
                let a = self.expr()?;
                self.comma()?;
                vec![Arg::Expr(a), Arg::Expr(self.expr()?)]
            }
            CheckKind::Member => {
                let f = self.poly()?;
                self.comma()?;
                vec![Arg::Poly(f), Arg::Expr(self.expr()?)]
            }
            CheckKind::Sop | CheckKind::Regular => self.polys(1)?,
        };
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    fn report_args(&mut self, kind: ReportKind) -> Result<Vec<Arg>, ScriptError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        match kind {
            ReportKind::Closedness => {
                args.push(Arg::Expr(self.expr()?));
                self.comma()?;
                args.push(Arg::Mode(self.mode()?));
            }
            ReportKind::Contain => args.push(Arg::Expr(self.expr()?)),
            ReportKind::Structural => {
                args.push(Arg::Expr(self.expr()?));
                if *self.peek() == Tok::Comma {
                    self.bump();
                    self.keyword("unmixed")?;
                    args.push(Arg::Word("unmixed".into()));
                }
            }
            ReportKind::Capture => args = self.polys(1)?,
            ReportKind::Netest => args = self.polys(0)?,
            ReportKind::Frobenius => {
                args.push(Arg::Expr(self.expr()?));
                self.comma()?;
                args.push(Arg::Poly(self.poly()?));
                self.comma()?;
                args.push(Arg::Poly(self.poly()?));
                if *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(Arg::Int(self.int()?));
                    self.comma()?;
                    args.push(Arg::Int(self.int()?));
                }
            }
            ReportKind::Cm => {
                args.push(Arg::Expr(self.expr()?));
                if *self.peek() == Tok::Comma {
                    self.bump();
                    args.extend(self.polys(1)?);
                }
            }
            ReportKind::Classify => {}
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_declaration() {
        let s = parse_script("ring S = poly(p=2; T,X,Y,Z)").unwrap();
        assert_eq!(s.statements.len(), 1);
        assert_eq!(
            s.statements[0].node,
            Stmt::Ring {
                name: "S".into(),
                base: RingBase::Poly {
                    p: 2,
                    vars: vec!["T".into(), "X".into(), "Y".into(), "Z".into()]
                },
                quotient: None,
                primes: vec![],
            }
        );
    }

    #[test]
    fn let_and_nesting() {
        let src = "ring S = poly(p=2; T,X,Y,Z)\nlet I = ideal(Z, X-T)\nlet P = ideal(T)\nlet Q = ideal(X)\nlet K = meet(I+P, I+Q)";
        let s = parse_script(src).unwrap();
        match &s.statements[1].node {
            Stmt::Let { expr: Expr::Ideal(g), .. } => assert_eq!(g.len(), 2),
            other => panic!("{other:?}"),
        }
        match &s.statements[4].node {
            Stmt::Let { expr: Expr::Meet(a, b), .. } => {
                assert!(matches!(**a, Expr::Sum(_, _)));
                assert!(matches!(**b, Expr::Sum(_, _)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(s.statements[4].pos, Pos { line: 5, col: 1 });
    }

    #[test]
    fn diagnostics() {
        let dup = parse_script("ring S = poly(p=2; x)\nlet I = ideal(x)\nlet I = ideal(x)").unwrap_err();
        assert_eq!(
            dup,
            ScriptError::DuplicateBinding {
                line: 3,
                col: 5,
                name: "I".into()
            }
        );
        let unk = parse_script("ring S = poly(p=2; x)\nlet I = J + ideal(x)").unwrap_err();
        assert!(matches!(unk, ScriptError::UnknownIdentifier { line: 2, col: 9, .. }));
        let syn = parse_script("ring S = poly(p=2; x)\nlet I = ideal(2 x)").unwrap_err();
        assert!(matches!(syn, ScriptError::Syntax { line: 2, col: 17, .. }), "{syn:?}");
        let syn = parse_script("check equal(").unwrap_err();
        match syn {
            ScriptError::Syntax { message, .. } => assert!(message.contains("expected")),
            other => panic!("{other:?}"),
        }
        assert!(parse_script("let ideal = ideal(x)").is_err());
        assert!(parse_script("").unwrap().statements.is_empty());
    }

    #[test]
    fn print_then_parse_is_identity() {
        let src = "ring S = poly(p=3; a,b,c)\nlet A = ideal(a^2 - 2*b*c + 1, c)\nlet B = A + ideal(b) * (A + A)\nlet C = (A + B) + A\n\
                   let D = bracket(colon(A, B), 2) * dc(C, ne)\nlet E = ker(s, t; a -> s^2, b -> s*t, c -> -t)\n\
                   ring R = S / meet(A, B) with primes [A, ideal(a, b, c)]\ncheck member(a*b, A)\ncheck sop(a, b - c)\n\
                   report structural(A, unmixed)\nreport frobenius(A, a, b + c, 0, 3)\nreport netest()\nreport classify()\nreport cm(A, a)";
        let s = parse_script(src).unwrap();
        let printed = s.to_string();
        let again = parse_script(&printed).unwrap();
        assert_eq!(s, again);
        assert_eq!(printed, again.to_string());
    }
}
