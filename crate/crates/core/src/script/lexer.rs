use super::ScriptError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Int(v) => format!("`{v}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Splits a script into tokens. `#` starts a comment running to the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    for (ln, text) in src.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let single = match c {
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                ',' => Some(Tok::Comma),
                ';' => Some(Tok::Semi),
                '=' => Some(Tok::Eq),
                '/' => Some(Tok::Slash),
                '+' => Some(Tok::Plus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Token { tok, line, col });
                i += 1;
                continue;
            }
            match c {
                '#' => break,
                c if c.is_whitespace() => i += 1,
                '-' => {
                    if chars.get(i + 1) == Some(&'>') {
                        out.push(Token { tok: Tok::Arrow, line, col });
                        i += 2;
                    } else {
                        out.push(Token { tok: Tok::Minus, line, col });
                        i += 1;
                    }
                }
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    let v = s.parse::<u64>().map_err(|_| ScriptError::Syntax {
                        line,
                        col,
                        message: format!("integer `{s}` is too large"),
                    })?;
                    out.push(Token { tok: Tok::Int(v), line, col });
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push(Token {
                        tok: Tok::Name(chars[start..i].iter().collect()),
                        line,
                        col,
                    });
                }
                other => {
                    return Err(ScriptError::Syntax {
                        line,
                        col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
    }
    let line = src.lines().count().max(1);
    let col = src.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let toks = lex("let I = ideal(Z, X-T) # note\n  ker(s; X -> s^2)").unwrap();
        assert_eq!(toks[0].tok, Tok::Name("let".into()));
        assert_eq!((toks[3].line, toks[3].col), (1, 9));
        let arrow = toks.iter().find(|t| t.tok == Tok::Arrow).unwrap();
        assert_eq!((arrow.line, arrow.col), (2, 12));
        assert_eq!(toks.last().unwrap().tok, Tok::Eof);
        assert!(matches!(lex("let a = $"), Err(ScriptError::Syntax { line: 1, col: 9, .. })));
    }
}
